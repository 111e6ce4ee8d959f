// Copyright 2026 The opint authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OPINT_MATRIX_HPP
#define OPINT_MATRIX_HPP

#include <complex>
#include <vector>

#include "opint/error.hpp"

namespace opint {

using Cplx = std::complex<double>;

// Dense complex matrix, row-major.  Everything downstream (spectral measures,
// operator integrals, norm audits) consumes this one type; values are treated
// as immutable once built.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {
    if (rows <= 0 || cols <= 0)
      throw Error(ErrorCode::kInvalidArgument, "matrix dimensions must be positive");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Cplx& operator()(int r, int c) { return data_[size_t(r) * cols_ + c]; }
  const Cplx& operator()(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

  std::vector<Cplx>& data() { return data_; }
  const std::vector<Cplx>& data() const { return data_; }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(Cplx s);

  Matrix adjoint() const;
  Cplx trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  bool all_finite() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Cplx> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(Cplx s, Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);

// y = A x and y = A* x for vectors given as raw spans of length cols()/rows().
void matvec(const Matrix& a, const Cplx* x, Cplx* y);
void matvec_adjoint(const Matrix& a, const Cplx* x, Cplx* y);

}  // namespace opint

#endif  // OPINT_MATRIX_HPP
