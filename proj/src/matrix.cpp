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

#include "opint/matrix.hpp"

#include <cmath>

namespace opint {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kNotNormal: return "NotNormal";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kMissingDerivative: return "MissingDerivative";
    case ErrorCode::kNotTorusFunction: return "NotTorusFunction";
    case ErrorCode::kDegreeTooHigh: return "DegreeTooHigh";
    case ErrorCode::kTruncationInsufficient: return "TruncationInsufficient";
    case ErrorCode::kSupportNotCovered: return "SupportNotCovered";
    case ErrorCode::kRegimeMismatch: return "RegimeMismatch";
    case ErrorCode::kConstraintViolated: return "ConstraintViolated";
    case ErrorCode::kUnsupportedRepresentation: return "UnsupportedRepresentation";
    case ErrorCode::kMissingFactorization: return "MissingFactorization";
    case ErrorCode::kInternal: return "InternalError";
  }
  return "UnknownError";
}

namespace {
void require_same_shape(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::kDimensionMismatch, "matrix shapes differ");
}
}  // namespace

Matrix& Matrix::operator+=(const Matrix& o) {
  require_same_shape(*this, o);
  for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_same_shape(*this, o);
  for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(Cplx s) {
  for (auto& v : data_) v *= s;
  return *this;
}

Matrix Matrix::adjoint() const {
  Matrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

Cplx Matrix::trace() const {
  if (!square()) throw Error(ErrorCode::kDimensionMismatch, "trace of non-square matrix");
  Cplx t = 0.0;
  for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (const auto& v : data_) m = std::max(m, std::abs(v));
  return m;
}

bool Matrix::all_finite() const {
  for (const auto& v : data_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(Cplx s, Matrix a) { return a *= s; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::kDimensionMismatch, "matrix product shapes incompatible");
  Matrix c(a.rows(), b.cols());
  const int n = a.rows(), k = a.cols(), m = b.cols();
  for (int i = 0; i < n; ++i) {
    for (int l = 0; l < k; ++l) {
      const Cplx ail = a(i, l);
      if (ail == 0.0) continue;
      const Cplx* brow = &b.data()[size_t(l) * m];
      Cplx* crow = &c.data()[size_t(i) * m];
      for (int j = 0; j < m; ++j) crow[j] += ail * brow[j];
    }
  }
  return c;
}

void matvec(const Matrix& a, const Cplx* x, Cplx* y) {
  const int n = a.rows(), m = a.cols();
  for (int i = 0; i < n; ++i) {
    Cplx s = 0.0;
    const Cplx* row = &a.data()[size_t(i) * m];
    for (int j = 0; j < m; ++j) s += row[j] * x[j];
    y[i] = s;
  }
}

void matvec_adjoint(const Matrix& a, const Cplx* x, Cplx* y) {
  const int n = a.rows(), m = a.cols();
  for (int j = 0; j < m; ++j) y[j] = 0.0;
  for (int i = 0; i < n; ++i) {
    const Cplx* row = &a.data()[size_t(i) * m];
    const Cplx xi = x[i];
    for (int j = 0; j < m; ++j) y[j] += std::conj(row[j]) * xi;
  }
}

}  // namespace opint
