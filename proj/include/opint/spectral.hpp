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

#ifndef OPINT_SPECTRAL_HPP
#define OPINT_SPECTRAL_HPP

#include <functional>
#include <vector>

#include "opint/matrix.hpp"

namespace opint {

// Finite resolution of the identity: eigenvalues paired with orthogonal
// projectors.  Degenerate (and near-degenerate, see cluster rule below)
// eigenvalues share one projector, so divided differences downstream see
// exact coincidence instead of nearly-singular quotients.
struct SpectralPoint {
  Cplx value;
  Matrix projector;
};

struct SpectralMeasure {
  int dim = 0;
  std::vector<SpectralPoint> points;
};

enum class OperatorKind { kHermitian, kUnitary };

// Full eigendecomposition of a Hermitian matrix: Householder tridiagonal
// reduction followed by implicit-shift QL, eigenvalues ascending, eigenvectors
// in the columns of *vectors.
void hermitian_eigen(const Matrix& h, std::vector<double>* values, Matrix* vectors);

// Spectral decomposition with validation of the kind (NotNormal on failure)
// and eigenvalue clustering: values closer than 1e-8 * (spectral diameter + 1)
// are merged into one spectral point with the summed projector.  tol <= 0
// selects the default 1e-10 * frobenius_norm(h) kind tolerance.
SpectralMeasure spectral_decompose(const Matrix& h, OperatorKind kind, double tol = -1.0);

// Sum of value * projector; the round-trip oracle for spectral_decompose.
Matrix reconstruct(const SpectralMeasure& sm);

// Singular values in descending order via one-sided Jacobi.  The Jacobi
// iteration keeps small singular values accurate in a relative sense, which
// the p < 1 quasi-norms need.
std::vector<double> singular_values(const Matrix& m);

// (sum sigma_i^p)^(1/p) for finite p > 0 (quasi-norm below p = 1), largest
// singular value for p = infinity.
double schatten_norm(const Matrix& m, double p);

// Largest singular value.  Small matrices go through the Jacobi SVD; large
// ones through Lanczos on A*A with full reorthogonalization.
double operator_norm(const Matrix& m);

// Lanczos bound for the top singular value of an operator given by matvec
// callbacks (apply: y = Ax, apply_adjoint: y = A*x), both on vectors of
// length n.  Deterministic start vector.
double top_singular_value(const std::function<void(const Cplx*, Cplx*)>& apply,
                          const std::function<void(const Cplx*, Cplx*)>& apply_adjoint,
                          int n, int max_iter = 400);

}  // namespace opint

#endif  // OPINT_SPECTRAL_HPP
