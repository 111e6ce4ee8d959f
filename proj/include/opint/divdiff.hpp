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

#ifndef OPINT_DIVDIFF_HPP
#define OPINT_DIVDIFF_HPP

#include "opint/function.hpp"
#include "opint/toi.hpp"

namespace opint {

// First/second divided differences of a bivariate function, with the partial
// derivative on the diagonal.  Structured representations use cancellation-
// free formulas, so coincident and nearly-coincident arguments are safe.
Cplx divided_diff_1(const Function2D& f, double x1, double x2, double y);
Cplx divided_diff_2(const Function2D& f, double x, double y1, double y2);

// sin(x - j pi)/(x - j pi) for |j| <= J, index j + J.
std::vector<double> sinc_weights(double x, int J);

// Matrix over node pairs: entry (j, k) = (f(j pi, y) - f(k pi, y))/(j pi - k pi)
// off the diagonal, df/dx at (j pi, y) on it.  Requires bandlimit <= 1.
struct DividedDiffMatrix {
  double y = 0.0;
  int truncation = 0;  // J
  Matrix entries;      // (2J+1) x (2J+1)
};
DividedDiffMatrix divdiff_matrix(const Function2D& f, double y, int J);

// Truncated double sinc series for the first divided difference.
Cplx sinc_expand_D1(const Function2D& f, double x1, double x2, double y, int J);

// Split of the node matrix into the commutator part (zero diagonal) and the
// Bernstein part (diagonal of derivative samples); C + D = divdiff_matrix.
void hilbert_commutator_split(const std::vector<Cplx>& node_values,
                              const std::vector<Cplx>& node_derivs, Matrix* c_out,
                              Matrix* d_out);

// Truncated discrete Hilbert transform 1/(j - k), zero diagonal.
Matrix discrete_hilbert_matrix(int size);
// Operator norm of the truncation, matrix-free (circulant-embedded matvec
// plus Lanczos); increases to pi as size grows.
double discrete_hilbert_norm(int size);

// ---------------------------------------------------------------------------
// Torus machinery.

// Xi_n(z) = (z^{n+1} - z^{-n}) / ((2n+1)(z-1)), computed through the
// polynomial form (2n+1)^{-1} sum_{k=-n}^{n} z^k; stable at z = 1.
Cplx xi_kernel(int n, Cplx z);

// The k-th roots of unity e^{2 pi i m / count}, m = 0..count-1.
std::vector<Cplx> roots_of_unity(int count);

// Divided difference in the first torus variable via the geometric-sum form
// of (z1^j - z2^j)/(z1 - z2); exact at coincidence (complex derivative).
Cplx torus_divided_diff_1(const TrigPoly2& f, Cplx z1, Cplx z2, Cplx tau);
Cplx torus_divided_diff_2(const TrigPoly2& f, Cplx zeta, Cplx t1, Cplx t2);

// Matrix over Pi_{2n+1} x Pi_{2n+1} of first divided differences at tau;
// needs x-degree <= n (DegreeTooHigh otherwise).
Matrix torus_divdiff_matrix(const Function2D& f, Cplx tau, int n);

// ---------------------------------------------------------------------------
// Tensor-product representations of divided differences.

// Truncation radius from the node-coverage rule: the window [-J pi, J pi]
// covers sigma * support with at least `margin` spare nodes.
int choose_sinc_truncation(double sigma, double support_abs_max, int margin = 64);

// First-kind representation of D1 f for band-limited f (Fourier support of
// radius <= sigma): alpha_j(x1) = sinc(sigma x1 - j pi), beta_k likewise,
// gamma_{jk}(x3) = D1 f(j pi / sigma, k pi / sigma, x3), plus a scaled
// finite-support correction block that makes the evaluation on the given
// spectral supports exact.  declared_bound = 3 sigma sup|f| (1 + slack) with
// slack the correction weight; TruncationInsufficient when the window cannot
// cover the supports or the correction would dominate.
HaagerupLikeRep1 build_haagerup_like_rep_D1(const Function2D& f, double sigma, int J,
                                            const SpectralMeasure& sm1,
                                            const SpectralMeasure& sm2,
                                            const SpectralMeasure& sm3);

// Second-kind representation of D2 f, built by flipping the variables.
HaagerupLikeRep2 build_haagerup_like_rep_D2(const Function2D& f, double sigma, int J,
                                            const SpectralMeasure& sm1,
                                            const SpectralMeasure& sm2,
                                            const SpectralMeasure& sm3);

// Littlewood-Paley route for trig polynomials: one first-kind rep per dyadic
// piece, combined with weights proportional to the per-piece bounds, so the
// declared bound is (1 + max slack) * sum of piece bounds.
HaagerupLikeRep1 build_haagerup_like_rep_D1_besov(const Function2D& f,
                                                  const SpectralMeasure& sm1,
                                                  const SpectralMeasure& sm2,
                                                  const SpectralMeasure& sm3, int margin = 32);

// Certified upper bound for sup|f| on structured representations.
double sup_norm_bound(const Function2D& f);

}  // namespace opint

#endif  // OPINT_DIVDIFF_HPP
