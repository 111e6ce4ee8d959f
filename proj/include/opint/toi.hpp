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

#ifndef OPINT_TOI_HPP
#define OPINT_TOI_HPP

#include <array>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "opint/matrix.hpp"
#include "opint/spectral.hpp"

namespace opint {

// Triple operator integrals over three finite spectral measures.  Integrand
// factorizations are stored as value tables on the spectral supports: table
// index = spectral point index of the corresponding measure.  Every estimate
// in the Schatten audits depends only on values on the joint spectrum, so
// tables keep the evaluators exact.

using ValueTable = std::vector<Cplx>;  // one function, tabulated on a support

// Psi = sum_{j,k} alpha_j(x1) beta_{jk}(x2) gamma_k(x3).
struct HaagerupRep {
  std::vector<ValueTable> alpha;               // J tables on support 1
  std::vector<std::vector<ValueTable>> beta;   // J x K tables on support 2
  std::vector<ValueTable> gamma;               // K tables on support 3
};

// First kind: Psi = sum_{j,k} alpha_j(x1) beta_k(x2) gamma_{jk}(x3).
struct HaagerupLikeRep1 {
  std::vector<ValueTable> alpha;               // J tables on support 1
  std::vector<ValueTable> beta;                // K tables on support 2
  std::vector<std::vector<ValueTable>> gamma;  // J x K tables on support 3
  double declared_bound = -1.0;                // set by builders; -1 = none
};

// Second kind: Psi = sum_{j,k} alpha_{jk}(x1) beta_j(x2) gamma_k(x3).
struct HaagerupLikeRep2 {
  std::vector<std::vector<ValueTable>> alpha;  // J x K tables on support 1
  std::vector<ValueTable> beta;                // J tables on support 2
  std::vector<ValueTable> gamma;               // K tables on support 3
  double declared_bound = -1.0;
};

// Plain projective factorization sum_n phi_n(x1) psi_n(x2) chi_n(x3).
struct ProjectiveRep {
  std::vector<std::array<ValueTable, 3>> terms;
};

// The three factor norms: L^inf(l2) for list factors, L^inf(B) for the
// matrix factor (sup over support of the operator norm of the slice).
struct FactorNorms {
  double first = 0.0, second = 0.0, third = 0.0;
  double product() const { return first * second * third; }
};

FactorNorms factor_norms(const HaagerupRep& rep);
FactorNorms factor_norms(const HaagerupLikeRep1& rep);
FactorNorms factor_norms(const HaagerupLikeRep2& rep);

// Product of the factor norms of this representation: an upper bound on the
// (infimal) tensor norm.  The infimum over representations is never computed.
double haagerup_norm_of_rep(const HaagerupRep& rep);
double haagerup_norm_of_rep(const HaagerupLikeRep1& rep);
double haagerup_norm_of_rep(const HaagerupLikeRep2& rep);

// Ground truth at finite dimension: sum_{i,j,k} Psi(l_i, m_j, n_k) P_i T Q_j R S_k.
Matrix toi_direct(const std::function<Cplx(Cplx, Cplx, Cplx)>& psi,
                  const SpectralMeasure& sm1, const SpectralMeasure& sm2,
                  const SpectralMeasure& sm3, const Matrix& t, const Matrix& r);

// Haagerup evaluation: rectangular partial sums of
// sum_{j,k} (int alpha_j dE1) T (int beta_{jk} dE2) R (int gamma_k dE3).
Matrix toi_haagerup(const HaagerupRep& rep, const SpectralMeasure& sm1,
                    const SpectralMeasure& sm2, const SpectralMeasure& sm3, const Matrix& t,
                    const Matrix& r);

// Projective evaluation, term by term.
Matrix toi_projective(const ProjectiveRep& rep, const SpectralMeasure& sm1,
                      const SpectralMeasure& sm2, const SpectralMeasure& sm3, const Matrix& t,
                      const Matrix& r);

// Embedding of a projective rep into the Haagerup form (diagonal beta).
HaagerupRep embed_projective(const ProjectiveRep& rep);

// First/second-kind evaluations through trace duality: W is assembled by
// pairing the flipped-integrand TOI against every matrix unit.  T (resp. R)
// sits in the S_p slot, p in [1, 2].
Matrix toi_haagerup_like_1(const HaagerupLikeRep1& rep, const SpectralMeasure& sm1,
                           const SpectralMeasure& sm2, const SpectralMeasure& sm3,
                           const Matrix& t, const Matrix& r, double p);
Matrix toi_haagerup_like_2(const HaagerupLikeRep2& rep, const SpectralMeasure& sm1,
                           const SpectralMeasure& sm2, const SpectralMeasure& sm3,
                           const Matrix& t, const Matrix& r, double p);

// ---------------------------------------------------------------------------
// Inequality audits.

enum class BoundTheorem {
  kT41,     // Haagerup rep, p = 2, T bounded, R Hilbert-Schmidt
  kT43i,    // Haagerup rep, p >= 2, T bounded, R in S_p
  kT43ii,   // Haagerup rep, p >= 2, T in S_p, R bounded
  kT43iii,  // Haagerup rep, 1/p + 1/q <= 1/2, r from the Hoelder rule
  kT51,     // first kind, T in S_p with p in [1,2], R in S_q, 1/p + 1/q <= 1
  kT52,     // second kind, R in S_q with q in [1,2], T in S_p, 1/p + 1/q <= 1
};

struct SchattenReport {
  std::string context;
  double p = 0.0, q = 0.0, r = 0.0;
  double measured = 0.0, bound = 0.0;
  bool pass = false;
};

using AnyRep = std::variant<HaagerupRep, HaagerupLikeRep1, HaagerupLikeRep2>;

// Evaluates W with the evaluator matching the rep kind, measures the relevant
// Schatten norm, and compares against the factor-norm bound.  Throws
// RegimeMismatch when the exponents violate the theorem's hypotheses instead
// of reporting a vacuous pass.  q may be infinity where the theorem allows a
// bounded operator in that slot.
SchattenReport audit_schatten_bounds(BoundTheorem theorem, const AnyRep& rep,
                                     const SpectralMeasure& sm1, const SpectralMeasure& sm2,
                                     const SpectralMeasure& sm3, const Matrix& t,
                                     const Matrix& r, double p, double q);

const char* bound_theorem_name(BoundTheorem theorem);

}  // namespace opint

#endif  // OPINT_TOI_HPP
