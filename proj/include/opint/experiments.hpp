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

#ifndef OPINT_EXPERIMENTS_HPP
#define OPINT_EXPERIMENTS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "opint/divdiff.hpp"
#include "opint/function.hpp"
#include "opint/rng.hpp"
#include "opint/toi.hpp"

namespace opint {

// ---------------------------------------------------------------------------
// Reproducible instance generators.  Each scan derives one stream per trial
// from (seed, trial), so CSV outputs are identical at any parallelism level.

Matrix random_hermitian_spectrum(Rng& rng, int dim, double lo, double hi);
Matrix random_unitary_matrix(Rng& rng, int dim);
TrigPoly2 random_trig_poly(Rng& rng, int degree);
TrigPoly1 random_trig_poly_1d(Rng& rng, int degree);

// ---------------------------------------------------------------------------
// Perturbation identities.

struct IdentityReport {
  double residual_full = 0.0;    // two-term identity
  double residual_first = 0.0;   // first single-sided identity
  double residual_second = 0.0;  // second single-sided identity
  double max_residual() const;
};

// f(A1,B1) - f(A2,B2) against the two triple operator integrals, plus the two
// single-sided identities; residuals are ||lhs - rhs||_F / (1 + ||lhs||_F).
IdentityReport verify_identity_71(const Function2D& f, const Matrix& a1, const Matrix& a2,
                                  const Matrix& b1, const Matrix& b2);

// Unitary analog with torus divided differences.
IdentityReport verify_identity_121(const Function2D& f, const Matrix& u1, const Matrix& u2,
                                   const Matrix& v1, const Matrix& v2);

struct Identity102Report {
  double residual_first = 0.0;              // f(A,B) - f(aI,B) = (A-aI) D1-calculus
  double residual_second = 0.0;             // f(aI,B) - f(aI,bI) = (B-bI) D2-calculus
  std::vector<std::pair<double, double>> ratios;  // (p, Lipschitz ratio at (aI,bI))
  double max_residual() const { return std::max(residual_first, residual_second); }
};

Identity102Report verify_identity_102(const Function2D& f, const Matrix& a, const Matrix& b,
                                      double alpha, double beta,
                                      const std::vector<double>& ps);

struct IdentityTrialRow {
  int trial = 0;
  int dim = 0;
  double residual = 0.0;
  bool pass = false;
};

// which is "7.1", "12.1" or "10.2"; spectra are drawn inside [-3, 3] (and on
// the circle for 12.1) so 2pi-periodic trig polynomials need no rescaling.
std::vector<IdentityTrialRow> run_identity_trials(const std::string& which, int dim_max,
                                                  int trials, uint64_t seed, double tol);

// ---------------------------------------------------------------------------
// The DFT counterexample family.

struct CounterexampleInstance {
  int n = 0;
  Matrix tau;  // tau_jk = sqrt(N) conj(u_jk)
  Matrix dft;  // column k is the frame vector h_k, entries u_jk
  Matrix a1, a2, b;
  Function2D f;  // sum of tau_jk phi(x - 2j) phi(y - k) atoms
};

CounterexampleInstance build_counterexample(int n);

// f_eps(eps A_i, eps B) computed from the closed-form atoms evaluated on the
// integer spectra (phi is exactly 0 or 1 there); which selects A1 or A2.
Matrix counterexample_fab(const CounterexampleInstance& inst, int which, double eps = 1.0);

struct ScanRecord {
  std::string family;
  int n = 0;
  double p = 0.0;
  double epsilon = 1.0;
  double measured = 0.0;
  std::optional<double> predicted;
  std::optional<double> bound;
  bool pass = true;
};

// Lipschitz ratios of the family: measured ratio vs the N^{1/2-1/p} law.
std::vector<ScanRecord> measure_growth(const std::vector<int>& ns,
                                       const std::vector<double>& ps);

struct ScaledFamilyReport {
  int n = 0;
  double eps = 1.0;
  double diff_norm_op = 0.0;  // eps sqrt(N)
  double pert_norm_op = 0.0;  // eps
  std::vector<std::array<double, 3>> sp_rows;  // (p, diff = eps sqrt(N), pert = eps N^{1/p})
  double besov_base = 0.0;    // B^1_{inf,1} of f
  double besov_scaled = 0.0;  // same for f_eps when eps = 2^{-m}
};

ScaledFamilyReport scaled_counterexample(int n, double eps, const std::vector<double>& ps);

// family is "counterexample", "random-trigpoly" or "class-C".
std::vector<ScanRecord> lipschitz_scan(const std::string& family,
                                       const std::vector<double>& ps,
                                       const std::vector<int>& ns, int trials, uint64_t seed);

// ---------------------------------------------------------------------------
// Class-C (doubly factorized) estimates.

struct ClassCFunction {
  std::vector<std::pair<TrigPoly1, TrigPoly1>> primal;  // phi_n (x) psi_n(y)
  std::vector<std::pair<TrigPoly1, TrigPoly1>> sharp;   // the second factorization
};

struct ClassCReport {
  double c_norm = 0.0;    // Besov/sup mixed sum over both factorizations
  double measured = 0.0;  // ||f(A1,B1) - f(A2,B2)||_p
  double denom = 0.0;     // c_norm * (||A1-A2||_p + ||B1-B2||_p)
  double ratio = 0.0;
};

ClassCReport class_C_check(const ClassCFunction& f, const Matrix& a1, const Matrix& a2,
                           const Matrix& b1, const Matrix& b2, double p);

// ---------------------------------------------------------------------------
// Negative phenomenon probe: the p < 2 bound shape applied to the family.
// The fictitious bound nu * ||A1 - A2||_{S_q} (q conjugate to p) uses the
// N-independent representation bound nu = 3 sigma sup|f| (1 + slack); the
// measured/bound ratio then grows like N^{1/2 - 1/q}.

struct NegativeProbeRecord {
  int n = 0;
  double p = 0.0;       // claimed (false) exponent, < 2
  double q = 0.0;       // conjugate, where the growth shows
  double measured = 0.0;
  double bound_shape = 0.0;
  double ratio = 0.0;
};

std::vector<NegativeProbeRecord> schatten_negative_probe(const std::vector<int>& ns, double p);

// ---------------------------------------------------------------------------
// Randomized inequality audits over all six bound theorems.

std::vector<SchattenReport> run_bound_audits(BoundTheorem theorem, int trials, int dim_max,
                                             uint64_t seed);

// ---------------------------------------------------------------------------
// CSV emission (17 significant digits, "inf" for p = infinity).

std::string format_double17(double v);
std::string p_to_string(double p);
std::string scan_records_csv(const std::vector<ScanRecord>& records);
std::string schatten_reports_csv(const std::vector<SchattenReport>& reports);
std::string identity_rows_csv(const std::string& identity,
                              const std::vector<IdentityTrialRow>& rows);

}  // namespace opint

#endif  // OPINT_EXPERIMENTS_HPP
