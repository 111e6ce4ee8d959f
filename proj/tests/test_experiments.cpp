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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "opint/besov.hpp"
#include "opint/experiments.hpp"
#include "test_util.hpp"

using namespace opint;
using namespace opint::testutil;

namespace {

Function2D monomial_xy() {
  Callable2 c;
  c.eval = [](double x, double y) { return Cplx(x * y, 0.0); };
  c.dx = [](double, double y) { return Cplx(y, 0.0); };
  c.dy = [](double x, double) { return Cplx(x, 0.0); };
  return {c, std::nullopt};
}

}  // namespace

TEST_CASE("identity 7.1: trivial, monomial, and random trig-poly instances") {
  Rng rng(2026);
  Matrix a = random_hermitian(rng, 5), b = random_hermitian(rng, 5);
  Function2D f{random_trig_poly_in_tests(rng, 3), std::nullopt};
  IdentityReport trivial = verify_identity_71(f, a, a, b, b);
  CHECK(trivial.residual_full < 1e-13);

  // Monomials close in closed form for any Hermitian input.
  Callable2 x2y;
  x2y.eval = [](double x, double y) { return Cplx(x * x * y, 0.0); };
  x2y.dx = [](double x, double y) { return Cplx(2.0 * x * y, 0.0); };
  x2y.dy = [](double x, double) { return Cplx(x * x, 0.0); };
  for (int trial = 0; trial < 5; ++trial) {
    int n = 2 + int(rng.next_u64() % 5);
    Matrix a1 = random_hermitian(rng, n), a2 = random_hermitian(rng, n);
    Matrix b1 = random_hermitian(rng, n), b2 = random_hermitian(rng, n);
    CHECK(verify_identity_71(monomial_xy(), a1, a2, b1, b2).max_residual() < 1e-10);
    CHECK(verify_identity_71(Function2D{x2y, std::nullopt}, a1, a2, b1, b2).max_residual() <
          1e-10);
  }

  auto rows = run_identity_trials("7.1", 8, 20, 0x5EED, 1e-8);
  for (const auto& row : rows) {
    CHECK(row.pass);
    CHECK(row.residual <= 1e-8);
  }
}

TEST_CASE("identity 12.1: trivial, bilinear, and random torus instances") {
  Rng rng(2027);
  Matrix u = random_unitary(rng, 4), v = random_unitary(rng, 4);
  TrigPoly2 zt;
  zt.add(1, 1, 1.0);  // f = zeta tau
  Function2D f{zt, std::nullopt};
  CHECK(verify_identity_121(f, u, u, v, v).residual_full < 1e-13);

  for (int trial = 0; trial < 5; ++trial) {
    Matrix u1 = random_unitary(rng, 4), u2 = random_unitary(rng, 4);
    Matrix v1 = random_unitary(rng, 4), v2 = random_unitary(rng, 4);
    CHECK(verify_identity_121(f, u1, u2, v1, v2).max_residual() < 1e-10);
  }

  auto rows = run_identity_trials("12.1", 6, 20, 0x5EED, 1e-8);
  for (const auto& row : rows) CHECK(row.pass);
}

TEST_CASE("identity 10.2: points of Lipschitzness at scalar pairs") {
  Rng rng(2028);
  int n = 4;
  double alpha = 0.6, beta = -0.9;
  Matrix ai = Cplx(alpha, 0.0) * Matrix::identity(n);
  Matrix bi = Cplx(beta, 0.0) * Matrix::identity(n);
  Function2D f{random_trig_poly_in_tests(rng, 3), std::nullopt};
  Identity102Report trivial = verify_identity_102(f, ai, bi, alpha, beta, {1.0, 2.0});
  CHECK(trivial.max_residual() < 1e-12);
  for (const auto& [p, ratio] : trivial.ratios) CHECK(ratio == 0.0);

  // f = x y with alpha = 0: f(A,B) - f(0,B) = A B exactly.
  for (int trial = 0; trial < 5; ++trial) {
    Matrix a = random_hermitian(rng, n), b = random_hermitian(rng, n);
    Identity102Report rep = verify_identity_102(monomial_xy(), a, b, 0.0, 0.0, {});
    CHECK(rep.residual_first < 1e-11);
  }

  auto rows = run_identity_trials("10.2", 8, 20, 0x5EED, 1e-10);
  for (const auto& row : rows) CHECK(row.pass);

  // Lipschitz ratios at scalar pairs stay bounded for every p > 0, quasi-norm
  // exponents included.
  Rng rng2(2029);
  double worst = 0.0;
  for (int trial = 0; trial < 15; ++trial) {
    Rng r = rng2.fork(trial);
    int dim = 2 + int(r.next_u64() % 6);
    Function2D g{random_trig_poly_in_tests(r, 4), std::nullopt};
    Matrix a = random_hermitian(r, dim), b = random_hermitian(r, dim);
    auto rep = verify_identity_102(g, a, b, r.uniform(-1.0, 1.0), r.uniform(-1.0, 1.0),
                                   {0.5, 1.0, 2.0, std::numeric_limits<double>::infinity()});
    for (const auto& [p, ratio] : rep.ratios) worst = std::max(worst, ratio);
  }
  CHECK(worst < 10.0);
}

TEST_CASE("counterexample instance invariants") {
  for (int n : {2, 5, 8}) {
    CounterexampleInstance inst = build_counterexample(n);
    // The frame correlation (h_k, g_j) = u_jk holds by construction; check
    // unitarity of the DFT frame and the operator definitions.
    Matrix gram = inst.dft.adjoint() * inst.dft;
    CHECK((gram - Matrix::identity(n)).frobenius_norm() < 1e-12 * n);
    CHECK(operator_norm(inst.a1 - inst.a2) == doctest::Approx(1.0).epsilon(1e-12));
    for (double p : {1.0, 2.0, 3.0})
      CHECK(schatten_norm(inst.a1 - inst.a2, p) ==
            doctest::Approx(std::pow(double(n), 1.0 / p)).epsilon(1e-12));

    // f(A2, B) vanishes identically; f(A1, B) has Schatten norm sqrt(N) in
    // every p.
    Matrix f2 = counterexample_fab(inst, 2);
    CHECK(f2.frobenius_norm() < 1e-12);
    Matrix f1 = counterexample_fab(inst, 1);
    for (double p : {1.0, 2.0, 4.0, std::numeric_limits<double>::infinity()})
      CHECK(schatten_norm(f1, p) == doctest::Approx(std::sqrt(double(n))).epsilon(1e-10));

    // tau has constant modulus sqrt(N) * |u| = 1.
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) CHECK(std::abs(inst.tau(j, k)) == doctest::Approx(1.0));
  }
  CounterexampleInstance two = build_counterexample(2);
  Matrix diff = counterexample_fab(two, 1) - counterexample_fab(two, 2);
  CHECK(operator_norm(diff) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("closed-form family values agree with the generic calculus at small N") {
  for (int n : {2, 4, 6}) {
    CounterexampleInstance inst = build_counterexample(n);
    SpectralMeasure ea1 = spectral_decompose(inst.a1, OperatorKind::kHermitian);
    SpectralMeasure ea2 = spectral_decompose(inst.a2, OperatorKind::kHermitian);
    SpectralMeasure eb = spectral_decompose(inst.b, OperatorKind::kHermitian);
    CHECK((apply_f_AB(inst.f, ea1, eb) - counterexample_fab(inst, 1)).frobenius_norm() <
          1e-10 * n);
    CHECK((apply_f_AB(inst.f, ea2, eb) - counterexample_fab(inst, 2)).frobenius_norm() <
          1e-10 * n);
  }
}

TEST_CASE("growth law N^(1/2 - 1/p)") {
  const double inf = std::numeric_limits<double>::infinity();
  auto records = measure_growth({16, 64}, {1.0, 2.0, 4.0, inf});
  for (const auto& rec : records) {
    CHECK(rec.pass);
    REQUIRE(rec.predicted.has_value());
    CHECK(std::abs(rec.measured - *rec.predicted) <= 1e-9 * *rec.predicted);
  }
  // Frozen spot values: (16, inf) -> 4, (16, 2) -> 1, (64, 4) -> 64^(1/4).
  CHECK(records[3].measured == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(records[1].measured == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(records[6].measured == doctest::Approx(2.8284271247461903).epsilon(1e-9));

  // Fractional exponents up to N = 256 follow the same law.
  for (const auto& rec : measure_growth({4, 256}, {1.5, 3.0})) {
    double expo = 0.5 - 1.0 / rec.p;
    CHECK(rec.measured == doctest::Approx(std::pow(double(rec.n), expo)).epsilon(1e-9));
  }
}

TEST_CASE("scaled family: norms scale linearly, Besov norm does not move") {
  ScaledFamilyReport rep = scaled_counterexample(16, 0.25, {1.0, 3.0});
  CHECK(rep.diff_norm_op == doctest::Approx(1.0).epsilon(1e-9));   // eps sqrt(N)
  CHECK(rep.pert_norm_op == doctest::Approx(0.25).epsilon(1e-9));  // eps
  for (const auto& row : rep.sp_rows) {
    double p = row[0];
    CHECK(row[1] == doctest::Approx(0.25 * 4.0).epsilon(1e-9));
    CHECK(row[2] == doctest::Approx(0.25 * std::pow(16.0, 1.0 / p)).epsilon(1e-9));
  }
  CHECK(rep.besov_base > 0.0);
  CHECK(std::abs(rep.besov_scaled - rep.besov_base) <= 1e-9 * rep.besov_base);

  ScaledFamilyReport unit = scaled_counterexample(9, 1.0, {});
  CHECK(unit.diff_norm_op == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(unit.pert_norm_op == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("lipschitz scans: family laws and stability of random families") {
  auto ce = lipschitz_scan("counterexample", {1.0, 3.0}, {4, 16, 64}, 1, 1);
  for (const auto& rec : ce) {
    double expo = 0.5 - 1.0 / rec.p;
    CHECK(rec.measured == doctest::Approx(std::pow(double(rec.n), expo)).epsilon(1e-9));
  }

  auto rt = lipschitz_scan("random-trigpoly", {2.0}, {4, 8}, 4, 0x5EED);
  REQUIRE(rt.size() == 2);
  for (const auto& rec : rt) {
    CHECK(rec.measured > 0.0);
    CHECK(std::isfinite(rec.measured));
  }

  auto cc = lipschitz_scan("class-C", {2.0}, {4}, 3, 0x5EED);
  REQUIRE(cc.size() == 1);
  CHECK(cc[0].measured > 0.0);
  CHECK(std::isfinite(cc[0].measured));

  CHECK_THROWS_AS((void)lipschitz_scan("nope", {1.0}, {4}, 1, 1), Error);
}

TEST_CASE("class-C check") {
  Rng rng(2030);
  Matrix a1 = random_hermitian(rng, 4), b1 = random_hermitian(rng, 4);
  Matrix a2 = random_hermitian(rng, 4), b2 = random_hermitian(rng, 4);

  ClassCFunction zero;
  zero.primal.emplace_back(TrigPoly1{}, TrigPoly1{});
  zero.sharp = zero.primal;
  ClassCReport rep = class_C_check(zero, a1, a2, b1, b2, 2.0);
  CHECK(rep.measured == 0.0);
  CHECK(rep.c_norm == 0.0);

  // One-factor case f = phi(x) * 1: the bound carries the Besov norm of phi.
  ClassCFunction onef;
  TrigPoly1 phi;
  phi.add(1, 0.7);
  phi.add(-2, Cplx(0.0, 0.4));
  TrigPoly1 one;
  one.add(0, 1.0);
  onef.primal.emplace_back(phi, one);
  onef.sharp = onef.primal;
  LPFilterBank bank = make_filter(FilterKind::kDefault, {});
  rep = class_C_check(onef, a1, a2, b1, b2, 2.0);
  CHECK(rep.c_norm == doctest::Approx(besov_norm_1_inf_1(phi, bank) * 1.0 +
                                      sup_norm_torus(phi) * 1.0)
                          .epsilon(1e-12));
  CHECK(rep.ratio >= 0.0);

  ClassCFunction missing;
  missing.primal = onef.primal;
  CHECK_THROWS_AS((void)class_C_check(missing, a1, a2, b1, b2, 2.0), Error);

  for (double p : {1.0, 2.0, std::numeric_limits<double>::infinity()}) {
    Rng r2(2031);
    ClassCFunction f;
    for (int i = 0; i < 3; ++i) {
      TrigPoly1 u, v;
      for (int j = -3; j <= 3; ++j) {
        u.add(j, r2.complex_in_disc() / double(1 + j * j));
        v.add(j, r2.complex_in_disc() / double(1 + j * j));
      }
      f.primal.emplace_back(u, v);
    }
    f.sharp = f.primal;
    ClassCReport rp = class_C_check(f, a1, a2, b1, b2, p);
    CHECK(std::isfinite(rp.ratio));
    CHECK(rp.ratio < 50.0);  // a fitted-constant sanity envelope
  }
}

TEST_CASE("ratio slopes: exact growth above p = 2, no trend at p <= 2") {
  auto fit_slope = [](const std::vector<std::pair<double, double>>& pts) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [x, y] : pts) {
      double lx = std::log(x), ly = std::log(y);
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
    }
    double n = double(pts.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
  };

  for (double p : {3.0, 4.0}) {
    auto recs = measure_growth({4, 16, 64, 256}, {p});
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : recs) pts.emplace_back(double(r.n), r.measured);
    CHECK(std::abs(fit_slope(pts) - (0.5 - 1.0 / p)) <= 0.02);
  }

  for (double p : {1.5, 2.0}) {
    auto recs = lipschitz_scan("random-trigpoly", {p}, {4, 8, 16}, 6, 0x5EED);
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : recs) pts.emplace_back(double(r.n), r.measured);
    CHECK(fit_slope(pts) <= 0.1);
  }
}

TEST_CASE("no Hoelder-type estimate survives the scaled family") {
  // At eps = N^{-1/2} the difference norm is exactly 1 while the perturbation
  // is N^{-1/2}, so diff <= C pert^alpha fails once N^{alpha/2} > C.  The
  // bound N > C^{2/alpha} is measured directly where the required N fits the
  // desk-scale grid; beyond it the violation follows from the same power law
  // that the growth suite pins to 1e-9.
  for (double alpha : {0.3, 0.6, 0.9}) {
    for (double c : {1.0, 10.0}) {
      double n_star = std::pow(c, 2.0 / alpha);
      int n = 4;
      while (n <= 256 && double(n) <= n_star) n *= 2;
      if (double(n) <= n_star || n > 256) continue;  // out of measurable range
      CounterexampleInstance inst = build_counterexample(n);
      double eps = 1.0 / std::sqrt(double(n));
      Matrix diff = counterexample_fab(inst, 1, eps) - counterexample_fab(inst, 2, eps);
      double diff_norm = operator_norm(diff);
      double pert_norm = operator_norm(Cplx(eps, 0.0) * (inst.a1 - inst.a2));
      CHECK(diff_norm > c * std::pow(pert_norm, alpha));
    }
  }
  // A measured instance clearing C = 10 at alpha = 0.9 exists in-grid.
  CounterexampleInstance inst = build_counterexample(256);
  double eps = 1.0 / 16.0;
  Matrix diff = counterexample_fab(inst, 1, eps) - counterexample_fab(inst, 2, eps);
  CHECK(operator_norm(diff) > 10.0 * std::pow(eps, 0.9));
}

TEST_CASE("the p < 2 bound shape fails with growing N") {
  auto probe = schatten_negative_probe({4, 64}, 1.0);
  REQUIRE(probe.size() == 2);
  CHECK(std::isinf(probe[0].q));
  // ratio grows like sqrt(N): factor 4 between N = 4 and N = 64.
  CHECK(probe[1].ratio / probe[0].ratio == doctest::Approx(4.0).epsilon(1e-9));
  CHECK_THROWS_AS((void)schatten_negative_probe({4}, 2.5), Error);
}

TEST_CASE("randomized audits pass across all six theorems") {
  for (BoundTheorem thm : {BoundTheorem::kT41, BoundTheorem::kT43i, BoundTheorem::kT43ii,
                           BoundTheorem::kT43iii, BoundTheorem::kT51, BoundTheorem::kT52}) {
    auto reports = run_bound_audits(thm, 12, 6, 0x5EED);
    for (const auto& rep : reports) {
      CHECK(rep.pass);
      CHECK(rep.measured <= rep.bound * (1.0 + 1e-9));
    }
  }
}

TEST_CASE("CSV output: schema, literals, determinism") {
  const double inf = std::numeric_limits<double>::infinity();
  auto records = measure_growth({4}, {1.0, inf});
  std::string csv = scan_records_csv(records);
  CHECK(csv.rfind("family,N,p,epsilon,measured,predicted,bound,verdict\n", 0) == 0);
  CHECK(csv.find(",inf,") != std::string::npos);
  CHECK(csv.find("counterexample,4,1,") != std::string::npos);

  auto reports = run_bound_audits(BoundTheorem::kT41, 5, 5, 42);
  std::string audit_csv = schatten_reports_csv(reports);
  CHECK(audit_csv.rfind("context,p,q,r,measured,bound,verdict\n", 0) == 0);
  CHECK(audit_csv == schatten_reports_csv(run_bound_audits(BoundTheorem::kT41, 5, 5, 42)));

  auto rows = run_identity_trials("7.1", 4, 3, 7, 1e-8);
  std::string id_csv = identity_rows_csv("7.1", rows);
  CHECK(id_csv.rfind("identity,trial,dim,residual,verdict\n", 0) == 0);
  CHECK(id_csv == identity_rows_csv("7.1", run_identity_trials("7.1", 4, 3, 7, 1e-8)));
}
