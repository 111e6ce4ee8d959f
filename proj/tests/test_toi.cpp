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

#include "opint/divdiff.hpp"
#include "opint/toi.hpp"
#include "test_util.hpp"

using namespace opint;
using namespace opint::testutil;

namespace {

SpectralMeasure random_measure(Rng& rng, int dim) {
  return spectral_decompose(random_hermitian(rng, dim), OperatorKind::kHermitian);
}

// Locate a spectral value's index; values come back bit-identical from the
// measure the evaluator consumed, so exact comparison is safe.
size_t index_of(const SpectralMeasure& sm, Cplx value) {
  for (size_t i = 0; i < sm.points.size(); ++i)
    if (sm.points[i].value == value) return i;
  REQUIRE(false);
  return 0;
}

ValueTable random_table(Rng& rng, size_t n) {
  ValueTable t(n);
  for (auto& v : t) v = 2.0 * rng.complex_in_disc();
  return t;
}

HaagerupRep random_haagerup(Rng& rng, size_t nj, size_t nk, const SpectralMeasure& s1,
                            const SpectralMeasure& s2, const SpectralMeasure& s3) {
  HaagerupRep rep;
  rep.alpha.resize(nj);
  rep.gamma.resize(nk);
  rep.beta.assign(nj, std::vector<ValueTable>(nk));
  for (auto& a : rep.alpha) a = random_table(rng, s1.points.size());
  for (auto& g : rep.gamma) g = random_table(rng, s3.points.size());
  for (auto& row : rep.beta)
    for (auto& b : row) b = random_table(rng, s2.points.size());
  return rep;
}

}  // namespace

TEST_CASE("direct integral: monomial and constant integrands") {
  Rng rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    int n = 2 + int(rng.next_u64() % 4);
    Matrix a = random_hermitian(rng, n), b = random_hermitian(rng, n),
           c = random_hermitian(rng, n);
    Matrix t = random_matrix(rng, n, n), r = random_matrix(rng, n, n);
    SpectralMeasure ea = spectral_decompose(a, OperatorKind::kHermitian);
    SpectralMeasure eb = spectral_decompose(b, OperatorKind::kHermitian);
    SpectralMeasure ec = spectral_decompose(c, OperatorKind::kHermitian);

    auto product = [](Cplx x1, Cplx x2, Cplx x3) { return x1 * x2 * x3; };
    Matrix got = toi_direct(product, ea, eb, ec, t, r);
    Matrix want = a * t * b * r * c;
    CHECK((got - want).frobenius_norm() < 1e-9 * (1.0 + want.frobenius_norm()));

    auto one = [](Cplx, Cplx, Cplx) { return Cplx(1.0, 0.0); };
    got = toi_direct(one, ea, eb, ec, t, r);
    want = t * r;
    CHECK((got - want).frobenius_norm() < 1e-10 * (1.0 + want.frobenius_norm()));
  }
}

TEST_CASE("Haagerup evaluation agrees with the direct oracle") {
  Rng rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + int(rng.next_u64() % 5);
    SpectralMeasure s1 = random_measure(rng, n), s2 = random_measure(rng, n),
                    s3 = random_measure(rng, n);
    Matrix t = random_matrix(rng, n, n), r = random_matrix(rng, n, n);
    size_t nj = 1 + rng.next_u64() % 4, nk = 1 + rng.next_u64() % 4;
    HaagerupRep rep = random_haagerup(rng, nj, nk, s1, s2, s3);

    auto pointwise = [&](Cplx x1, Cplx x2, Cplx x3) {
      size_t i = index_of(s1, x1), j = index_of(s2, x2), k = index_of(s3, x3);
      Cplx s = 0.0;
      for (size_t a = 0; a < rep.alpha.size(); ++a)
        for (size_t g = 0; g < rep.gamma.size(); ++g)
          s += rep.alpha[a][i] * rep.beta[a][g][j] * rep.gamma[g][k];
      return s;
    };
    Matrix got = toi_haagerup(rep, s1, s2, s3, t, r);
    Matrix want = toi_direct(pointwise, s1, s2, s3, t, r);
    CHECK((got - want).frobenius_norm() < 1e-10 * (1.0 + want.frobenius_norm()));
  }
}

TEST_CASE("rank-one representations factor through the spectral integrals") {
  Rng rng(23);
  int n = 4;
  SpectralMeasure s1 = random_measure(rng, n), s2 = random_measure(rng, n),
                  s3 = random_measure(rng, n);
  Matrix t = random_matrix(rng, n, n), r = random_matrix(rng, n, n);
  ValueTable phi = random_table(rng, s1.points.size());
  ValueTable psi = random_table(rng, s2.points.size());
  ValueTable chi = random_table(rng, s3.points.size());

  auto integrate = [](const ValueTable& tab, const SpectralMeasure& sm) {
    Matrix m(sm.dim, sm.dim);
    for (size_t i = 0; i < sm.points.size(); ++i) {
      Matrix s = sm.points[i].projector;
      s *= tab[i];
      m += s;
    }
    return m;
  };
  Matrix want = integrate(phi, s1) * t * integrate(psi, s2) * r * integrate(chi, s3);

  ProjectiveRep prep;
  prep.terms.push_back({phi, psi, chi});
  CHECK((toi_projective(prep, s1, s2, s3, t, r) - want).frobenius_norm() <
        1e-10 * (1.0 + want.frobenius_norm()));

  HaagerupRep hr = embed_projective(prep);
  CHECK((toi_haagerup(hr, s1, s2, s3, t, r) - want).frobenius_norm() <
        1e-10 * (1.0 + want.frobenius_norm()));

  HaagerupLikeRep1 r1;
  r1.alpha = {phi};
  r1.beta = {psi};
  r1.gamma = {{chi}};
  CHECK((toi_haagerup_like_1(r1, s1, s2, s3, t, r, 1.5) - want).frobenius_norm() <
        1e-10 * (1.0 + want.frobenius_norm()));

  HaagerupLikeRep2 r2;
  r2.alpha = {{phi}};
  r2.beta = {psi};
  r2.gamma = {chi};
  CHECK((toi_haagerup_like_2(r2, s1, s2, s3, t, r, 1.5) - want).frobenius_norm() <
        1e-10 * (1.0 + want.frobenius_norm()));
}

TEST_CASE("projective embedding keeps the paper's factor norms") {
  Rng rng(33);
  int n = 4;
  SpectralMeasure s1 = random_measure(rng, n), s2 = random_measure(rng, n),
                  s3 = random_measure(rng, n);
  ProjectiveRep prep;
  double csum = 0.0;
  for (int i = 0; i < 4; ++i) {
    ValueTable phi = random_table(rng, s1.points.size());
    ValueTable psi = random_table(rng, s2.points.size());
    ValueTable chi = random_table(rng, s3.points.size());
    auto sup = [](const ValueTable& t) {
      double m = 0.0;
      for (const auto& v : t) m = std::max(m, std::abs(v));
      return m;
    };
    csum += sup(phi) * sup(psi) * sup(chi);
    prep.terms.push_back({phi, psi, chi});
  }
  HaagerupRep hr = embed_projective(prep);
  FactorNorms norms = factor_norms(hr);
  CHECK(norms.first <= std::sqrt(csum) + 1e-12);
  CHECK(norms.third <= std::sqrt(csum) + 1e-12);
  CHECK(norms.second <= 1.0 + 1e-12);
}

TEST_CASE("first- and second-kind evaluations match the direct oracle") {
  Rng rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + int(rng.next_u64() % 5);
    SpectralMeasure s1 = random_measure(rng, n), s2 = random_measure(rng, n),
                    s3 = random_measure(rng, n);
    Matrix t = random_matrix(rng, n, n), r = random_matrix(rng, n, n);
    size_t nj = 1 + rng.next_u64() % 3, nk = 1 + rng.next_u64() % 3;

    HaagerupLikeRep1 r1;
    r1.alpha.resize(nj);
    r1.beta.resize(nk);
    r1.gamma.assign(nj, std::vector<ValueTable>(nk));
    for (auto& a : r1.alpha) a = random_table(rng, s1.points.size());
    for (auto& b : r1.beta) b = random_table(rng, s2.points.size());
    for (auto& row : r1.gamma)
      for (auto& g : row) g = random_table(rng, s3.points.size());
    auto pw1 = [&](Cplx x1, Cplx x2, Cplx x3) {
      size_t i = index_of(s1, x1), j = index_of(s2, x2), k = index_of(s3, x3);
      Cplx s = 0.0;
      for (size_t a = 0; a < nj; ++a)
        for (size_t b = 0; b < nk; ++b) s += r1.alpha[a][i] * r1.beta[b][j] * r1.gamma[a][b][k];
      return s;
    };
    Matrix got = toi_haagerup_like_1(r1, s1, s2, s3, t, r, 2.0);
    Matrix want = toi_direct(pw1, s1, s2, s3, t, r);
    CHECK((got - want).frobenius_norm() < 1e-10 * (1.0 + want.frobenius_norm()));

    HaagerupLikeRep2 r2;
    r2.beta.resize(nj);
    r2.gamma.resize(nk);
    r2.alpha.assign(nj, std::vector<ValueTable>(nk));
    for (auto& b : r2.beta) b = random_table(rng, s2.points.size());
    for (auto& g : r2.gamma) g = random_table(rng, s3.points.size());
    for (auto& row : r2.alpha)
      for (auto& a : row) a = random_table(rng, s1.points.size());
    auto pw2 = [&](Cplx x1, Cplx x2, Cplx x3) {
      size_t i = index_of(s1, x1), j = index_of(s2, x2), k = index_of(s3, x3);
      Cplx s = 0.0;
      for (size_t a = 0; a < nj; ++a)
        for (size_t b = 0; b < nk; ++b) s += r2.alpha[a][b][i] * r2.beta[a][j] * r2.gamma[b][k];
      return s;
    };
    got = toi_haagerup_like_2(r2, s1, s2, s3, t, r, 2.0);
    want = toi_direct(pw2, s1, s2, s3, t, r);
    CHECK((got - want).frobenius_norm() < 1e-10 * (1.0 + want.frobenius_norm()));
  }
}

TEST_CASE("zero representations evaluate to zero") {
  Rng rng(53);
  int n = 3;
  SpectralMeasure s = random_measure(rng, n);
  Matrix t = random_matrix(rng, n, n), r = random_matrix(rng, n, n);
  HaagerupLikeRep1 r1;
  r1.alpha = {ValueTable(s.points.size(), 0.0)};
  r1.beta = {ValueTable(s.points.size(), 0.0)};
  r1.gamma = {{ValueTable(s.points.size(), 0.0)}};
  CHECK(toi_haagerup_like_1(r1, s, s, s, t, r, 1.0).frobenius_norm() == 0.0);
  CHECK(haagerup_norm_of_rep(r1) == 0.0);
}

TEST_CASE("representation of D1 f feeds the first-kind integral correctly") {
  Rng rng(63);
  int n = 4;
  SpectralMeasure s1 = random_measure(rng, n), s2 = random_measure(rng, n),
                  s3 = random_measure(rng, n);
  Matrix t = random_matrix(rng, n, n), r = random_matrix(rng, n, n);
  Function2D f{random_trig_poly_in_tests(rng, 2), std::nullopt};
  HaagerupLikeRep1 rep = build_haagerup_like_rep_D1_besov(f, s1, s2, s3);
  auto d1 = [&f](Cplx x1, Cplx x2, Cplx x3) {
    return divided_diff_1(f, x1.real(), x2.real(), x3.real());
  };
  Matrix got = toi_haagerup_like_1(rep, s1, s2, s3, t, r, 1.0);
  Matrix want = toi_direct(d1, s1, s2, s3, t, r);
  CHECK((got - want).frobenius_norm() < 1e-8 * (1.0 + want.frobenius_norm()));
}

TEST_CASE("factor-norm product: unit rank-one, embedding sum, homogeneity") {
  int n = 3;
  ValueTable ones(n, Cplx(1.0, 0.0));
  HaagerupRep rep;
  rep.alpha = {ones};
  rep.beta = {{ones}};
  rep.gamma = {ones};
  CHECK(haagerup_norm_of_rep(rep) == doctest::Approx(1.0));

  HaagerupRep doubled = rep;
  for (auto& v : doubled.alpha[0]) v *= 2.0;
  CHECK(haagerup_norm_of_rep(doubled) == doctest::Approx(2.0));
}

TEST_CASE("adjoint duality across the flipped integrand") {
  Rng rng(73);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 2 + int(rng.next_u64() % 4);
    SpectralMeasure s1 = random_measure(rng, n), s2 = random_measure(rng, n),
                    s3 = random_measure(rng, n);
    Matrix t = random_matrix(rng, n, n), r = random_matrix(rng, n, n);
    Function2D f{random_trig_poly_in_tests(rng, 2), std::nullopt};
    auto psi = [&f](Cplx x1, Cplx x2, Cplx x3) {
      return divided_diff_1(f, x1.real(), x2.real(), x3.real());
    };
    auto psi_flip_conj = [&f](Cplx x3, Cplx x2, Cplx x1) {
      return std::conj(divided_diff_1(f, x1.real(), x2.real(), x3.real()));
    };
    Matrix w = toi_direct(psi, s1, s2, s3, t, r);
    Matrix wadj = toi_direct(psi_flip_conj, s3, s2, s1, r.adjoint(), t.adjoint());
    CHECK((w.adjoint() - wadj).frobenius_norm() < 1e-10 * (1.0 + w.frobenius_norm()));
  }
}

TEST_CASE("linearity in the sandwiched operators") {
  Rng rng(83);
  int n = 4;
  SpectralMeasure s1 = random_measure(rng, n), s2 = random_measure(rng, n),
                  s3 = random_measure(rng, n);
  Matrix t = random_matrix(rng, n, n), r = random_matrix(rng, n, n);
  HaagerupRep rep = random_haagerup(rng, 2, 3, s1, s2, s3);
  Cplx scale(1.7, -0.4);
  Matrix w1 = toi_haagerup(rep, s1, s2, s3, scale * t, r);
  Matrix w2 = scale * toi_haagerup(rep, s1, s2, s3, t, r);
  CHECK((w1 - w2).frobenius_norm() < 1e-12 * (1.0 + w2.frobenius_norm()));
}

TEST_CASE("audits pass in their regimes and refuse outside them") {
  Rng rng(93);
  int n = 4;
  SpectralMeasure s1 = random_measure(rng, n), s2 = random_measure(rng, n),
                  s3 = random_measure(rng, n);
  Matrix t = random_matrix(rng, n, n), r = random_matrix(rng, n, n);
  const double inf = std::numeric_limits<double>::infinity();

  HaagerupRep hr = random_haagerup(rng, 2, 2, s1, s2, s3);
  for (double p : {2.0, 3.0, 7.0}) {
    SchattenReport rep = audit_schatten_bounds(BoundTheorem::kT43i, hr, s1, s2, s3, t, r, p, inf);
    CHECK(rep.pass);
    rep = audit_schatten_bounds(BoundTheorem::kT43ii, hr, s1, s2, s3, t, r, p, inf);
    CHECK(rep.pass);
  }
  SchattenReport rep41 = audit_schatten_bounds(BoundTheorem::kT41, hr, s1, s2, s3, t, r, 2.0, inf);
  CHECK(rep41.pass);
  CHECK(rep41.r == 2.0);
  SchattenReport rep43 =
      audit_schatten_bounds(BoundTheorem::kT43iii, hr, s1, s2, s3, t, r, 4.0, 4.0);
  CHECK(rep43.pass);
  CHECK(rep43.r == doctest::Approx(2.0));

  CHECK_THROWS_AS((void)audit_schatten_bounds(BoundTheorem::kT43i, hr, s1, s2, s3, t, r, 1.5, inf),
                  Error);
  CHECK_THROWS_AS(
      (void)audit_schatten_bounds(BoundTheorem::kT43iii, hr, s1, s2, s3, t, r, 3.0, 3.0), Error);
  CHECK_THROWS_AS((void)audit_schatten_bounds(BoundTheorem::kT41, hr, s1, s2, s3, t, r, 3.0, inf),
                  Error);

  HaagerupLikeRep1 r1;
  r1.alpha = {random_table(rng, s1.points.size())};
  r1.beta = {random_table(rng, s2.points.size())};
  r1.gamma = {{random_table(rng, s3.points.size())}};
  CHECK(audit_schatten_bounds(BoundTheorem::kT51, r1, s1, s2, s3, t, r, 1.0, inf).pass);
  CHECK(audit_schatten_bounds(BoundTheorem::kT51, r1, s1, s2, s3, t, r, 2.0, 2.0).pass);
  CHECK_THROWS_AS((void)audit_schatten_bounds(BoundTheorem::kT51, r1, s1, s2, s3, t, r, 3.0, inf),
                  Error);
  CHECK_THROWS_AS(
      (void)audit_schatten_bounds(BoundTheorem::kT51, r1, s1, s2, s3, t, r, 1.0, 1.5), Error);
  CHECK_THROWS_AS((void)audit_schatten_bounds(BoundTheorem::kT52, r1, s1, s2, s3, t, r, 2.0, 2.0),
                  Error);  // rep kind mismatch

  HaagerupLikeRep2 r2;
  r2.alpha = {{random_table(rng, s1.points.size())}};
  r2.beta = {random_table(rng, s2.points.size())};
  r2.gamma = {random_table(rng, s3.points.size())};
  CHECK(audit_schatten_bounds(BoundTheorem::kT52, r2, s1, s2, s3, t, r, inf, 1.0).pass);
  CHECK_THROWS_AS((void)audit_schatten_bounds(BoundTheorem::kT52, r2, s1, s2, s3, t, r, inf, 3.0),
                  Error);
}

TEST_CASE("support coverage is enforced") {
  Rng rng(103);
  SpectralMeasure s = random_measure(rng, 3);
  Matrix t = random_matrix(rng, 3, 3), r = random_matrix(rng, 3, 3);
  HaagerupRep rep;
  rep.alpha = {ValueTable(1, 1.0)};  // too short for the support
  rep.beta = {{ValueTable(s.points.size(), 1.0)}};
  rep.gamma = {ValueTable(s.points.size(), 1.0)};
  CHECK_THROWS_AS((void)toi_haagerup(rep, s, s, s, t, r), Error);
}
