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

#include "opint/function.hpp"
#include "opint/json_io.hpp"
#include "test_util.hpp"

using namespace opint;
using namespace opint::testutil;

namespace {

Matrix matrix_power(const Matrix& m, int e) {
  Matrix r = Matrix::identity(m.rows());
  for (int i = 0; i < e; ++i) r = r * m;
  return r;
}

Function2D monomial(int mx, int ny) {
  Callable2 c;
  c.eval = [mx, ny](double x, double y) {
    return Cplx(std::pow(x, mx) * std::pow(y, ny), 0.0);
  };
  return {c, std::nullopt};
}

}  // namespace

TEST_CASE("trig polynomial evaluation") {
  TrigPoly2 f;
  f.add(1, 1, 1.0);  // e^{i(x+y)}
  Function2D fn{f, std::nullopt};
  CHECK(std::abs(eval2(fn, 0.0, 0.0) - Cplx(1.0, 0.0)) < 1e-15);
  CHECK(std::abs(eval2(fn, 0.3, 0.4) - std::polar(1.0, 0.7)) < 1e-14);
  CHECK(std::abs(eval2_dx(fn, 0.3, 0.4) - Cplx(0.0, 1.0) * std::polar(1.0, 0.7)) < 1e-14);
}

TEST_CASE("phi kernel interpolates the integers") {
  CHECK(phi_kernel(0.0) == 1.0);
  CHECK(std::abs(phi_kernel(3.0)) < 1e-25);
  CHECK(std::abs(phi_kernel(-7.0)) < 1e-25);
  // Against the raw formula away from the singularity.
  for (double x : {0.25, 0.8, 1.4, 2.3}) {
    double raw = (1.0 - std::cos(2.0 * M_PI * x)) / (2.0 * M_PI * M_PI * x * x);
    CHECK(phi_kernel(x) == doctest::Approx(raw).epsilon(1e-13));
  }
  // Derivative against central differences.
  for (double x : {0.0, 0.37, 1.21, -2.4}) {
    double h = 1e-6;
    double fd = (phi_kernel(x + h) - phi_kernel(x - h)) / (2.0 * h);
    CHECK(phi_kernel_deriv(x) == doctest::Approx(fd).epsilon(1e-7));
  }
}

TEST_CASE("monomials map to ordered operator products") {
  Rng rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    int n = 2 + int(rng.next_u64() % 4);
    Matrix a = random_hermitian(rng, n), b = random_hermitian(rng, n);
    SpectralMeasure ea = spectral_decompose(a, OperatorKind::kHermitian);
    SpectralMeasure eb = spectral_decompose(b, OperatorKind::kHermitian);
    for (auto [mx, ny] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{0, 3}}) {
      Matrix got = apply_f_AB(monomial(mx, ny), ea, eb);
      Matrix want = matrix_power(a, mx) * matrix_power(b, ny);
      CHECK((got - want).frobenius_norm() < 1e-9 * (1.0 + want.frobenius_norm()));
    }
    Matrix one = apply_f_AB(monomial(0, 0), ea, eb);
    CHECK((one - Matrix::identity(n)).frobenius_norm() < 1e-11);
  }
}

TEST_CASE("calculus is linear but not multiplicative") {
  Rng rng(21);
  Matrix a = random_hermitian(rng, 4), b = random_hermitian(rng, 4);
  SpectralMeasure ea = spectral_decompose(a, OperatorKind::kHermitian);
  SpectralMeasure eb = spectral_decompose(b, OperatorKind::kHermitian);

  Function2D f{random_trig_poly_in_tests(rng, 3), std::nullopt};
  Function2D g{random_trig_poly_in_tests(rng, 3), std::nullopt};
  Cplx ca = rng.complex_in_disc(), cb = rng.complex_in_disc();
  TrigPoly2 combo;
  for (const auto& t : std::get<TrigPoly2>(f.rep).terms) combo.add(t.j, t.k, ca * t.c);
  for (const auto& t : std::get<TrigPoly2>(g.rep).terms) combo.add(t.j, t.k, cb * t.c);
  Matrix lhs = apply_f_AB(Function2D{combo, std::nullopt}, ea, eb);
  Matrix rhs = ca * apply_f_AB(f, ea, eb) + cb * apply_f_AB(g, ea, eb);
  CHECK((lhs - rhs).frobenius_norm() < 1e-12 * (1.0 + rhs.frobenius_norm()));

  // x^2 y versus x y x on a noncommuting pair: Pauli-z and Pauli-x.
  Matrix z(2, 2), x(2, 2);
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;
  SpectralMeasure ez = spectral_decompose(z, OperatorKind::kHermitian);
  SpectralMeasure ex = spectral_decompose(x, OperatorKind::kHermitian);
  Matrix x2y = apply_f_AB(monomial(2, 1), ez, ex);
  CHECK((x2y - z * z * x).frobenius_norm() < 1e-12);       // = A^2 B
  CHECK((x2y - z * x * z).frobenius_norm() > 1.0);         // != A B A
}

TEST_CASE("commuting pairs reduce to the joint eigenvalue oracle") {
  Rng rng(31);
  for (int trial = 0; trial < 6; ++trial) {
    int n = 2 + int(rng.next_u64() % 5);
    Matrix u = random_unitary(rng, n);
    Matrix d1(n, n), d2(n, n);
    for (int i = 0; i < n; ++i) {
      d1(i, i) = rng.uniform(-2.0, 2.0);
      d2(i, i) = rng.uniform(-2.0, 2.0);
    }
    Matrix a = u * d1 * u.adjoint(), b = u * d2 * u.adjoint();
    Function2D f{random_trig_poly_in_tests(rng, 3), std::nullopt};
    Matrix got = apply_f_AB(f, spectral_decompose(a, OperatorKind::kHermitian),
                            spectral_decompose(b, OperatorKind::kHermitian));
    Matrix joint(n, n);
    for (int i = 0; i < n; ++i) joint(i, i) = eval2(f, d1(i, i).real(), d2(i, i).real());
    Matrix want = u * joint * u.adjoint();
    CHECK((got - want).frobenius_norm() < 1e-10 * (1.0 + want.frobenius_norm()));
  }
}

TEST_CASE("conjugate of f matches the adjoint of the flipped calculus") {
  Rng rng(41);
  for (int trial = 0; trial < 6; ++trial) {
    int n = 2 + int(rng.next_u64() % 5);
    Matrix a = random_hermitian(rng, n), b = random_hermitian(rng, n);
    SpectralMeasure ea = spectral_decompose(a, OperatorKind::kHermitian);
    SpectralMeasure eb = spectral_decompose(b, OperatorKind::kHermitian);
    Function2D f{random_trig_poly_in_tests(rng, 3), std::nullopt};
    Matrix lhs = apply_f_AB(conjugate(f), ea, eb);
    Matrix rhs = apply_f_AB(flip_xy(f), eb, ea).adjoint();
    CHECK((lhs - rhs).frobenius_norm() < 1e-12 * (1.0 + rhs.frobenius_norm()));
  }
}

TEST_CASE("unitary calculus handles monomials, constants and sums") {
  Rng rng(51);
  int n = 4;
  Matrix u = random_unitary(rng, n), v = random_unitary(rng, n);
  SpectralMeasure eu = spectral_decompose(u, OperatorKind::kUnitary);
  SpectralMeasure ev = spectral_decompose(v, OperatorKind::kUnitary);

  TrigPoly2 mono;
  mono.add(2, 1, 1.0);
  Matrix got = apply_f_UV(Function2D{mono, std::nullopt}, eu, ev);
  Matrix want = u * u * v;
  CHECK((got - want).frobenius_norm() < 1e-10);

  TrigPoly2 cst;
  cst.add(0, 0, Cplx(0.3, -0.7));
  got = apply_f_UV(Function2D{cst, std::nullopt}, eu, ev);
  CHECK((got - Cplx(0.3, -0.7) * Matrix::identity(n)).frobenius_norm() < 1e-11);

  TrigPoly2 sum;
  sum.add(1, 0, 1.0);
  sum.add(0, 1, 1.0);
  got = apply_f_UV(Function2D{sum, std::nullopt}, eu, ev);
  CHECK((got - (u + v)).frobenius_norm() < 1e-12 * n);
}

TEST_CASE("unitary calculus rejects non-torus functions") {
  Rng rng(61);
  Matrix u = random_unitary(rng, 3), v = random_unitary(rng, 3);
  SpectralMeasure eu = spectral_decompose(u, OperatorKind::kUnitary);
  SpectralMeasure ev = spectral_decompose(v, OperatorKind::kUnitary);
  CHECK_THROWS_AS((void)apply_f_UV(monomial(1, 1), eu, ev), Error);
  TrigPoly2 wrong_period;
  wrong_period.period_x = 1.0;
  wrong_period.add(1, 0, 1.0);
  CHECK_THROWS_AS((void)apply_f_UV(Function2D{wrong_period, std::nullopt}, eu, ev), Error);
}

TEST_CASE("dimension mismatch is rejected") {
  Rng rng(71);
  SpectralMeasure e2 = spectral_decompose(random_hermitian(rng, 2), OperatorKind::kHermitian);
  SpectralMeasure e3 = spectral_decompose(random_hermitian(rng, 3), OperatorKind::kHermitian);
  CHECK_THROWS_AS((void)apply_f_AB(monomial(1, 1), e2, e3), Error);
}

TEST_CASE("dyadic scaling is exact on band-limited forms") {
  BandLimited2 bl;
  bl.phi_terms.push_back({Cplx(1.0, 0.5), 2.0, 1.0});
  bl.phi_terms.push_back({Cplx(-0.3, 0.0), 4.0, 3.0});
  bl.bandlimit = kTwoPi * std::sqrt(2.0);
  Function2D f{bl, bl.bandlimit};
  double eps = 0.125;
  Function2D g = dyadic_scale(f, eps);
  Rng rng(81);
  for (int i = 0; i < 20; ++i) {
    double x = rng.uniform(-5.0, 5.0), y = rng.uniform(-5.0, 5.0);
    Cplx want = eps * eval2(f, x / eps, y / eps);
    CHECK(std::abs(eval2(g, x, y) - want) < 1e-14);
  }
  CHECK(*bandlimit_of(g) == doctest::Approx(bl.bandlimit / eps));
}

TEST_CASE("matrix and trig polynomial JSON round trips") {
  Rng rng(91);
  Matrix m = random_matrix(rng, 3, 4);
  Matrix back = matrix_from_json(matrix_to_json(m));
  CHECK((m - back).frobenius_norm() == 0.0);  // shortest round-trip formatting

  TrigPoly2 f;
  f.add(1, -2, Cplx(0.25, -1.75));
  f.add(0, 0, Cplx(1e-3, 0.0));
  TrigPoly2 g = trigpoly_from_json(trigpoly_to_json(f));
  REQUIRE(g.terms.size() == f.terms.size());
  for (size_t i = 0; i < f.terms.size(); ++i) {
    CHECK(g.terms[i].j == f.terms[i].j);
    CHECK(g.terms[i].k == f.terms[i].k);
    CHECK(g.terms[i].c == f.terms[i].c);
  }
  CHECK_THROWS_AS((void)matrix_from_json("{\"rows\":2}"), Error);
  CHECK_THROWS_AS((void)matrix_from_json("not json"), Error);
}
