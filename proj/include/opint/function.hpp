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

#ifndef OPINT_FUNCTION_HPP
#define OPINT_FUNCTION_HPP

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "opint/matrix.hpp"
#include "opint/spectral.hpp"

namespace opint {

// Bivariate (and univariate) functions in the four concrete representations
// the calculus consumes: trigonometric polynomials, band-limited closed
// forms, separable sums, and black-box callables.  Divided differences are
// representation-aware so they stay stable at (near-)coincident points.

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// sin(t)/t with the removable singularity filled in.
double sinc(double t);
// sin(pi x)/(pi x).
double sinc_pi(double x);
// phi(x) = (1 - cos 2 pi x) / (2 pi^2 x^2) = sinc_pi(x)^2; phi(0) = 1 and
// phi(k) = 0 at nonzero integers.
double phi_kernel(double x);
double phi_kernel_deriv(double x);

// ---------------------------------------------------------------------------
// One variable.

struct TrigTerm1 {
  int j;
  Cplx c;
};

struct TrigPoly1 {
  double period = kTwoPi;
  std::vector<TrigTerm1> terms;

  void add(int j, Cplx c);
  int max_degree() const;
};

struct PhiAtom1 {
  Cplx c;
  double shift;
};
struct WaveAtom1 {
  Cplx c;
  double freq;
};
struct BandLimited1 {
  std::vector<PhiAtom1> phi_terms;
  std::vector<WaveAtom1> wave_terms;
  double bandlimit = 0.0;
};

struct Callable1 {
  std::function<Cplx(double)> eval;
  std::function<Cplx(double)> deriv;  // may be empty
  bool allow_fd_fallback = true;
};

struct Function1D {
  std::variant<TrigPoly1, BandLimited1, Callable1> rep;
  std::optional<double> bandlimit;
};

Cplx eval1(const Function1D& f, double x);
Cplx deriv1(const Function1D& f, double x);
// (f(x1) - f(x2)) / (x1 - x2), derivative at coincidence.
Cplx divided_diff(const Function1D& f, double x1, double x2);

// ---------------------------------------------------------------------------
// Two variables.

struct TrigTerm2 {
  int j, k;
  Cplx c;
};

struct TrigPoly2 {
  double period_x = kTwoPi, period_y = kTwoPi;
  std::vector<TrigTerm2> terms;

  void add(int j, int k, Cplx c);
  int max_degree_x() const;
  int max_degree_y() const;
  double max_freq_norm() const;  // max over terms of ||(j,k)||_2
  bool is_torus() const;         // both periods equal to 2 pi
};

// Evaluation at unit-modulus arguments, f(zeta, tau) = sum c zeta^j tau^k.
Cplx eval_torus(const TrigPoly2& f, Cplx zeta, Cplx tau);
Cplx eval_torus(const TrigPoly1& f, Cplx zeta);

struct PhiAtom2 {
  Cplx c;
  double shift_x, shift_y;
};
struct WaveAtom2 {
  Cplx c;
  double freq_x, freq_y;
};

// amp * [sum of atoms](arg_scale * x, arg_scale * y); the scale fields make
// the dyadic rescaling f_eps(x, y) = eps f(x/eps, y/eps) exact.
struct BandLimited2 {
  std::vector<PhiAtom2> phi_terms;
  std::vector<WaveAtom2> wave_terms;
  double amp = 1.0;
  double arg_scale = 1.0;
  double bandlimit = 0.0;
};

struct Callable2 {
  std::function<Cplx(double, double)> eval;
  std::function<Cplx(double, double)> dx;  // may be empty
  std::function<Cplx(double, double)> dy;  // may be empty
  bool allow_fd_fallback = true;
};

struct SeparableSum2 {
  std::vector<std::pair<Function1D, Function1D>> factors;
};

struct Function2D {
  std::variant<TrigPoly2, BandLimited2, SeparableSum2, Callable2> rep;
  std::optional<double> bandlimit;
};

Cplx eval2(const Function2D& f, double x, double y);
Cplx eval2_dx(const Function2D& f, double x, double y);
Cplx eval2_dy(const Function2D& f, double x, double y);

// Effective radius of Fourier support, when the representation knows it.
std::optional<double> bandlimit_of(const Function2D& f);

// f_eps(x, y) = eps f(x/eps, y/eps) (exact for trig polys and band-limited
// forms; UnsupportedRepresentation otherwise).
Function2D dyadic_scale(const Function2D& f, double eps);

// conj(f) and the flip (x, y) -> (y, x), exact on structured representations.
Function2D conjugate(const Function2D& f);
Function2D flip_xy(const Function2D& f);

// Max of |f| over an nx-by-ny sampling grid; a lower estimate of sup|f|.
double sup_norm_grid2(const Function2D& f, double xlo, double xhi, double ylo, double yhi,
                      int nx, int ny);

// ---------------------------------------------------------------------------
// Functional calculus for a pair of noncommuting operators: the double
// operator integral over the product of two spectral measures.  Linear in f,
// not multiplicative.

Matrix apply_f_AB(const Function2D& f, const SpectralMeasure& sm_a, const SpectralMeasure& sm_b);

// Torus version for unitary pairs; f must be a torus trig polynomial.
Matrix apply_f_UV(const Function2D& f, const SpectralMeasure& sm_u, const SpectralMeasure& sm_v);

}  // namespace opint

#endif  // OPINT_FUNCTION_HPP
