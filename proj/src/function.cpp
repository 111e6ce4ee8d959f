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

#include "opint/function.hpp"

#include <algorithm>
#include <cmath>

namespace opint {

double sinc(double t) {
  if (std::abs(t) < 1e-4) {
    double t2 = t * t;
    return 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
  }
  return std::sin(t) / t;
}

double sinc_pi(double x) { return sinc(M_PI * x); }

double phi_kernel(double x) {
  double s = sinc_pi(x);
  return s * s;
}

double phi_kernel_deriv(double x) {
  double t = M_PI * x;
  double s = sinc(t);
  double ds;  // d/dx [sin(pi x)/(pi x)]
  if (std::abs(t) < 1e-4) {
    ds = M_PI * (-t / 3.0 + t * t * t / 30.0);
  } else {
    ds = M_PI * (t * std::cos(t) - std::sin(t)) / (t * t);
  }
  return 2.0 * s * ds;
}

namespace {

// (e^{i w x1} - e^{i w x2}) / (x1 - x2), exact at coincidence.
Cplx wave_divided_diff(double w, double x1, double x2) {
  double mid = 0.5 * (x1 + x2), delta = x1 - x2;
  Cplx e = std::polar(1.0, w * mid);
  return Cplx(0.0, w) * e * sinc(0.5 * w * delta);
}

// Divided difference of phi; midpoint derivative below the cancellation
// threshold (|phi'''| is bounded, so the switch costs < 1e-11 there).
double phi_divided_diff(double s1, double s2) {
  if (std::abs(s1 - s2) < 1e-6) return phi_kernel_deriv(0.5 * (s1 + s2));
  return (phi_kernel(s1) - phi_kernel(s2)) / (s1 - s2);
}

double fd_step(double x) { return std::cbrt(2.220446049250313e-16) * (1.0 + std::abs(x)); }

Cplx ipow(Cplx z, int k) {
  if (k == 0) return 1.0;
  bool neg = k < 0;
  unsigned e = neg ? unsigned(-(long long)k) : unsigned(k);
  Cplx base = neg ? 1.0 / z : z;
  Cplx r = 1.0;
  while (e) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// TrigPoly bookkeeping.

void TrigPoly1::add(int j, Cplx c) {
  for (auto& t : terms)
    if (t.j == j) {
      t.c += c;
      return;
    }
  terms.push_back({j, c});
  std::sort(terms.begin(), terms.end(), [](const TrigTerm1& a, const TrigTerm1& b) {
    return a.j < b.j;
  });
}

int TrigPoly1::max_degree() const {
  int d = 0;
  for (const auto& t : terms) d = std::max(d, std::abs(t.j));
  return d;
}

void TrigPoly2::add(int j, int k, Cplx c) {
  for (auto& t : terms)
    if (t.j == j && t.k == k) {
      t.c += c;
      return;
    }
  terms.push_back({j, k, c});
  std::sort(terms.begin(), terms.end(), [](const TrigTerm2& a, const TrigTerm2& b) {
    return a.j != b.j ? a.j < b.j : a.k < b.k;
  });
}

int TrigPoly2::max_degree_x() const {
  int d = 0;
  for (const auto& t : terms) d = std::max(d, std::abs(t.j));
  return d;
}

int TrigPoly2::max_degree_y() const {
  int d = 0;
  for (const auto& t : terms) d = std::max(d, std::abs(t.k));
  return d;
}

double TrigPoly2::max_freq_norm() const {
  double m = 0.0;
  for (const auto& t : terms) m = std::max(m, std::hypot(double(t.j), double(t.k)));
  return m;
}

bool TrigPoly2::is_torus() const {
  return std::abs(period_x - kTwoPi) < 1e-12 && std::abs(period_y - kTwoPi) < 1e-12;
}

Cplx eval_torus(const TrigPoly2& f, Cplx zeta, Cplx tau) {
  Cplx s = 0.0;
  for (const auto& t : f.terms) s += t.c * ipow(zeta, t.j) * ipow(tau, t.k);
  return s;
}

Cplx eval_torus(const TrigPoly1& f, Cplx zeta) {
  Cplx s = 0.0;
  for (const auto& t : f.terms) s += t.c * ipow(zeta, t.j);
  return s;
}

// ---------------------------------------------------------------------------
// One-variable evaluation.

Cplx eval1(const Function1D& f, double x) {
  if (const auto* tp = std::get_if<TrigPoly1>(&f.rep)) {
    Cplx s = 0.0;
    for (const auto& t : tp->terms) s += t.c * std::polar(1.0, kTwoPi * t.j * x / tp->period);
    return s;
  }
  if (const auto* bl = std::get_if<BandLimited1>(&f.rep)) {
    Cplx s = 0.0;
    for (const auto& a : bl->phi_terms) s += a.c * phi_kernel(x - a.shift);
    for (const auto& a : bl->wave_terms) s += a.c * std::polar(1.0, a.freq * x);
    return s;
  }
  const auto& c = std::get<Callable1>(f.rep);
  return c.eval(x);
}

Cplx deriv1(const Function1D& f, double x) {
  if (const auto* tp = std::get_if<TrigPoly1>(&f.rep)) {
    Cplx s = 0.0;
    for (const auto& t : tp->terms) {
      double w = kTwoPi * t.j / tp->period;
      s += t.c * Cplx(0.0, w) * std::polar(1.0, w * x);
    }
    return s;
  }
  if (const auto* bl = std::get_if<BandLimited1>(&f.rep)) {
    Cplx s = 0.0;
    for (const auto& a : bl->phi_terms) s += a.c * phi_kernel_deriv(x - a.shift);
    for (const auto& a : bl->wave_terms)
      s += a.c * Cplx(0.0, a.freq) * std::polar(1.0, a.freq * x);
    return s;
  }
  const auto& c = std::get<Callable1>(f.rep);
  if (c.deriv) return c.deriv(x);
  if (!c.allow_fd_fallback)
    throw Error(ErrorCode::kMissingDerivative, "callable has no derivative");
  double h = fd_step(x);
  return (c.eval(x + h) - c.eval(x - h)) / (2.0 * h);
}

Cplx divided_diff(const Function1D& f, double x1, double x2) {
  if (const auto* tp = std::get_if<TrigPoly1>(&f.rep)) {
    Cplx s = 0.0;
    for (const auto& t : tp->terms)
      s += t.c * wave_divided_diff(kTwoPi * t.j / tp->period, x1, x2);
    return s;
  }
  if (const auto* bl = std::get_if<BandLimited1>(&f.rep)) {
    Cplx s = 0.0;
    for (const auto& a : bl->phi_terms)
      s += a.c * phi_divided_diff(x1 - a.shift, x2 - a.shift);
    for (const auto& a : bl->wave_terms) s += a.c * wave_divided_diff(a.freq, x1, x2);
    return s;
  }
  if (x1 == x2) return deriv1(f, x1);
  return (eval1(f, x1) - eval1(f, x2)) / (x1 - x2);
}

// ---------------------------------------------------------------------------
// Two-variable evaluation.

Cplx eval2(const Function2D& f, double x, double y) {
  if (const auto* tp = std::get_if<TrigPoly2>(&f.rep)) {
    Cplx s = 0.0;
    for (const auto& t : tp->terms)
      s += t.c * std::polar(1.0, kTwoPi * (t.j * x / tp->period_x + t.k * y / tp->period_y));
    return s;
  }
  if (const auto* bl = std::get_if<BandLimited2>(&f.rep)) {
    double u = bl->arg_scale * x, v = bl->arg_scale * y;
    Cplx s = 0.0;
    for (const auto& a : bl->phi_terms)
      s += a.c * (phi_kernel(u - a.shift_x) * phi_kernel(v - a.shift_y));
    for (const auto& a : bl->wave_terms) s += a.c * std::polar(1.0, a.freq_x * u + a.freq_y * v);
    return bl->amp * s;
  }
  if (const auto* ss = std::get_if<SeparableSum2>(&f.rep)) {
    Cplx s = 0.0;
    for (const auto& [phi, psi] : ss->factors) s += eval1(phi, x) * eval1(psi, y);
    return s;
  }
  return std::get<Callable2>(f.rep).eval(x, y);
}

Cplx eval2_dx(const Function2D& f, double x, double y) {
  if (const auto* tp = std::get_if<TrigPoly2>(&f.rep)) {
    Cplx s = 0.0;
    for (const auto& t : tp->terms) {
      double wx = kTwoPi * t.j / tp->period_x;
      s += t.c * Cplx(0.0, wx) *
           std::polar(1.0, wx * x + kTwoPi * t.k * y / tp->period_y);
    }
    return s;
  }
  if (const auto* bl = std::get_if<BandLimited2>(&f.rep)) {
    double u = bl->arg_scale * x, v = bl->arg_scale * y;
    Cplx s = 0.0;
    for (const auto& a : bl->phi_terms)
      s += a.c * (phi_kernel_deriv(u - a.shift_x) * phi_kernel(v - a.shift_y));
    for (const auto& a : bl->wave_terms)
      s += a.c * Cplx(0.0, a.freq_x) * std::polar(1.0, a.freq_x * u + a.freq_y * v);
    return bl->amp * bl->arg_scale * s;
  }
  if (const auto* ss = std::get_if<SeparableSum2>(&f.rep)) {
    Cplx s = 0.0;
    for (const auto& [phi, psi] : ss->factors) s += deriv1(phi, x) * eval1(psi, y);
    return s;
  }
  const auto& c = std::get<Callable2>(f.rep);
  if (c.dx) return c.dx(x, y);
  if (!c.allow_fd_fallback)
    throw Error(ErrorCode::kMissingDerivative, "callable has no x-derivative");
  double h = fd_step(x);
  return (c.eval(x + h, y) - c.eval(x - h, y)) / (2.0 * h);
}

Cplx eval2_dy(const Function2D& f, double x, double y) {
  if (const auto* tp = std::get_if<TrigPoly2>(&f.rep)) {
    Cplx s = 0.0;
    for (const auto& t : tp->terms) {
      double wy = kTwoPi * t.k / tp->period_y;
      s += t.c * Cplx(0.0, wy) *
           std::polar(1.0, kTwoPi * t.j * x / tp->period_x + wy * y);
    }
    return s;
  }
  if (const auto* bl = std::get_if<BandLimited2>(&f.rep)) {
    double u = bl->arg_scale * x, v = bl->arg_scale * y;
    Cplx s = 0.0;
    for (const auto& a : bl->phi_terms)
      s += a.c * (phi_kernel(u - a.shift_x) * phi_kernel_deriv(v - a.shift_y));
    for (const auto& a : bl->wave_terms)
      s += a.c * Cplx(0.0, a.freq_y) * std::polar(1.0, a.freq_x * u + a.freq_y * v);
    return bl->amp * bl->arg_scale * s;
  }
  if (const auto* ss = std::get_if<SeparableSum2>(&f.rep)) {
    Cplx s = 0.0;
    for (const auto& [phi, psi] : ss->factors) s += eval1(phi, x) * deriv1(psi, y);
    return s;
  }
  const auto& c = std::get<Callable2>(f.rep);
  if (c.dy) return c.dy(x, y);
  if (!c.allow_fd_fallback)
    throw Error(ErrorCode::kMissingDerivative, "callable has no y-derivative");
  double h = fd_step(y);
  return (c.eval(x, y + h) - c.eval(x, y - h)) / (2.0 * h);
}

std::optional<double> bandlimit_of(const Function2D& f) {
  if (f.bandlimit) return f.bandlimit;
  if (const auto* tp = std::get_if<TrigPoly2>(&f.rep)) {
    double sx = kTwoPi / tp->period_x, sy = kTwoPi / tp->period_y;
    double m = 0.0;
    for (const auto& t : tp->terms) m = std::max(m, std::hypot(sx * t.j, sy * t.k));
    return m;
  }
  if (const auto* bl = std::get_if<BandLimited2>(&f.rep)) return bl->bandlimit;
  return std::nullopt;
}

Function2D dyadic_scale(const Function2D& f, double eps) {
  if (!(eps > 0.0)) throw Error(ErrorCode::kInvalidArgument, "scale must be positive");
  if (const auto* bl = std::get_if<BandLimited2>(&f.rep)) {
    BandLimited2 scaled = *bl;
    scaled.amp *= eps;
    scaled.arg_scale /= eps;
    scaled.bandlimit /= eps;
    Function2D g{scaled, std::nullopt};
    if (f.bandlimit) g.bandlimit = *f.bandlimit / eps;
    return g;
  }
  if (const auto* tp = std::get_if<TrigPoly2>(&f.rep)) {
    TrigPoly2 scaled = *tp;
    scaled.period_x *= eps;
    scaled.period_y *= eps;
    for (auto& t : scaled.terms) t.c *= eps;
    Function2D g{scaled, std::nullopt};
    if (f.bandlimit) g.bandlimit = *f.bandlimit / eps;
    return g;
  }
  throw Error(ErrorCode::kUnsupportedRepresentation, "dyadic_scale needs a structured form");
}

Function2D conjugate(const Function2D& f) {
  if (const auto* tp = std::get_if<TrigPoly2>(&f.rep)) {
    TrigPoly2 g;
    g.period_x = tp->period_x;
    g.period_y = tp->period_y;
    for (const auto& t : tp->terms) g.add(-t.j, -t.k, std::conj(t.c));
    return {g, f.bandlimit};
  }
  Function2D src = f;
  Callable2 c;
  c.eval = [src](double x, double y) { return std::conj(eval2(src, x, y)); };
  c.dx = [src](double x, double y) { return std::conj(eval2_dx(src, x, y)); };
  c.dy = [src](double x, double y) { return std::conj(eval2_dy(src, x, y)); };
  return {c, f.bandlimit};
}

Function2D flip_xy(const Function2D& f) {
  if (const auto* tp = std::get_if<TrigPoly2>(&f.rep)) {
    TrigPoly2 g;
    g.period_x = tp->period_y;
    g.period_y = tp->period_x;
    for (const auto& t : tp->terms) g.add(t.k, t.j, t.c);
    return {g, f.bandlimit};
  }
  if (const auto* bl = std::get_if<BandLimited2>(&f.rep)) {
    BandLimited2 g = *bl;
    for (auto& a : g.phi_terms) std::swap(a.shift_x, a.shift_y);
    for (auto& a : g.wave_terms) std::swap(a.freq_x, a.freq_y);
    return {g, f.bandlimit};
  }
  if (const auto* ss = std::get_if<SeparableSum2>(&f.rep)) {
    SeparableSum2 g;
    for (const auto& [phi, psi] : ss->factors) g.factors.emplace_back(psi, phi);
    return {g, f.bandlimit};
  }
  Function2D src = f;
  Callable2 c;
  c.eval = [src](double x, double y) { return eval2(src, y, x); };
  c.dx = [src](double x, double y) { return eval2_dy(src, y, x); };
  c.dy = [src](double x, double y) { return eval2_dx(src, y, x); };
  return {c, f.bandlimit};
}

double sup_norm_grid2(const Function2D& f, double xlo, double xhi, double ylo, double yhi,
                      int nx, int ny) {
  double m = 0.0;
  for (int i = 0; i < nx; ++i) {
    double x = xlo + (xhi - xlo) * (i + 0.5) / nx;
    for (int j = 0; j < ny; ++j) {
      double y = ylo + (yhi - ylo) * (j + 0.5) / ny;
      m = std::max(m, std::abs(eval2(f, x, y)));
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Functional calculus.

Matrix apply_f_AB(const Function2D& f, const SpectralMeasure& sm_a, const SpectralMeasure& sm_b) {
  if (sm_a.dim != sm_b.dim)
    throw Error(ErrorCode::kDimensionMismatch, "spectral measures on different dimensions");
  const int n = sm_a.dim;
  Matrix result(n, n);
  for (const auto& pa : sm_a.points) {
    Matrix inner(n, n);
    for (const auto& pb : sm_b.points) {
      Cplx v = eval2(f, pa.value.real(), pb.value.real());
      if (v == 0.0) continue;
      Matrix scaled = pb.projector;
      scaled *= v;
      inner += scaled;
    }
    result += pa.projector * inner;
  }
  return result;
}

Matrix apply_f_UV(const Function2D& f, const SpectralMeasure& sm_u, const SpectralMeasure& sm_v) {
  if (sm_u.dim != sm_v.dim)
    throw Error(ErrorCode::kDimensionMismatch, "spectral measures on different dimensions");
  const auto* tp = std::get_if<TrigPoly2>(&f.rep);
  if (tp == nullptr || !tp->is_torus())
    throw Error(ErrorCode::kNotTorusFunction, "unitary calculus needs a 2pi-periodic trig poly");
  const int n = sm_u.dim;
  Matrix result(n, n);
  for (const auto& pu : sm_u.points) {
    Matrix inner(n, n);
    for (const auto& pv : sm_v.points) {
      Cplx v = eval_torus(*tp, pu.value, pv.value);
      if (v == 0.0) continue;
      Matrix scaled = pv.projector;
      scaled *= v;
      inner += scaled;
    }
    result += pu.projector * inner;
  }
  return result;
}

}  // namespace opint
