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

#include "opint/divdiff.hpp"

#include <algorithm>
#include <cmath>

#include "opint/besov.hpp"
#include "opint/fft.hpp"

namespace opint {

namespace {

Cplx wave_divided_diff(double w, double x1, double x2) {
  double mid = 0.5 * (x1 + x2), delta = x1 - x2;
  return Cplx(0.0, w) * std::polar(1.0, w * mid) * sinc(0.5 * w * delta);
}

double phi_divided_diff(double s1, double s2) {
  if (std::abs(s1 - s2) < 1e-6) return phi_kernel_deriv(0.5 * (s1 + s2));
  return (phi_kernel(s1) - phi_kernel(s2)) / (s1 - s2);
}

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

// (z1^j - z2^j)/(z1 - z2) through geometric sums; reduces to j z^{j-1} at
// coincidence without any division.
Cplx unit_power_divided_diff(int j, Cplx z1, Cplx z2) {
  if (j == 0) return 0.0;
  int m = std::abs(j);
  Cplx s = 0.0;
  for (int i = 0; i < m; ++i) s += ipow(z1, i) * ipow(z2, m - 1 - i);
  if (j > 0) return s;
  return -ipow(z1, j) * ipow(z2, j) * s;
}

}  // namespace

Cplx divided_diff_1(const Function2D& f, double x1, double x2, double y) {
  if (const auto* tp = std::get_if<TrigPoly2>(&f.rep)) {
    Cplx s = 0.0;
    for (const auto& t : tp->terms) {
      double wx = kTwoPi * t.j / tp->period_x;
      double wy = kTwoPi * t.k / tp->period_y;
      s += t.c * std::polar(1.0, wy * y) * wave_divided_diff(wx, x1, x2);
    }
    return s;
  }
  if (const auto* bl = std::get_if<BandLimited2>(&f.rep)) {
    double sc = bl->arg_scale;
    double u1 = sc * x1, u2 = sc * x2, v = sc * y;
    Cplx s = 0.0;
    for (const auto& a : bl->phi_terms)
      s += a.c * phi_divided_diff(u1 - a.shift_x, u2 - a.shift_x) * phi_kernel(v - a.shift_y);
    for (const auto& a : bl->wave_terms)
      s += a.c * wave_divided_diff(a.freq_x, u1, u2) * std::polar(1.0, a.freq_y * v);
    return bl->amp * sc * s;
  }
  if (const auto* ss = std::get_if<SeparableSum2>(&f.rep)) {
    Cplx s = 0.0;
    for (const auto& [phi, psi] : ss->factors) s += divided_diff(phi, x1, x2) * eval1(psi, y);
    return s;
  }
  if (x1 == x2) return eval2_dx(f, x1, y);
  return (eval2(f, x1, y) - eval2(f, x2, y)) / (x1 - x2);
}

Cplx divided_diff_2(const Function2D& f, double x, double y1, double y2) {
  if (const auto* tp = std::get_if<TrigPoly2>(&f.rep)) {
    Cplx s = 0.0;
    for (const auto& t : tp->terms) {
      double wx = kTwoPi * t.j / tp->period_x;
      double wy = kTwoPi * t.k / tp->period_y;
      s += t.c * std::polar(1.0, wx * x) * wave_divided_diff(wy, y1, y2);
    }
    return s;
  }
  if (const auto* bl = std::get_if<BandLimited2>(&f.rep)) {
    double sc = bl->arg_scale;
    double u = sc * x, v1 = sc * y1, v2 = sc * y2;
    Cplx s = 0.0;
    for (const auto& a : bl->phi_terms)
      s += a.c * phi_kernel(u - a.shift_x) * phi_divided_diff(v1 - a.shift_y, v2 - a.shift_y);
    for (const auto& a : bl->wave_terms)
      s += a.c * std::polar(1.0, a.freq_x * u) * wave_divided_diff(a.freq_y, v1, v2);
    return bl->amp * sc * s;
  }
  if (const auto* ss = std::get_if<SeparableSum2>(&f.rep)) {
    Cplx s = 0.0;
    for (const auto& [phi, psi] : ss->factors) s += eval1(phi, x) * divided_diff(psi, y1, y2);
    return s;
  }
  if (y1 == y2) return eval2_dy(f, x, y1);
  return (eval2(f, x, y1) - eval2(f, x, y2)) / (y1 - y2);
}

std::vector<double> sinc_weights(double x, int J) {
  std::vector<double> w(2 * J + 1);
  for (int j = -J; j <= J; ++j) w[j + J] = sinc(x - j * M_PI);
  return w;
}

DividedDiffMatrix divdiff_matrix(const Function2D& f, double y, int J) {
  auto bl = bandlimit_of(f);
  if (bl && *bl > 1.0 + 1e-9)
    throw Error(ErrorCode::kInvalidArgument,
                "divdiff_matrix needs bandlimit <= 1; rescale the function first");
  const int n = 2 * J + 1;
  std::vector<Cplx> fv(n), dv(n);
  for (int j = -J; j <= J; ++j) {
    fv[j + J] = eval2(f, j * M_PI, y);
    dv[j + J] = eval2_dx(f, j * M_PI, y);
  }
  DividedDiffMatrix out;
  out.y = y;
  out.truncation = J;
  out.entries = Matrix(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      out.entries(a, b) = (a == b) ? dv[a] : (fv[a] - fv[b]) / (double(a - b) * M_PI);
  return out;
}

Cplx sinc_expand_D1(const Function2D& f, double x1, double x2, double y, int J) {
  const int n = 2 * J + 1;
  std::vector<Cplx> fv(n), dv(n);
  for (int j = -J; j <= J; ++j) {
    fv[j + J] = eval2(f, j * M_PI, y);
    dv[j + J] = eval2_dx(f, j * M_PI, y);
  }
  std::vector<double> w1 = sinc_weights(x1, J), w2 = sinc_weights(x2, J);
  Cplx s = 0.0;
  for (int a = 0; a < n; ++a) {
    Cplx row = 0.0;
    for (int b = 0; b < n; ++b) {
      Cplx entry = (a == b) ? dv[a] : (fv[a] - fv[b]) / (double(a - b) * M_PI);
      row += w2[b] * entry;
    }
    s += w1[a] * row;
  }
  return s;
}

void hilbert_commutator_split(const std::vector<Cplx>& node_values,
                              const std::vector<Cplx>& node_derivs, Matrix* c_out,
                              Matrix* d_out) {
  const int n = int(node_values.size());
  if (n == 0 || node_derivs.size() != node_values.size() || n % 2 == 0)
    throw Error(ErrorCode::kInvalidArgument,
                "need matching odd-length node samples (|j| <= J)");
  Matrix c(n, n), d(n, n);
  for (int a = 0; a < n; ++a) {
    d(a, a) = node_derivs[a];
    for (int b = 0; b < n; ++b)
      if (a != b) c(a, b) = (node_values[a] - node_values[b]) / (double(a - b) * M_PI);
  }
  if (c_out) *c_out = std::move(c);
  if (d_out) *d_out = std::move(d);
}

Matrix discrete_hilbert_matrix(int size) {
  if (size <= 0) throw Error(ErrorCode::kInvalidArgument, "size must be positive");
  Matrix h(size, size);
  for (int j = 0; j < size; ++j)
    for (int k = 0; k < size; ++k)
      if (j != k) h(j, k) = 1.0 / double(j - k);
  return h;
}

double discrete_hilbert_norm(int size) {
  if (size <= 0) throw Error(ErrorCode::kInvalidArgument, "size must be positive");
  // Toeplitz matvec through a circulant embedding; Lanczos on top.
  const int m = next_pow2(2 * size);
  std::vector<Cplx> kernel_hat(m, 0.0);
  for (int d = -(size - 1); d <= size - 1; ++d) {
    if (d == 0) continue;
    kernel_hat[(d % m + m) % m] = 1.0 / double(d);
  }
  fft_inplace(kernel_hat, false);
  std::vector<Cplx> buf(m);
  auto apply = [&](const Cplx* x, Cplx* y) {
    std::fill(buf.begin(), buf.end(), Cplx(0.0, 0.0));
    std::copy(x, x + size, buf.begin());
    fft_inplace(buf, false);
    for (int i = 0; i < m; ++i) buf[i] *= kernel_hat[i];
    fft_inplace(buf, true);
    std::copy(buf.begin(), buf.begin() + size, y);
  };
  auto apply_adj = [&](const Cplx* x, Cplx* y) {
    apply(x, y);  // transpose of 1/(j-k) is its negative
    for (int i = 0; i < size; ++i) y[i] = -y[i];
  };
  return top_singular_value(apply, apply_adj, size, 500);
}

Cplx xi_kernel(int n, Cplx z) {
  if (n <= 0) throw Error(ErrorCode::kInvalidArgument, "n must be positive");
  if (std::abs(std::abs(z) - 1.0) > 1e-12)
    throw Error(ErrorCode::kInvalidArgument, "xi_kernel needs |z| = 1");
  // (2n+1)^{-1} sum_{k=-n}^{n} z^k; on the circle the symmetric pairs sum to
  // 2 cos(k theta), which is exact at z = 1.
  double theta = std::arg(z);
  double s = 1.0;
  for (int k = 1; k <= n; ++k) s += 2.0 * std::cos(k * theta);
  return Cplx(s / double(2 * n + 1), 0.0);
}

std::vector<Cplx> roots_of_unity(int count) {
  if (count <= 0) throw Error(ErrorCode::kInvalidArgument, "count must be positive");
  std::vector<Cplx> r(count);
  for (int k = 0; k < count; ++k) r[k] = std::polar(1.0, kTwoPi * k / count);
  return r;
}

Cplx torus_divided_diff_1(const TrigPoly2& f, Cplx z1, Cplx z2, Cplx tau) {
  Cplx s = 0.0;
  for (const auto& t : f.terms)
    s += t.c * ipow(tau, t.k) * unit_power_divided_diff(t.j, z1, z2);
  return s;
}

Cplx torus_divided_diff_2(const TrigPoly2& f, Cplx zeta, Cplx t1, Cplx t2) {
  Cplx s = 0.0;
  for (const auto& t : f.terms)
    s += t.c * ipow(zeta, t.j) * unit_power_divided_diff(t.k, t1, t2);
  return s;
}

Matrix torus_divdiff_matrix(const Function2D& f, Cplx tau, int n) {
  const auto* tp = std::get_if<TrigPoly2>(&f.rep);
  if (tp == nullptr || !tp->is_torus())
    throw Error(ErrorCode::kNotTorusFunction, "torus matrix needs a 2pi-periodic trig poly");
  if (tp->max_degree_x() > n)
    throw Error(ErrorCode::kDegreeTooHigh, "x-degree exceeds the kernel order n");
  std::vector<Cplx> roots = roots_of_unity(2 * n + 1);
  const int sz = 2 * n + 1;
  Matrix m(sz, sz);
  for (int a = 0; a < sz; ++a)
    for (int b = 0; b < sz; ++b) m(a, b) = torus_divided_diff_1(*tp, roots[a], roots[b], tau);
  return m;
}

// ---------------------------------------------------------------------------
// Representation builders.

double sup_norm_bound(const Function2D& f) {
  if (const auto* tp = std::get_if<TrigPoly2>(&f.rep)) {
    double s = 0.0;
    for (const auto& t : tp->terms) s += std::abs(t.c);
    return s;
  }
  if (const auto* bl = std::get_if<BandLimited2>(&f.rep)) {
    double s = 0.0;
    for (const auto& a : bl->phi_terms) s += std::abs(a.c);  // |phi| <= 1
    for (const auto& a : bl->wave_terms) s += std::abs(a.c);
    return bl->amp * s;
  }
  throw Error(ErrorCode::kUnsupportedRepresentation,
              "no certified sup bound for this representation");
}

int choose_sinc_truncation(double sigma, double support_abs_max, int margin) {
  return int(std::ceil(sigma * support_abs_max / M_PI)) + margin;
}

namespace {

double support_abs_max(const SpectralMeasure& sm) {
  double m = 0.0;
  for (const auto& p : sm.points) m = std::max(m, std::abs(p.value.real()));
  return m;
}

}  // namespace

HaagerupLikeRep1 build_haagerup_like_rep_D1(const Function2D& f, double sigma, int J,
                                            const SpectralMeasure& sm1,
                                            const SpectralMeasure& sm2,
                                            const SpectralMeasure& sm3) {
  if (!(sigma > 0.0)) throw Error(ErrorCode::kInvalidArgument, "sigma must be positive");
  auto bl = bandlimit_of(f);
  if (bl && *bl > sigma * (1.0 + 1e-9))
    throw Error(ErrorCode::kInvalidArgument, "function bandlimit exceeds sigma");
  const double maxabs = std::max(support_abs_max(sm1), support_abs_max(sm2));
  if (sigma * maxabs / M_PI > double(J) - 10.0)
    throw Error(ErrorCode::kTruncationInsufficient,
                "node window does not cover the spectral support");

  const int nw = 2 * J + 1;
  const size_t n1 = sm1.points.size(), n2 = sm2.points.size(), n3 = sm3.points.size();
  const double supf = sup_norm_bound(f);

  // Window tables of the rescaled node expansion.
  std::vector<ValueTable> alpha(nw, ValueTable(n1)), beta(nw, ValueTable(n2));
  for (size_t i = 0; i < n1; ++i) {
    double x = sigma * sm1.points[i].value.real();
    for (int j = -J; j <= J; ++j) alpha[j + J][i] = sinc(x - j * M_PI);
  }
  for (size_t i = 0; i < n2; ++i) {
    double x = sigma * sm2.points[i].value.real();
    for (int k = -J; k <= J; ++k) beta[k + J][i] = sinc(x - k * M_PI);
  }
  std::vector<std::vector<ValueTable>> gamma(nw, std::vector<ValueTable>(nw, ValueTable(n3)));
  for (int j = 0; j < nw; ++j)
    for (int k = 0; k < nw; ++k)
      for (size_t c = 0; c < n3; ++c)
        gamma[j][k][c] = divided_diff_1(f, (j - J) * M_PI / sigma, (k - J) * M_PI / sigma,
                                        sm3.points[c].value.real());

  // Truncation residue on the finite supports.
  std::vector<std::vector<std::vector<Cplx>>> residue(
      n1, std::vector<std::vector<Cplx>>(n2, std::vector<Cplx>(n3)));
  double emax2 = 0.0;
  std::vector<Cplx> partial(nw);
  for (size_t b = 0; b < n2; ++b) {
    for (size_t c = 0; c < n3; ++c) {
      for (int j = 0; j < nw; ++j) {
        Cplx s = 0.0;
        for (int k = 0; k < nw; ++k) s += beta[k][b] * gamma[j][k][c];
        partial[j] = s;
      }
      for (size_t a = 0; a < n1; ++a) {
        Cplx win = 0.0;
        for (int j = 0; j < nw; ++j) win += alpha[j][a] * partial[j];
        residue[a][b][c] = divided_diff_1(f, sm1.points[a].value.real(),
                                          sm2.points[b].value.real(),
                                          sm3.points[c].value.real()) -
                           win;
      }
    }
  }
  for (size_t c = 0; c < n3; ++c) {
    double fro2 = 0.0;
    for (size_t a = 0; a < n1; ++a)
      for (size_t b = 0; b < n2; ++b) fro2 += std::norm(residue[a][b][c]);
    emax2 = std::max(emax2, fro2);
  }
  const double emax = std::sqrt(emax2);
  const double base = 3.0 * sigma * supf;
  double t2 = (base > 0.0) ? emax / base : (emax > 0.0 ? 2.0 : 0.0);
  if (t2 > 1.0)
    throw Error(ErrorCode::kTruncationInsufficient,
                "truncation residue would dominate the representation bound");

  HaagerupLikeRep1 rep;
  rep.alpha = std::move(alpha);
  rep.beta = std::move(beta);
  rep.gamma = std::move(gamma);
  if (emax > 0.0) {
    const double t = std::sqrt(t2);
    // Indicator rows weighted by t; the residue block carries E / t^2, so the
    // correction contributes exactly `base` to the third factor norm.
    for (size_t a = 0; a < n1; ++a) {
      ValueTable ind(n1, 0.0);
      ind[a] = t;
      rep.alpha.push_back(std::move(ind));
    }
    for (size_t b = 0; b < n2; ++b) {
      ValueTable ind(n2, 0.0);
      ind[b] = t;
      rep.beta.push_back(std::move(ind));
    }
    const size_t rows = rep.alpha.size(), cols = rep.beta.size();
    for (auto& row : rep.gamma) row.resize(cols, ValueTable(n3, 0.0));
    rep.gamma.resize(rows, std::vector<ValueTable>(cols, ValueTable(n3, 0.0)));
    for (size_t a = 0; a < n1; ++a)
      for (size_t b = 0; b < n2; ++b) {
        ValueTable block(n3);
        for (size_t c = 0; c < n3; ++c) block[c] = residue[a][b][c] / t2;
        rep.gamma[nw + a][nw + b] = std::move(block);
      }
  }
  double formula = base * (1.0 + t2);
  double product = haagerup_norm_of_rep(rep);
  rep.declared_bound = std::min(formula, product);
  return rep;
}

HaagerupLikeRep2 build_haagerup_like_rep_D2(const Function2D& f, double sigma, int J,
                                            const SpectralMeasure& sm1,
                                            const SpectralMeasure& sm2,
                                            const SpectralMeasure& sm3) {
  // D2 f(x, y1, y2) = D1 g(y1, y2, x) for the flipped g; build the first-kind
  // rep of g over (sm2, sm3, sm1) and move the matrix factor to slot one.
  HaagerupLikeRep1 base = build_haagerup_like_rep_D1(flip_xy(f), sigma, J, sm2, sm3, sm1);
  HaagerupLikeRep2 rep;
  rep.alpha = std::move(base.gamma);
  rep.beta = std::move(base.alpha);
  rep.gamma = std::move(base.beta);
  rep.declared_bound = base.declared_bound;
  return rep;
}

HaagerupLikeRep1 build_haagerup_like_rep_D1_besov(const Function2D& f,
                                                  const SpectralMeasure& sm1,
                                                  const SpectralMeasure& sm2,
                                                  const SpectralMeasure& sm3, int margin) {
  const auto* tp = std::get_if<TrigPoly2>(&f.rep);
  if (tp == nullptr)
    throw Error(ErrorCode::kUnsupportedRepresentation,
                "the Littlewood-Paley route needs a trig polynomial");
  LPFilterBank bank = make_filter(FilterKind::kDefault, {});
  LPDecomposition2 dec = lp_decompose_torus(*tp, bank);
  const double maxabs = std::max(support_abs_max(sm1), support_abs_max(sm2));

  std::vector<HaagerupLikeRep1> parts;
  std::vector<double> weights;
  double total = 0.0;
  for (const auto& [n, piece] : dec.pieces) {
    double sup_piece = 0.0;
    for (const auto& t : piece.terms) sup_piece += std::abs(t.c);
    if (sup_piece == 0.0) continue;
    double sigma = std::ldexp(1.0, n + 1);  // 2^{n+1}
    int J = choose_sinc_truncation(sigma, maxabs, margin);
    Function2D pf{piece, sigma};
    parts.push_back(build_haagerup_like_rep_D1(pf, sigma, J, sm1, sm2, sm3));
    weights.push_back(std::max(parts.back().declared_bound, 1e-300));
    total += weights.back();
  }

  HaagerupLikeRep1 combined;
  const size_t n3 = sm3.points.size();
  if (parts.empty()) {
    combined.alpha.assign(1, ValueTable(sm1.points.size(), 0.0));
    combined.beta.assign(1, ValueTable(sm2.points.size(), 0.0));
    combined.gamma.assign(1, std::vector<ValueTable>(1, ValueTable(n3, 0.0)));
    combined.declared_bound = 0.0;
    return combined;
  }
  size_t rows = 0, cols = 0;
  for (const auto& p : parts) {
    rows += p.alpha.size();
    cols += p.beta.size();
  }
  combined.gamma.assign(rows, std::vector<ValueTable>(cols, ValueTable(n3, 0.0)));
  size_t row0 = 0, col0 = 0;
  for (size_t pi = 0; pi < parts.size(); ++pi) {
    const auto& p = parts[pi];
    double wscale = std::sqrt(weights[pi] / total);
    for (const auto& a : p.alpha) {
      ValueTable scaled = a;
      for (auto& v : scaled) v *= wscale;
      combined.alpha.push_back(std::move(scaled));
    }
    for (const auto& b : p.beta) {
      ValueTable scaled = b;
      for (auto& v : scaled) v *= wscale;
      combined.beta.push_back(std::move(scaled));
    }
    for (size_t j = 0; j < p.gamma.size(); ++j)
      for (size_t k = 0; k < p.gamma[j].size(); ++k) {
        ValueTable scaled = p.gamma[j][k];
        for (auto& v : scaled) v *= total / weights[pi];
        combined.gamma[row0 + j][col0 + k] = std::move(scaled);
      }
    row0 += p.alpha.size();
    col0 += p.beta.size();
  }
  combined.declared_bound = haagerup_norm_of_rep(combined);
  return combined;
}

}  // namespace opint
