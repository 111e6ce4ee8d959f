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

#include "opint/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "opint/rng.hpp"

namespace opint {

namespace {

// Implicit-shift QL on a real symmetric tridiagonal (d, e).  If q is non-null
// the rotations are accumulated into its columns.  Classic tql2 scheme.
void tridiag_ql(std::vector<double>& d, std::vector<double>& e, Matrix* q) {
  const int n = int(d.size());
  if (n == 0) return;
  e.resize(n, 0.0);  // e[n-1] used as workspace
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-300 || std::abs(e[m]) <= 2.3e-16 * dd) break;
      }
      if (m != l) {
        if (++iter > 60)
          throw Error(ErrorCode::kNoConvergence, "tridiagonal QL did not converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        bool underflow = false;
        int i = m - 1;
        for (; i >= l; --i) {
          double f = s * e[i];
          double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (q) {
            for (int k = 0; k < q->rows(); ++k) {
              Cplx t = (*q)(k, i + 1);
              (*q)(k, i + 1) = s * (*q)(k, i) + c * t;
              (*q)(k, i) = c * (*q)(k, i) - s * t;
            }
          }
        }
        if (underflow && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

double tridiag_max_eigenvalue(std::vector<double> d, std::vector<double> e) {
  tridiag_ql(d, e, nullptr);
  return *std::max_element(d.begin(), d.end());
}

}  // namespace

void hermitian_eigen(const Matrix& h, std::vector<double>* values, Matrix* vectors) {
  if (!h.square()) throw Error(ErrorCode::kDimensionMismatch, "eigen of non-square matrix");
  const int n = h.rows();
  // Work on the exactly Hermitian part; callers have already checked that the
  // skew part is below tolerance.
  Matrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));

  Matrix q = Matrix::identity(n);
  std::vector<Cplx> w(n), u(n), qw(n);

  // Householder reduction to Hermitian tridiagonal form, accumulating the
  // unitary similarity into q.
  for (int k = 0; k + 2 < n; ++k) {
    double xnorm2 = 0.0;
    for (int i = k + 1; i < n; ++i) xnorm2 += std::norm(a(i, k));
    double xnorm = std::sqrt(xnorm2);
    if (xnorm == 0.0) continue;
    Cplx x0 = a(k + 1, k);
    Cplx alpha = (std::abs(x0) > 0.0) ? -(x0 / std::abs(x0)) * xnorm : Cplx(-xnorm, 0.0);
    double vnorm2 = 0.0;
    for (int i = k + 1; i < n; ++i) {
      w[i] = a(i, k);
      if (i == k + 1) w[i] -= alpha;
      vnorm2 += std::norm(w[i]);
    }
    if (vnorm2 <= 0.0) continue;
    double inv = 1.0 / std::sqrt(vnorm2);
    for (int i = k + 1; i < n; ++i) w[i] *= inv;

    // u = A_sub w, c = w' u; A_sub <- A_sub - 2 u w' - 2 w u' + 4 c w w'
    double c = 0.0;
    for (int i = k + 1; i < n; ++i) {
      Cplx s = 0.0;
      for (int j = k + 1; j < n; ++j) s += a(i, j) * w[j];
      u[i] = s;
    }
    for (int i = k + 1; i < n; ++i) c += (std::conj(w[i]) * u[i]).real();
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a(i, j) += -2.0 * u[i] * std::conj(w[j]) - 2.0 * w[i] * std::conj(u[j]) +
                   4.0 * c * w[i] * std::conj(w[j]);
      }
    }
    a(k + 1, k) = alpha;
    a(k, k + 1) = std::conj(alpha);
    for (int i = k + 2; i < n; ++i) {
      a(i, k) = 0.0;
      a(k, i) = 0.0;
    }
    // q <- q (I - 2 w w')
    for (int i = 0; i < n; ++i) {
      Cplx s = 0.0;
      for (int j = k + 1; j < n; ++j) s += q(i, j) * w[j];
      qw[i] = s;
    }
    for (int i = 0; i < n; ++i)
      for (int j = k + 1; j < n; ++j) q(i, j) -= 2.0 * qw[i] * std::conj(w[j]);
  }

  // Phase-scale the complex tridiagonal to a real one, folding the diagonal
  // unitary into q.
  std::vector<double> d(n), e(n > 1 ? n - 1 : 0);
  std::vector<Cplx> phase(n, Cplx(1.0, 0.0));
  for (int i = 0; i < n; ++i) d[i] = a(i, i).real();
  for (int i = 0; i + 1 < n; ++i) {
    Cplx off = a(i + 1, i);
    double mag = std::abs(off);
    e[i] = mag;
    phase[i + 1] = (mag > 0.0) ? phase[i] * (off / mag) : phase[i];
  }
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) q(i, j) *= phase[j];

  tridiag_ql(d, e, &q);

  // Ascending order.
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int i, int j) { return d[i] < d[j]; });
  values->resize(n);
  Matrix sorted(n, n);
  for (int j = 0; j < n; ++j) {
    (*values)[j] = d[idx[j]];
    for (int i = 0; i < n; ++i) sorted(i, j) = q(i, idx[j]);
  }
  if (vectors) *vectors = std::move(sorted);
}

namespace {

Matrix rank_sum_projector(const Matrix& vectors, const std::vector<int>& cols) {
  const int n = vectors.rows();
  Matrix p(n, n);
  for (int c : cols)
    for (int i = 0; i < n; ++i) {
      Cplx vi = vectors(i, c);
      if (vi == 0.0) continue;
      for (int j = 0; j < n; ++j) p(i, j) += vi * std::conj(vectors(j, c));
    }
  return p;
}

double default_kind_tol(const Matrix& h) { return 1e-10 * std::max(h.frobenius_norm(), 1.0); }

void check_resolution(const SpectralMeasure& sm) {
  Matrix s(sm.dim, sm.dim);
  for (const auto& pt : sm.points) s += pt.projector;
  s -= Matrix::identity(sm.dim);
  if (s.frobenius_norm() > 1e-7 * sm.dim)
    throw Error(ErrorCode::kNoConvergence, "projectors do not resolve the identity");
}

SpectralMeasure decompose_hermitian(const Matrix& h) {
  std::vector<double> vals;
  Matrix vecs;
  hermitian_eigen(h, &vals, &vecs);
  const int n = h.rows();
  double diameter = vals.empty() ? 0.0 : vals.back() - vals.front();
  double thr = 1e-8 * (diameter + 1.0);

  SpectralMeasure sm;
  sm.dim = n;
  int start = 0;
  while (start < n) {
    int stop = start + 1;
    while (stop < n && vals[stop] - vals[stop - 1] < thr) ++stop;
    std::vector<int> cols;
    double mean = 0.0;
    for (int c = start; c < stop; ++c) {
      cols.push_back(c);
      mean += vals[c];
    }
    mean /= double(stop - start);
    sm.points.push_back({Cplx(mean, 0.0), rank_sum_projector(vecs, cols)});
    start = stop;
  }
  check_resolution(sm);
  return sm;
}

SpectralMeasure decompose_unitary(const Matrix& u) {
  const int n = u.rows();
  Matrix uh = u.adjoint();
  Matrix h1 = u + uh;                      // U + U*
  Matrix h2 = Cplx(0.0, -1.0) * (u - uh);  // -i (U - U*)

  std::vector<double> a;
  Matrix v;
  hermitian_eigen(h1, &a, &v);

  // Within (near-)degenerate eigenspaces of U + U*, diagonalize the
  // restriction of -i(U - U*); the refined vectors are joint eigenvectors and
  // hence eigenvectors of U.
  double thr1 = 1e-8 * ((a.empty() ? 0.0 : a.back() - a.front()) + 1.0);
  std::vector<Cplx> eigenvalues(n);
  int start = 0;
  while (start < n) {
    int stop = start + 1;
    while (stop < n && a[stop] - a[stop - 1] < thr1) ++stop;
    const int m = stop - start;
    if (m > 1) {
      Matrix s(m, m);
      for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) {
          Cplx acc = 0.0;
          for (int i = 0; i < n; ++i) {
            Cplx h2v = 0.0;
            for (int j = 0; j < n; ++j) h2v += h2(i, j) * v(j, start + c);
            acc += std::conj(v(i, start + r)) * h2v;
          }
          s(r, c) = acc;
        }
      std::vector<double> sval;
      Matrix svec;
      hermitian_eigen(s, &sval, &svec);
      Matrix refined(n, m);
      for (int i = 0; i < n; ++i)
        for (int c = 0; c < m; ++c) {
          Cplx acc = 0.0;
          for (int r = 0; r < m; ++r) acc += v(i, start + r) * svec(r, c);
          refined(i, c) = acc;
        }
      for (int c = 0; c < m; ++c)
        for (int i = 0; i < n; ++i) v(i, start + c) = refined(i, c);
    }
    start = stop;
  }
  // Rayleigh quotients with U itself give the eigenvalues on the circle.
  std::vector<Cplx> ucol(n);
  for (int c = 0; c < n; ++c) {
    Cplx lam = 0.0;
    for (int i = 0; i < n; ++i) {
      Cplx s = 0.0;
      for (int j = 0; j < n; ++j) s += u(i, j) * v(j, c);
      lam += std::conj(v(i, c)) * s;
    }
    eigenvalues[c] = lam;
  }

  // Order by argument in [0, 2pi) and cluster, including across the wrap.
  auto arg02pi = [](Cplx z) {
    double t = std::arg(z);
    if (t < 0.0) t += 2.0 * M_PI;
    return t;
  };
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](int i, int j) { return arg02pi(eigenvalues[i]) < arg02pi(eigenvalues[j]); });

  double diameter = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      diameter = std::max(diameter, std::abs(eigenvalues[i] - eigenvalues[j]));
  double thr = 1e-8 * (diameter + 1.0);

  std::vector<std::vector<int>> groups;
  for (int pos = 0; pos < n; ++pos) {
    int c = idx[pos];
    if (!groups.empty() &&
        std::abs(eigenvalues[c] - eigenvalues[groups.back().back()]) < thr)
      groups.back().push_back(c);
    else
      groups.push_back({c});
  }
  if (groups.size() > 1) {
    Cplx first = eigenvalues[groups.front().front()];
    Cplx last = eigenvalues[groups.back().back()];
    if (std::abs(first - last) < thr) {
      for (int c : groups.back()) groups.front().push_back(c);
      groups.pop_back();
    }
  }

  SpectralMeasure sm;
  sm.dim = n;
  for (const auto& g : groups) {
    Cplx mean = 0.0;
    for (int c : g) mean += eigenvalues[c];
    mean /= double(g.size());
    sm.points.push_back({mean, rank_sum_projector(v, g)});
  }
  std::sort(sm.points.begin(), sm.points.end(),
            [&](const SpectralPoint& x, const SpectralPoint& y) {
              return arg02pi(x.value) < arg02pi(y.value);
            });
  check_resolution(sm);
  return sm;
}

}  // namespace

SpectralMeasure spectral_decompose(const Matrix& h, OperatorKind kind, double tol) {
  if (!h.square())
    throw Error(ErrorCode::kDimensionMismatch, "spectral decomposition needs a square matrix");
  if (!h.all_finite()) throw Error(ErrorCode::kInvalidArgument, "matrix has non-finite entries");
  if (tol <= 0.0) tol = default_kind_tol(h);
  if (kind == OperatorKind::kHermitian) {
    if ((h - h.adjoint()).frobenius_norm() > tol)
      throw Error(ErrorCode::kNotNormal, "matrix is not Hermitian within tolerance");
    return decompose_hermitian(h);
  }
  Matrix gram = h.adjoint() * h;
  if ((gram - Matrix::identity(h.rows())).frobenius_norm() > tol)
    throw Error(ErrorCode::kNotNormal, "matrix is not unitary within tolerance");
  return decompose_unitary(h);
}

Matrix reconstruct(const SpectralMeasure& sm) {
  Matrix r(sm.dim, sm.dim);
  for (const auto& pt : sm.points) {
    Matrix scaled = pt.projector;
    scaled *= pt.value;
    r += scaled;
  }
  return r;
}

std::vector<double> singular_values(const Matrix& m) {
  if (!m.all_finite()) throw Error(ErrorCode::kInvalidArgument, "matrix has non-finite entries");
  // One-sided Jacobi orthogonalizes columns; run on the adjoint when that
  // means fewer columns.
  Matrix a = (m.rows() >= m.cols()) ? m : m.adjoint();
  const int rows = a.rows(), n = a.cols();
  auto col_dot = [&](int p, int q) {
    Cplx s = 0.0;
    for (int i = 0; i < rows; ++i) s += std::conj(a(i, p)) * a(i, q);
    return s;
  };
  const double tol = 1e-15;
  // Columns at roundoff level are treated as zero outright; the relative
  // criterion alone never settles on numerically parallel noise columns.
  double fro2 = 0.0;
  for (const auto& v : a.data()) fro2 += std::norm(v);
  const double abs_cut = 1e-30 * fro2;
  bool converged = false;
  for (int sweep = 0; sweep < 60 && !converged; ++sweep) {
    converged = true;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double app = col_dot(p, p).real();
        double aqq = col_dot(q, q).real();
        Cplx apq = col_dot(p, q);
        double mag = std::abs(apq);
        if (mag <= tol * std::sqrt(app * aqq) || mag <= abs_cut || app == 0.0 || aqq == 0.0)
          continue;
        converged = false;
        Cplx phase = apq / mag;  // e^{i phi}
        double tau = (aqq - app) / (2.0 * mag);
        double t = std::copysign(1.0, tau) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = c * t;
        Cplx pc = std::conj(phase);
        for (int i = 0; i < rows; ++i) {
          Cplx ap = a(i, p), aq = a(i, q);
          a(i, p) = c * ap - s * (pc * aq);
          a(i, q) = s * ap + c * (pc * aq);
        }
      }
    }
  }
  if (!converged) throw Error(ErrorCode::kNoConvergence, "Jacobi SVD did not converge");
  std::vector<double> sv(n);
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int i = 0; i < rows; ++i) s += std::norm(a(i, j));
    sv[j] = std::sqrt(s);
  }
  std::sort(sv.begin(), sv.end(), std::greater<double>());
  return sv;
}

double schatten_norm(const Matrix& m, double p) {
  if (!(p > 0.0)) throw Error(ErrorCode::kInvalidArgument, "Schatten exponent must be positive");
  if (std::isinf(p)) return operator_norm(m);
  std::vector<double> sv = singular_values(m);
  double smax = sv.empty() ? 0.0 : sv.front();
  if (smax == 0.0) return 0.0;
  double acc = 0.0;
  for (double s : sv) acc += std::pow(s / smax, p);
  return smax * std::pow(acc, 1.0 / p);
}

double operator_norm(const Matrix& m) {
  if (std::max(m.rows(), m.cols()) <= 320) {
    std::vector<double> sv = singular_values(m);
    return sv.empty() ? 0.0 : sv.front();
  }
  auto apply = [&m](const Cplx* x, Cplx* y) { matvec(m, x, y); };
  auto apply_adj = [&m](const Cplx* x, Cplx* y) { matvec_adjoint(m, x, y); };
  return top_singular_value(apply, apply_adj, m.cols(), 450);
}

double top_singular_value(const std::function<void(const Cplx*, Cplx*)>& apply,
                          const std::function<void(const Cplx*, Cplx*)>& apply_adjoint,
                          int n, int max_iter) {
  if (n <= 0) throw Error(ErrorCode::kInvalidArgument, "dimension must be positive");
  max_iter = std::min(max_iter, n);
  // Lanczos on A*A with full reorthogonalization and a fixed start vector.
  std::vector<std::vector<Cplx>> basis;
  std::vector<double> alpha, beta;
  std::vector<Cplx> v(n), t(n), w(n);
  Rng rng(0x5EEDF00Dull);
  for (int i = 0; i < n; ++i) v[i] = Cplx(rng.uniform() - 0.5, rng.uniform() - 0.5);
  double nrm = 0.0;
  for (auto& x : v) nrm += std::norm(x);
  nrm = std::sqrt(nrm);
  for (auto& x : v) x /= nrm;

  double prev = 0.0;
  int stable = 0;
  for (int k = 0; k < max_iter; ++k) {
    basis.push_back(v);
    apply(v.data(), t.data());
    apply_adjoint(t.data(), w.data());  // w = A*A v
    double a = 0.0;
    for (int i = 0; i < n; ++i) a += (std::conj(v[i]) * w[i]).real();
    alpha.push_back(a);
    // Two-pass reorthogonalization against the whole basis.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) {
        Cplx dot = 0.0;
        for (int i = 0; i < n; ++i) dot += std::conj(b[i]) * w[i];
        for (int i = 0; i < n; ++i) w[i] -= dot * b[i];
      }
    }
    double bnorm = 0.0;
    for (const auto& x : w) bnorm += std::norm(x);
    bnorm = std::sqrt(bnorm);
    double top = tridiag_max_eigenvalue(alpha, beta);
    if (bnorm < 1e-14 * (std::abs(a) + 1.0)) return std::sqrt(std::max(top, 0.0));
    if (k > 4) {
      if (std::abs(top - prev) <= 1e-13 * std::max(top, 1e-300)) {
        if (++stable >= 3) return std::sqrt(std::max(top, 0.0));
      } else {
        stable = 0;
      }
    }
    prev = top;
    beta.push_back(bnorm);
    for (int i = 0; i < n; ++i) v[i] = w[i] / bnorm;
  }
  return std::sqrt(std::max(tridiag_max_eigenvalue(alpha, beta), 0.0));
}

}  // namespace opint
