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

#include "opint/toi.hpp"

#include <cmath>

namespace opint {

namespace {

void check_dims(const SpectralMeasure& sm1, const SpectralMeasure& sm2,
                const SpectralMeasure& sm3, const Matrix& t, const Matrix& r) {
  if (sm1.dim != sm2.dim || sm2.dim != sm3.dim || !t.square() || !r.square() ||
      t.rows() != sm1.dim || r.rows() != sm1.dim)
    throw Error(ErrorCode::kDimensionMismatch, "triple operator integral shape mismatch");
}

void check_table(const ValueTable& table, const SpectralMeasure& sm, const char* which) {
  if (table.size() != sm.points.size())
    throw Error(ErrorCode::kSupportNotCovered,
                std::string(which) + " table does not cover the spectral support");
}

// int f dE for a tabulated function: sum of table[i] * P_i.
Matrix integrate(const ValueTable& table, const SpectralMeasure& sm) {
  Matrix m(sm.dim, sm.dim);
  for (size_t i = 0; i < sm.points.size(); ++i) {
    if (table[i] == 0.0) continue;
    Matrix scaled = sm.points[i].projector;
    scaled *= table[i];
    m += scaled;
  }
  return m;
}

double linf_l2_norm(const std::vector<ValueTable>& tables, size_t support_size) {
  double worst = 0.0;
  for (size_t i = 0; i < support_size; ++i) {
    double s = 0.0;
    for (const auto& t : tables) s += std::norm(t[i]);
    worst = std::max(worst, s);
  }
  return std::sqrt(worst);
}

double linf_opnorm(const std::vector<std::vector<ValueTable>>& grid, size_t support_size) {
  const int rows = int(grid.size());
  const int cols = rows ? int(grid[0].size()) : 0;
  if (rows == 0 || cols == 0) return 0.0;
  double worst = 0.0;
  for (size_t i = 0; i < support_size; ++i) {
    Matrix slice(rows, cols);
    for (int j = 0; j < rows; ++j)
      for (int k = 0; k < cols; ++k) slice(j, k) = grid[j][k][i];
    worst = std::max(worst, operator_norm(slice));
  }
  return worst;
}

}  // namespace

FactorNorms factor_norms(const HaagerupRep& rep) {
  size_t n1 = rep.alpha.empty() ? 0 : rep.alpha[0].size();
  size_t n2 = 0;
  if (!rep.beta.empty() && !rep.beta[0].empty()) n2 = rep.beta[0][0].size();
  size_t n3 = rep.gamma.empty() ? 0 : rep.gamma[0].size();
  return {linf_l2_norm(rep.alpha, n1), linf_opnorm(rep.beta, n2), linf_l2_norm(rep.gamma, n3)};
}

FactorNorms factor_norms(const HaagerupLikeRep1& rep) {
  size_t n1 = rep.alpha.empty() ? 0 : rep.alpha[0].size();
  size_t n2 = rep.beta.empty() ? 0 : rep.beta[0].size();
  size_t n3 = 0;
  if (!rep.gamma.empty() && !rep.gamma[0].empty()) n3 = rep.gamma[0][0].size();
  return {linf_l2_norm(rep.alpha, n1), linf_l2_norm(rep.beta, n2), linf_opnorm(rep.gamma, n3)};
}

FactorNorms factor_norms(const HaagerupLikeRep2& rep) {
  size_t n1 = 0;
  if (!rep.alpha.empty() && !rep.alpha[0].empty()) n1 = rep.alpha[0][0].size();
  size_t n2 = rep.beta.empty() ? 0 : rep.beta[0].size();
  size_t n3 = rep.gamma.empty() ? 0 : rep.gamma[0].size();
  return {linf_opnorm(rep.alpha, n1), linf_l2_norm(rep.beta, n2), linf_l2_norm(rep.gamma, n3)};
}

double haagerup_norm_of_rep(const HaagerupRep& rep) { return factor_norms(rep).product(); }
double haagerup_norm_of_rep(const HaagerupLikeRep1& rep) { return factor_norms(rep).product(); }
double haagerup_norm_of_rep(const HaagerupLikeRep2& rep) { return factor_norms(rep).product(); }

Matrix toi_direct(const std::function<Cplx(Cplx, Cplx, Cplx)>& psi, const SpectralMeasure& sm1,
                  const SpectralMeasure& sm2, const SpectralMeasure& sm3, const Matrix& t,
                  const Matrix& r) {
  check_dims(sm1, sm2, sm3, t, r);
  const int n = sm1.dim;
  // Fixed (i, j, k) ascending order so parallel callers stay bit-identical.
  std::vector<Matrix> rs;
  rs.reserve(sm3.points.size());
  for (const auto& p3 : sm3.points) rs.push_back(r * p3.projector);
  Matrix w(n, n);
  for (const auto& p1 : sm1.points) {
    Matrix pt = p1.projector * t;
    Matrix inner(n, n);
    for (const auto& p2 : sm2.points) {
      Matrix weighted(n, n);
      for (size_t k = 0; k < sm3.points.size(); ++k) {
        Cplx v = psi(p1.value, p2.value, sm3.points[k].value);
        if (v == 0.0) continue;
        Matrix scaled = rs[k];
        scaled *= v;
        weighted += scaled;
      }
      inner += p2.projector * weighted;
    }
    w += pt * inner;
  }
  return w;
}

Matrix toi_haagerup(const HaagerupRep& rep, const SpectralMeasure& sm1,
                    const SpectralMeasure& sm2, const SpectralMeasure& sm3, const Matrix& t,
                    const Matrix& r) {
  check_dims(sm1, sm2, sm3, t, r);
  const int n = sm1.dim;
  const size_t nj = rep.alpha.size(), nk = rep.gamma.size();
  if (rep.beta.size() != nj)
    throw Error(ErrorCode::kDimensionMismatch, "beta row count does not match alpha");
  for (const auto& row : rep.beta)
    if (row.size() != nk)
      throw Error(ErrorCode::kDimensionMismatch, "beta column count does not match gamma");
  for (const auto& a : rep.alpha) check_table(a, sm1, "alpha");
  for (const auto& row : rep.beta)
    for (const auto& b : row) check_table(b, sm2, "beta");
  for (const auto& g : rep.gamma) check_table(g, sm3, "gamma");

  std::vector<Matrix> rc;
  rc.reserve(nk);
  for (size_t k = 0; k < nk; ++k) rc.push_back(r * integrate(rep.gamma[k], sm3));
  Matrix w(n, n);
  for (size_t j = 0; j < nj; ++j) {
    Matrix mid(n, n);
    for (size_t k = 0; k < nk; ++k) mid += integrate(rep.beta[j][k], sm2) * rc[k];
    w += integrate(rep.alpha[j], sm1) * (t * mid);
  }
  return w;
}

Matrix toi_projective(const ProjectiveRep& rep, const SpectralMeasure& sm1,
                      const SpectralMeasure& sm2, const SpectralMeasure& sm3, const Matrix& t,
                      const Matrix& r) {
  check_dims(sm1, sm2, sm3, t, r);
  Matrix w(sm1.dim, sm1.dim);
  for (const auto& term : rep.terms) {
    check_table(term[0], sm1, "phi");
    check_table(term[1], sm2, "psi");
    check_table(term[2], sm3, "chi");
    w += integrate(term[0], sm1) * t * integrate(term[1], sm2) * r * integrate(term[2], sm3);
  }
  return w;
}

HaagerupRep embed_projective(const ProjectiveRep& rep) {
  HaagerupRep out;
  auto sup = [](const ValueTable& t) {
    double m = 0.0;
    for (const auto& v : t) m = std::max(m, std::abs(v));
    return m;
  };
  for (const auto& term : rep.terms) {
    double np = sup(term[0]), ns = sup(term[1]), nc = sup(term[2]);
    double c = np * ns * nc;
    if (c == 0.0) continue;
    ValueTable alpha = term[0], gamma = term[2], beta = term[1];
    for (auto& v : alpha) v *= std::sqrt(c) / np;
    for (auto& v : gamma) v *= std::sqrt(c) / nc;
    for (auto& v : beta) v /= ns;
    size_t idx = out.alpha.size();
    out.alpha.push_back(std::move(alpha));
    out.gamma.push_back(std::move(gamma));
    // Diagonal beta: the new row gets zeros except at its own column.
    size_t n2 = beta.size();
    for (auto& row : out.beta) row.push_back(ValueTable(n2, 0.0));
    out.beta.emplace_back(idx + 1, ValueTable(n2, 0.0));
    out.beta[idx][idx] = std::move(beta);
  }
  return out;
}

namespace {

// Shared duality assembly: W_{ab} = trace(V(e_{ba}) X), where V runs the
// flipped-integrand Haagerup TOI with the matrix unit in the T slot
// (unit_first) or the R slot.
Matrix assemble_by_duality(const HaagerupRep& flipped, const SpectralMeasure& fm1,
                           const SpectralMeasure& fm2, const SpectralMeasure& fm3,
                           const Matrix& fixed, bool unit_first, const Matrix& pair_with,
                           int n) {
  Matrix w(n, n);
  for (int b = 0; b < n; ++b) {
    for (int a = 0; a < n; ++a) {
      Matrix unit(n, n);
      unit(b, a) = 1.0;
      Matrix v = unit_first ? toi_haagerup(flipped, fm1, fm2, fm3, unit, fixed)
                            : toi_haagerup(flipped, fm1, fm2, fm3, fixed, unit);
      w(a, b) = (v * pair_with).trace();
    }
  }
  return w;
}

}  // namespace

Matrix toi_haagerup_like_1(const HaagerupLikeRep1& rep, const SpectralMeasure& sm1,
                           const SpectralMeasure& sm2, const SpectralMeasure& sm3,
                           const Matrix& t, const Matrix& r, double p) {
  check_dims(sm1, sm2, sm3, t, r);
  if (!(p >= 1.0 && p <= 2.0))
    throw Error(ErrorCode::kRegimeMismatch, "first-kind integral needs p in [1, 2]");
  const size_t nj = rep.alpha.size(), nk = rep.beta.size();
  if (rep.gamma.size() != nj)
    throw Error(ErrorCode::kDimensionMismatch, "gamma row count does not match alpha");
  for (const auto& row : rep.gamma)
    if (row.size() != nk)
      throw Error(ErrorCode::kDimensionMismatch, "gamma column count does not match beta");
  for (const auto& a : rep.alpha) check_table(a, sm1, "alpha");
  for (const auto& b : rep.beta) check_table(b, sm2, "beta");
  for (const auto& row : rep.gamma)
    for (const auto& g : row) check_table(g, sm3, "gamma");

  // Phi(x2, x3, x1) = Psi(x1, x2, x3) is an honest Haagerup rep over the
  // permuted slots: a_k = beta_k, b_{kj} = gamma_{jk}, c_j = alpha_j.
  HaagerupRep flipped;
  flipped.alpha = rep.beta;
  flipped.gamma = rep.alpha;
  flipped.beta.assign(nk, std::vector<ValueTable>(nj));
  for (size_t k = 0; k < nk; ++k)
    for (size_t j = 0; j < nj; ++j) flipped.beta[k][j] = rep.gamma[j][k];
  return assemble_by_duality(flipped, sm2, sm3, sm1, r, /*unit_first=*/false, t, sm1.dim);
}

Matrix toi_haagerup_like_2(const HaagerupLikeRep2& rep, const SpectralMeasure& sm1,
                           const SpectralMeasure& sm2, const SpectralMeasure& sm3,
                           const Matrix& t, const Matrix& r, double p) {
  check_dims(sm1, sm2, sm3, t, r);
  if (!(p >= 1.0 && p <= 2.0))
    throw Error(ErrorCode::kRegimeMismatch, "second-kind integral needs p in [1, 2]");
  const size_t nj = rep.beta.size(), nk = rep.gamma.size();
  if (rep.alpha.size() != nj)
    throw Error(ErrorCode::kDimensionMismatch, "alpha row count does not match beta");
  for (const auto& row : rep.alpha)
    if (row.size() != nk)
      throw Error(ErrorCode::kDimensionMismatch, "alpha column count does not match gamma");
  for (const auto& row : rep.alpha)
    for (const auto& a : row) check_table(a, sm1, "alpha");
  for (const auto& b : rep.beta) check_table(b, sm2, "beta");
  for (const auto& g : rep.gamma) check_table(g, sm3, "gamma");

  // Phi(x3, x1, x2) = Psi(x1, x2, x3): a_k = gamma_k, b_{kj} = alpha_{jk},
  // c_j = beta_j.
  HaagerupRep flipped;
  flipped.alpha = rep.gamma;
  flipped.gamma = rep.beta;
  flipped.beta.assign(nk, std::vector<ValueTable>(nj));
  for (size_t k = 0; k < nk; ++k)
    for (size_t j = 0; j < nj; ++j) flipped.beta[k][j] = rep.alpha[j][k];
  // The second-kind functional pairs Q into the slot between E3 and E1,
  // i.e. the T slot of the flipped integral, and traces against R.
  return assemble_by_duality(flipped, sm3, sm1, sm2, t, /*unit_first=*/true, r, sm1.dim);
}

const char* bound_theorem_name(BoundTheorem theorem) {
  switch (theorem) {
    case BoundTheorem::kT41: return "thm4.1";
    case BoundTheorem::kT43i: return "thm4.3i";
    case BoundTheorem::kT43ii: return "thm4.3ii";
    case BoundTheorem::kT43iii: return "thm4.3iii";
    case BoundTheorem::kT51: return "thm5.1";
    case BoundTheorem::kT52: return "thm5.2";
  }
  return "unknown";
}

SchattenReport audit_schatten_bounds(BoundTheorem theorem, const AnyRep& rep,
                                     const SpectralMeasure& sm1, const SpectralMeasure& sm2,
                                     const SpectralMeasure& sm3, const Matrix& t,
                                     const Matrix& r, double p, double q) {
  const double inf = std::numeric_limits<double>::infinity();
  auto holder_r = [](double p_, double q_) { return 1.0 / (1.0 / p_ + 1.0 / q_); };

  double nu = 0.0;
  Matrix w(1, 1);
  double rr = 0.0, t_exponent = inf, r_exponent = inf;

  switch (theorem) {
    case BoundTheorem::kT41:
    case BoundTheorem::kT43i:
    case BoundTheorem::kT43ii:
    case BoundTheorem::kT43iii: {
      const auto* hr = std::get_if<HaagerupRep>(&rep);
      if (!hr)
        throw Error(ErrorCode::kRegimeMismatch, "theorem 4.x audits need a Haagerup rep");
      nu = haagerup_norm_of_rep(*hr);
      w = toi_haagerup(*hr, sm1, sm2, sm3, t, r);
      if (theorem == BoundTheorem::kT41) {
        if (p != 2.0)
          throw Error(ErrorCode::kRegimeMismatch, "theorem 4.1 audits the p = 2 case");
        rr = 2.0;
        r_exponent = 2.0;
      } else if (theorem == BoundTheorem::kT43i) {
        if (!(p >= 2.0))
          throw Error(ErrorCode::kRegimeMismatch, "theorem 4.3(i) needs p >= 2");
        rr = p;
        r_exponent = p;
      } else if (theorem == BoundTheorem::kT43ii) {
        if (!(p >= 2.0))
          throw Error(ErrorCode::kRegimeMismatch, "theorem 4.3(ii) needs p >= 2");
        rr = p;
        t_exponent = p;
      } else {
        if (!(1.0 / p + 1.0 / q <= 0.5 + 1e-12))
          throw Error(ErrorCode::kRegimeMismatch, "theorem 4.3(iii) needs 1/p + 1/q <= 1/2");
        rr = holder_r(p, q);
        t_exponent = p;
        r_exponent = q;
      }
      break;
    }
    case BoundTheorem::kT51: {
      const auto* r1 = std::get_if<HaagerupLikeRep1>(&rep);
      if (!r1)
        throw Error(ErrorCode::kRegimeMismatch, "theorem 5.1 audits need a first-kind rep");
      if (!(p >= 1.0 && p <= 2.0))
        throw Error(ErrorCode::kRegimeMismatch, "theorem 5.1 needs p in [1, 2]");
      if (!(q >= 1.0) || 1.0 / p + 1.0 / q > 1.0 + 1e-12)
        throw Error(ErrorCode::kRegimeMismatch, "theorem 5.1 needs q >= 1, 1/p + 1/q <= 1");
      nu = haagerup_norm_of_rep(*r1);
      w = toi_haagerup_like_1(*r1, sm1, sm2, sm3, t, r, p);
      rr = holder_r(p, q);
      t_exponent = p;
      r_exponent = q;
      break;
    }
    case BoundTheorem::kT52: {
      const auto* r2 = std::get_if<HaagerupLikeRep2>(&rep);
      if (!r2)
        throw Error(ErrorCode::kRegimeMismatch, "theorem 5.2 audits need a second-kind rep");
      if (!(q >= 1.0 && q <= 2.0))
        throw Error(ErrorCode::kRegimeMismatch, "theorem 5.2 needs q in [1, 2]");
      if (!(p >= 1.0) || 1.0 / p + 1.0 / q > 1.0 + 1e-12)
        throw Error(ErrorCode::kRegimeMismatch, "theorem 5.2 needs p >= 1, 1/p + 1/q <= 1");
      nu = haagerup_norm_of_rep(*r2);
      w = toi_haagerup_like_2(*r2, sm1, sm2, sm3, t, r, q);
      rr = holder_r(p, q);
      t_exponent = p;
      r_exponent = q;
      break;
    }
  }

  SchattenReport report;
  report.context = bound_theorem_name(theorem);
  report.p = p;
  report.q = q;
  report.r = rr;
  report.measured = schatten_norm(w, rr);
  report.bound = nu * schatten_norm(t, t_exponent) * schatten_norm(r, r_exponent);
  report.pass = report.measured <= report.bound * (1.0 + 1e-9);
  return report;
}

}  // namespace opint
