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

#include "opint.h"

#include <limits>
#include <string>

#include "opint/besov.hpp"
#include "opint/experiments.hpp"
#include "opint/json_io.hpp"

struct opint_matrix {
  opint::Matrix value;
};

struct opint_buffer {
  std::string text;
};

namespace {

thread_local std::string g_last_error;

opint_status status_of(opint::ErrorCode code) {
  using opint::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidArgument: return OPINT_ERR_INVALID_ARGUMENT;
    case ErrorCode::kParse: return OPINT_ERR_PARSE;
    case ErrorCode::kNotNormal: return OPINT_ERR_NOT_NORMAL;
    case ErrorCode::kNoConvergence: return OPINT_ERR_NO_CONVERGENCE;
    case ErrorCode::kDimensionMismatch: return OPINT_ERR_DIMENSION_MISMATCH;
    case ErrorCode::kMissingDerivative: return OPINT_ERR_MISSING_DERIVATIVE;
    case ErrorCode::kNotTorusFunction: return OPINT_ERR_NOT_TORUS_FUNCTION;
    case ErrorCode::kDegreeTooHigh: return OPINT_ERR_DEGREE_TOO_HIGH;
    case ErrorCode::kTruncationInsufficient: return OPINT_ERR_TRUNCATION_INSUFFICIENT;
    case ErrorCode::kSupportNotCovered: return OPINT_ERR_SUPPORT_NOT_COVERED;
    case ErrorCode::kRegimeMismatch: return OPINT_ERR_REGIME_MISMATCH;
    case ErrorCode::kConstraintViolated: return OPINT_ERR_CONSTRAINT_VIOLATED;
    case ErrorCode::kUnsupportedRepresentation: return OPINT_ERR_UNSUPPORTED_REPRESENTATION;
    case ErrorCode::kMissingFactorization: return OPINT_ERR_MISSING_FACTORIZATION;
    case ErrorCode::kInternal: return OPINT_ERR_INTERNAL;
  }
  return OPINT_ERR_INTERNAL;
}

template <typename Fn>
opint_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return OPINT_OK;
  } catch (const opint::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return OPINT_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return OPINT_ERR_INTERNAL;
  }
}

opint_status bad_argument(const char* message) {
  g_last_error = message;
  return OPINT_ERR_INVALID_ARGUMENT;
}

opint_buffer* make_buffer(std::string text) { return new opint_buffer{std::move(text)}; }

std::vector<int> int_list(const int* values, size_t count) {
  return std::vector<int>(values, values + count);
}

std::vector<double> double_list(const double* values, size_t count) {
  return std::vector<double>(values, values + count);
}

}  // namespace

extern "C" {

const char* opint_version(void) { return "1.0.0"; }

const char* opint_status_name(opint_status status) {
  switch (status) {
    case OPINT_OK: return "ok";
    case OPINT_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case OPINT_ERR_PARSE: return "parse-error";
    case OPINT_ERR_NOT_NORMAL: return "not-normal";
    case OPINT_ERR_NO_CONVERGENCE: return "no-convergence";
    case OPINT_ERR_DIMENSION_MISMATCH: return "dimension-mismatch";
    case OPINT_ERR_MISSING_DERIVATIVE: return "missing-derivative";
    case OPINT_ERR_NOT_TORUS_FUNCTION: return "not-torus-function";
    case OPINT_ERR_DEGREE_TOO_HIGH: return "degree-too-high";
    case OPINT_ERR_TRUNCATION_INSUFFICIENT: return "truncation-insufficient";
    case OPINT_ERR_SUPPORT_NOT_COVERED: return "support-not-covered";
    case OPINT_ERR_REGIME_MISMATCH: return "regime-mismatch";
    case OPINT_ERR_CONSTRAINT_VIOLATED: return "constraint-violated";
    case OPINT_ERR_UNSUPPORTED_REPRESENTATION: return "unsupported-representation";
    case OPINT_ERR_MISSING_FACTORIZATION: return "missing-factorization";
    case OPINT_ERR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

const char* opint_last_error(void) { return g_last_error.c_str(); }

void opint_matrix_free(opint_matrix* m) { delete m; }
void opint_buffer_free(opint_buffer* b) { delete b; }

const char* opint_buffer_data(const opint_buffer* b) { return b ? b->text.c_str() : ""; }
size_t opint_buffer_size(const opint_buffer* b) { return b ? b->text.size() : 0; }

opint_status opint_matrix_from_json(const char* json, opint_matrix** out) {
  if (!json || !out) return bad_argument("null argument");
  return guarded([&] { *out = new opint_matrix{opint::matrix_from_json(json)}; });
}

opint_status opint_matrix_to_json(const opint_matrix* m, opint_buffer** out) {
  if (!m || !out) return bad_argument("null argument");
  return guarded([&] { *out = make_buffer(opint::matrix_to_json(m->value)); });
}

opint_status opint_decompose(const opint_matrix* m, const char* kind, double tol,
                             opint_buffer** json_out) {
  if (!m || !kind || !json_out) return bad_argument("null argument");
  return guarded([&] {
    std::string k(kind);
    opint::OperatorKind ok;
    if (k == "hermitian") {
      ok = opint::OperatorKind::kHermitian;
    } else if (k == "unitary") {
      ok = opint::OperatorKind::kUnitary;
    } else {
      throw opint::Error(opint::ErrorCode::kInvalidArgument,
                         "kind must be 'hermitian' or 'unitary'");
    }
    opint::SpectralMeasure sm = opint::spectral_decompose(m->value, ok, tol);
    *json_out = make_buffer(opint::spectral_measure_to_json(sm, ok));
  });
}

opint_status opint_schatten_norm(const opint_matrix* m, double p, double* out) {
  if (!m || !out) return bad_argument("null argument");
  return guarded([&] { *out = opint::schatten_norm(m->value, p); });
}

opint_status opint_apply_fab(const char* trigpoly_json, const opint_matrix* a,
                             const opint_matrix* b, opint_matrix** out) {
  if (!trigpoly_json || !a || !b || !out) return bad_argument("null argument");
  return guarded([&] {
    opint::Function2D f{opint::trigpoly_from_json(trigpoly_json), std::nullopt};
    opint::SpectralMeasure ea =
        opint::spectral_decompose(a->value, opint::OperatorKind::kHermitian);
    opint::SpectralMeasure eb =
        opint::spectral_decompose(b->value, opint::OperatorKind::kHermitian);
    *out = new opint_matrix{opint::apply_f_AB(f, ea, eb)};
  });
}

opint_status opint_apply_fuv(const char* trigpoly_json, const opint_matrix* u,
                             const opint_matrix* v, opint_matrix** out) {
  if (!trigpoly_json || !u || !v || !out) return bad_argument("null argument");
  return guarded([&] {
    opint::Function2D f{opint::trigpoly_from_json(trigpoly_json), std::nullopt};
    opint::SpectralMeasure eu =
        opint::spectral_decompose(u->value, opint::OperatorKind::kUnitary);
    opint::SpectralMeasure ev =
        opint::spectral_decompose(v->value, opint::OperatorKind::kUnitary);
    *out = new opint_matrix{opint::apply_f_UV(f, eu, ev)};
  });
}

opint_status opint_verify(const char* identity, int dim_max, int trials, uint64_t seed,
                          double tol, opint_buffer** csv_out, double* max_residual) {
  if (!identity || !csv_out) return bad_argument("null argument");
  return guarded([&] {
    auto rows = opint::run_identity_trials(identity, dim_max, trials, seed, tol);
    double worst = 0.0;
    for (const auto& row : rows) worst = std::max(worst, row.residual);
    if (max_residual) *max_residual = worst;
    *csv_out = make_buffer(opint::identity_rows_csv(identity, rows));
  });
}

opint_status opint_counterexample(const int* n_values, size_t n_count, const double* p_values,
                                  size_t p_count, const double* eps_values, size_t eps_count,
                                  opint_buffer** csv_out, int* failures) {
  if (!n_values || !p_values || !csv_out || n_count == 0 || p_count == 0)
    return bad_argument("N and p lists must be nonempty");
  return guarded([&] {
    std::vector<int> ns = int_list(n_values, n_count);
    std::vector<double> ps = double_list(p_values, p_count);
    std::vector<opint::ScanRecord> records;
    if (!eps_values || eps_count == 0) {
      records = opint::measure_growth(ns, ps);
    } else {
      for (size_t e = 0; e < eps_count; ++e) {
        double eps = eps_values[e];
        for (int n : ns) {
          opint::ScaledFamilyReport rep = opint::scaled_counterexample(n, eps, ps);
          for (const auto& row : rep.sp_rows) {
            opint::ScanRecord rec;
            rec.family = "counterexample-scaled";
            rec.n = n;
            rec.p = row[0];
            rec.epsilon = eps;
            rec.measured = row[1] / row[2];  // diff over perturbation
            double expo = 0.5 - (std::isinf(row[0]) ? 0.0 : 1.0 / row[0]);
            rec.predicted = std::pow(double(n), expo);
            rec.pass = std::abs(rec.measured - *rec.predicted) <= 1e-9 * *rec.predicted;
            records.push_back(std::move(rec));
          }
        }
      }
    }
    int failed = 0;
    for (const auto& rec : records)
      if (!rec.pass) ++failed;
    if (failures) *failures = failed;
    *csv_out = make_buffer(opint::scan_records_csv(records));
  });
}

opint_status opint_scan(const char* family, const int* n_values, size_t n_count,
                        const double* p_values, size_t p_count, int trials, uint64_t seed,
                        opint_buffer** csv_out, int* failures) {
  if (!family || !n_values || !p_values || !csv_out || n_count == 0 || p_count == 0)
    return bad_argument("family, N and p lists must be nonempty");
  return guarded([&] {
    auto records = opint::lipschitz_scan(family, double_list(p_values, p_count),
                                         int_list(n_values, n_count), trials, seed);
    int failed = 0;
    for (const auto& rec : records)
      if (!rec.pass) ++failed;
    if (failures) *failures = failed;
    *csv_out = make_buffer(opint::scan_records_csv(records));
  });
}

opint_status opint_besov_norm(const char* trigpoly_json, double* out) {
  if (!trigpoly_json || !out) return bad_argument("null argument");
  return guarded([&] {
    opint::TrigPoly2 f = opint::trigpoly_from_json(trigpoly_json);
    opint::LPFilterBank bank = opint::make_filter(opint::FilterKind::kDefault, {});
    *out = opint::besov_norm_1_inf_1(f, bank);
  });
}

opint_status opint_audit(const char* theorem, int trials, int dim_max, uint64_t seed,
                         opint_buffer** csv_out, int* failures) {
  if (!theorem || !csv_out) return bad_argument("null argument");
  return guarded([&] {
    std::string name(theorem);
    std::vector<std::pair<std::string, opint::BoundTheorem>> all = {
        {"4.1", opint::BoundTheorem::kT41},    {"4.3i", opint::BoundTheorem::kT43i},
        {"4.3ii", opint::BoundTheorem::kT43ii}, {"4.3iii", opint::BoundTheorem::kT43iii},
        {"5.1", opint::BoundTheorem::kT51},    {"5.2", opint::BoundTheorem::kT52}};
    std::vector<opint::SchattenReport> reports;
    bool matched = false;
    for (const auto& [tag, thm] : all) {
      if (name != "all" && name != tag) continue;
      matched = true;
      auto part = opint::run_bound_audits(thm, trials, dim_max, seed);
      reports.insert(reports.end(), part.begin(), part.end());
    }
    if (!matched)
      throw opint::Error(opint::ErrorCode::kInvalidArgument, "unknown theorem: " + name);
    int failed = 0;
    for (const auto& rep : reports)
      if (!rep.pass) ++failed;
    if (failures) *failures = failed;
    *csv_out = make_buffer(opint::schatten_reports_csv(reports));
  });
}

}  // extern "C"
