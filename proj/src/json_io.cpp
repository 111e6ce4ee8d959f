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

#include "opint/json_io.hpp"

#include <cmath>

#include <json.hpp>

namespace opint {

using nlohmann::json;

namespace {

json matrix_to_json_obj(const Matrix& m) {
  json re = json::array(), im = json::array();
  for (const auto& v : m.data()) {
    re.push_back(v.real());
    im.push_back(v.imag());
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

Matrix matrix_from_json_obj(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("re") ||
      !j.contains("im"))
    throw Error(ErrorCode::kParse, "matrix JSON needs rows, cols, re, im");
  int rows = j.at("rows").get<int>(), cols = j.at("cols").get<int>();
  if (rows <= 0 || cols <= 0) throw Error(ErrorCode::kParse, "matrix dimensions must be positive");
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (!re.is_array() || !im.is_array() || int(re.size()) != rows * cols ||
      int(im.size()) != rows * cols)
    throw Error(ErrorCode::kParse, "entry count must equal rows * cols");
  Matrix m(rows, cols);
  for (int i = 0; i < rows * cols; ++i)
    m.data()[i] = Cplx(re[i].get<double>(), im[i].get<double>());
  if (!m.all_finite()) throw Error(ErrorCode::kParse, "matrix entries must be finite");
  return m;
}

}  // namespace

std::string matrix_to_json(const Matrix& m) { return matrix_to_json_obj(m).dump(); }

Matrix matrix_from_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorCode::kParse, "invalid JSON");
  return matrix_from_json_obj(j);
}

std::string trigpoly_to_json(const TrigPoly2& f) {
  json terms = json::array();
  for (const auto& t : f.terms)
    terms.push_back(json{{"j", t.j}, {"k", t.k}, {"re", t.c.real()}, {"im", t.c.imag()}});
  return json{{"periods", {f.period_x, f.period_y}}, {"terms", terms}}.dump();
}

TrigPoly2 trigpoly_from_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorCode::kParse, "invalid JSON");
  if (!j.is_object() || !j.contains("terms"))
    throw Error(ErrorCode::kParse, "trig polynomial JSON needs a terms array");
  TrigPoly2 f;
  if (j.contains("periods")) {
    const auto& p = j.at("periods");
    if (!p.is_array() || p.size() != 2)
      throw Error(ErrorCode::kParse, "periods must be [Lx, Ly]");
    f.period_x = p[0].get<double>();
    f.period_y = p[1].get<double>();
    if (!(f.period_x > 0.0) || !(f.period_y > 0.0))
      throw Error(ErrorCode::kParse, "periods must be positive");
  }
  for (const auto& t : j.at("terms")) {
    if (!t.contains("j") || !t.contains("k"))
      throw Error(ErrorCode::kParse, "each term needs j and k");
    double re = t.value("re", 0.0), im = t.value("im", 0.0);
    if (!std::isfinite(re) || !std::isfinite(im))
      throw Error(ErrorCode::kParse, "coefficients must be finite");
    f.add(t.at("j").get<int>(), t.at("k").get<int>(), Cplx(re, im));
  }
  return f;
}

std::string spectral_measure_to_json(const SpectralMeasure& sm, OperatorKind kind) {
  json points = json::array();
  for (const auto& pt : sm.points) {
    points.push_back(json{{"value", {{"re", pt.value.real()}, {"im", pt.value.imag()}}},
                          {"projector", matrix_to_json_obj(pt.projector)}});
  }
  return json{{"kind", kind == OperatorKind::kHermitian ? "hermitian" : "unitary"},
              {"dim", sm.dim},
              {"points", points}}
      .dump();
}

double parse_p(const std::string& text) {
  if (text == "inf") return std::numeric_limits<double>::infinity();
  try {
    size_t pos = 0;
    double v = std::stod(text, &pos);
    if (pos != text.size() || !(v > 0.0))
      throw Error(ErrorCode::kParse, "p must be positive or 'inf'");
    return v;
  } catch (const Error&) {
    throw;
  } catch (...) {
    throw Error(ErrorCode::kParse, "cannot parse p: " + text);
  }
}

}  // namespace opint
