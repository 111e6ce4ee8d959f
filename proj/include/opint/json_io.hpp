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

#ifndef OPINT_JSON_IO_HPP
#define OPINT_JSON_IO_HPP

#include <string>

#include "opint/function.hpp"
#include "opint/matrix.hpp"
#include "opint/spectral.hpp"

namespace opint {

// Matrix interchange: {"rows": n, "cols": m, "re": [...], "im": [...]} with
// row-major flat arrays and shortest round-trip number formatting.
std::string matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const std::string& text);

// Trig polynomial interchange:
// {"periods": [Lx, Ly], "terms": [{"j": ..., "k": ..., "re": ..., "im": ...}]}.
std::string trigpoly_to_json(const TrigPoly2& f);
TrigPoly2 trigpoly_from_json(const std::string& text);

std::string spectral_measure_to_json(const SpectralMeasure& sm, OperatorKind kind);

// "inf" or a number; ParseError on anything else.
double parse_p(const std::string& text);

}  // namespace opint

#endif  // OPINT_JSON_IO_HPP
