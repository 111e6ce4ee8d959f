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

#ifndef OPINT_RNG_HPP
#define OPINT_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>

namespace opint {

// SplitMix64.  Every scan/audit derives one stream per trial from
// (seed, trial index), so outputs are identical at any parallelism level and
// across standard libraries (no std::uniform_real_distribution involved).
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  std::complex<double> unit_complex() {
    double t = 2.0 * M_PI * uniform();
    return {std::cos(t), std::sin(t)};
  }

  std::complex<double> complex_in_disc() {
    double r = std::sqrt(uniform());
    return r * unit_complex();
  }

  // Box-Muller with an explicit formula; deterministic across platforms.
  double gaussian() {
    double u1 = uniform(), u2 = uniform();
    if (u1 < 0x1.0p-60) u1 = 0x1.0p-60;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  // Independent child stream; used as fork(trial_index).
  Rng fork(uint64_t stream) const {
    Rng child(state_ ^ (0xD1B54A32D192ED03ull * (stream + 1)));
    child.next_u64();
    return child;
  }

 private:
  uint64_t state_;
};

}  // namespace opint

#endif  // OPINT_RNG_HPP
