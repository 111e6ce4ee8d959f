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

#ifndef OPINT_FFT_HPP
#define OPINT_FFT_HPP

#include <complex>
#include <vector>

namespace opint {

// In-place radix-2 FFT, size must be a power of two.  Forward uses kernel
// e^{-2pi i jk/n}; inverse divides by n.
void fft_inplace(std::vector<std::complex<double>>& a, bool inverse);

// Row-column 2D transform on an n0 x n1 row-major grid (both powers of two).
void fft2_inplace(std::vector<std::complex<double>>& grid, int n0, int n1, bool inverse);

inline int next_pow2(int n) {
  int p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace opint

#endif  // OPINT_FFT_HPP
