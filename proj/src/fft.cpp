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

#include "opint/fft.hpp"

#include <cmath>

#include "opint/error.hpp"

namespace opint {

void fft_inplace(std::vector<std::complex<double>>& a, bool inverse) {
  const size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw Error(ErrorCode::kInvalidArgument, "fft size must be a power of two");
  // Bit reversal permutation.
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? 2.0 : -2.0) * M_PI / double(len);
    const std::complex<double> wl(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (size_t k = 0; k < len / 2; ++k) {
        std::complex<double> u = a[i + k];
        std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
  if (inverse) {
    const double inv = 1.0 / double(n);
    for (auto& x : a) x *= inv;
  }
}

void fft2_inplace(std::vector<std::complex<double>>& grid, int n0, int n1, bool inverse) {
  if (int(grid.size()) != n0 * n1)
    throw Error(ErrorCode::kInvalidArgument, "fft2 grid size mismatch");
  std::vector<std::complex<double>> tmp;
  // Rows.
  for (int i = 0; i < n0; ++i) {
    tmp.assign(grid.begin() + size_t(i) * n1, grid.begin() + size_t(i + 1) * n1);
    fft_inplace(tmp, inverse);
    std::copy(tmp.begin(), tmp.end(), grid.begin() + size_t(i) * n1);
  }
  // Columns.
  tmp.resize(n0);
  for (int j = 0; j < n1; ++j) {
    for (int i = 0; i < n0; ++i) tmp[i] = grid[size_t(i) * n1 + j];
    fft_inplace(tmp, inverse);
    for (int i = 0; i < n0; ++i) grid[size_t(i) * n1 + j] = tmp[i];
  }
}

}  // namespace opint
