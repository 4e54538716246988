// Copyright 2026 The vcc Authors
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

#include "vc/fft.hpp"

#include <cmath>

#include "vc/error.hpp"

namespace vc {

bool is_power_of_two(size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void fft(std::vector<std::complex<double>>* data, bool inverse) {
  auto& a = *data;
  const size_t n = a.size();
  if (!is_power_of_two(n))
    throw InputError("fft size must be a power of two, got " +
                     std::to_string(n));
  // Bit-reversal permutation.
  for (size_t i = 1, j = 0; i < n; i++) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    double ang = 2.0 * M_PI / double(len) * (inverse ? 1.0 : -1.0);
    std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (size_t k = 0; k < len / 2; k++) {
        std::complex<double> u = a[i + k];
        std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
  if (inverse) {
    for (auto& x : a) x /= double(n);
  }
}

std::vector<std::complex<double>> fft_real(const std::vector<double>& x,
                                           size_t n) {
  std::vector<std::complex<double>> a(n, {0.0, 0.0});
  const size_t m = std::min(n, x.size());
  for (size_t i = 0; i < m; i++) a[i] = {x[i], 0.0};
  fft(&a, false);
  return a;
}

std::vector<double> ifft_real(const std::vector<std::complex<double>>& spec) {
  std::vector<std::complex<double>> a = spec;
  fft(&a, true);
  std::vector<double> out(a.size());
  for (size_t i = 0; i < a.size(); i++) out[i] = a[i].real();
  return out;
}

}  // namespace vc
