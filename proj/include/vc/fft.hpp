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

#ifndef VC_FFT_HPP_
#define VC_FFT_HPP_

#include <complex>
#include <vector>

namespace vc {

// In-place iterative radix-2 FFT. n must be a power of two.
void fft(std::vector<std::complex<double>>* data, bool inverse);

// FFT of a real signal zero-padded/truncated to n points; returns the full
// complex spectrum (n bins).
std::vector<std::complex<double>> fft_real(const std::vector<double>& x,
                                           size_t n);

// Inverse FFT returning only the real part (for spectra of real signals).
std::vector<double> ifft_real(const std::vector<std::complex<double>>& spec);

bool is_power_of_two(size_t n);

}  // namespace vc

#endif  // VC_FFT_HPP_
