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

#ifndef VC_WAVEFORM_HPP_
#define VC_WAVEFORM_HPP_

#include <cstdint>
#include <vector>

namespace vc {

// Mono audio. Samples live in [-1, +1]; rate in Hz. rate is kept as a double
// because pitch transformation works with non-integral intermediate rates.
struct Waveform {
  std::vector<float> samples;
  double rate = 0.0;

  size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }
  double duration() const {
    return rate > 0 ? double(samples.size()) / rate : 0.0;
  }
};

// Mu-law companding. Q quantization channels (power of two, >= 4), law
//   f(x) = sign(x) * ln(1 + (Q-1)|x|) / ln(Q)
//   code = clamp(floor((f(x) + 1) / 2 * Q), 0, Q-1)
// Decoding returns the bin-center amplitude, so encode(decode(c)) == c for
// every code.
int mulaw_encode(double x, int quantization = 256);
double mulaw_decode(int code, int quantization = 256);

std::vector<int> mulaw_encode_waveform(const Waveform& w,
                                       int quantization = 256);
Waveform mulaw_decode_codes(const std::vector<int>& codes, double rate,
                            int quantization = 256);

// Validates the channel count (power of two, >= 4); throws ConfigError.
void validate_quantization(int quantization);

}  // namespace vc

#endif  // VC_WAVEFORM_HPP_
