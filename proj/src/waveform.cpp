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

#include "vc/waveform.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vc/error.hpp"

namespace vc {

void validate_quantization(int q) {
  if (q < 4 || (q & (q - 1)) != 0)
    throw ConfigError("mu-law channel count must be a power of two >= 4, got " +
                      std::to_string(q));
}

int mulaw_encode(double x, int q) {
  validate_quantization(q);
  x = std::clamp(x, -1.0, 1.0);
  const double qm1 = double(q - 1);
  const double f =
      (x >= 0 ? 1.0 : -1.0) * std::log1p(qm1 * std::fabs(x)) / std::log(double(q));
  int code = int(std::floor((f + 1.0) / 2.0 * double(q)));
  return std::clamp(code, 0, q - 1);
}

double mulaw_decode(int code, int q) {
  validate_quantization(q);
  if (code < 0 || code >= q)
    throw InputError("mu-law code " + std::to_string(code) +
                     " out of range for Q=" + std::to_string(q));
  const double y = 2.0 * (double(code) + 0.5) / double(q) - 1.0;
  const double mag =
      (std::pow(double(q), std::fabs(y)) - 1.0) / double(q - 1);
  return (y >= 0 ? 1.0 : -1.0) * mag;
}

std::vector<int> mulaw_encode_waveform(const Waveform& w, int q) {
  std::vector<int> codes(w.size());
  for (size_t i = 0; i < w.size(); i++) codes[i] = mulaw_encode(w.samples[i], q);
  return codes;
}

Waveform mulaw_decode_codes(const std::vector<int>& codes, double rate, int q) {
  Waveform w;
  w.rate = rate;
  w.samples.resize(codes.size());
  for (size_t i = 0; i < codes.size(); i++)
    w.samples[i] = float(mulaw_decode(codes[i], q));
  return w;
}

}  // namespace vc
