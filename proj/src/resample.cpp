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

#include "vc/resample.hpp"

#include <algorithm>
#include <cmath>

#include "vc/error.hpp"

namespace vc {

namespace {

inline double sinc(double x) {
  if (std::fabs(x) < 1e-12) return 1.0;
  double px = M_PI * x;
  return std::sin(px) / px;
}

}  // namespace

Waveform resample(const Waveform& w, double new_rate, int taps) {
  if (new_rate <= 0) throw ConfigError("resample rate must be positive");
  if (taps < 4) throw ConfigError("resampler needs at least 4 taps");
  if (w.rate <= 0) throw InputError("waveform rate must be positive");
  if (w.rate == new_rate) return w;

  const double ratio = new_rate / w.rate;
  // Cutoff at the narrower Nyquist, normalized to the input rate.
  const double cutoff = std::min(1.0, ratio);
  const double half_width = (double(taps) / 2.0) / cutoff;
  const size_t in_len = w.size();
  const size_t out_len = size_t(std::llround(double(in_len) * ratio));

  Waveform out;
  out.rate = new_rate;
  out.samples.resize(out_len);
  for (size_t n = 0; n < out_len; n++) {
    const double center = double(n) / ratio;  // position in input samples
    const long lo = long(std::ceil(center - half_width));
    const long hi = long(std::floor(center + half_width));
    double acc = 0.0;
    for (long k = std::max(lo, 0L); k <= std::min(hi, long(in_len) - 1); k++) {
      const double d = center - double(k);
      const double win = 0.5 + 0.5 * std::cos(M_PI * d / half_width);
      acc += double(w.samples[size_t(k)]) * cutoff * sinc(cutoff * d) * win;
    }
    out.samples[n] = float(std::clamp(acc, -1.0, 1.0));
  }
  return out;
}

}  // namespace vc
