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

#include "vc/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "vc/error.hpp"
#include "vc/fft.hpp"
#include "vc/rng.hpp"

namespace vc {

Waveform synthesize_parametric(const FeatureSequence& fs,
                               const AnalysisConfig& cfg, uint64_t seed) {
  fs.check_aligned();
  if (fs.mcep_dim != cfg.mcep_dim || fs.ap_bands != cfg.ap_bands)
    throw InputError("feature dimensions do not match analysis config");
  const double rate = fs.source_rate;
  cfg.validate(rate);

  const int frames = fs.frames();
  const int hop = int(std::lround(fs.frame_shift * rate));
  if (hop < 4) throw InputError("frame shift too small for synthesis");
  const size_t out_len = size_t(frames) * size_t(hop);
  const int win_len = 2 * hop;
  const int n = cfg.fft_size;
  const int half = n / 2;
  if (win_len > n) throw ConfigError("fft_size too small for frame shift");

  // Global excitation signals, both near unit power: an impulse train with
  // amplitude sqrt(period) and white Gaussian noise. Building them over the
  // whole utterance keeps pulse phase coherent across overlapping frames.
  Rng rng(seed);
  std::vector<double> pulse(out_len, 0.0), noise(out_len);
  double phase = 1.0;  // emit a pulse at the first voiced sample
  for (size_t i = 0; i < out_len; i++) {
    noise[i] = rng.normal();
    const int t = std::min(frames - 1, int(i / size_t(hop)));
    const bool voiced = fs.uv[size_t(t)] > 0.5f;
    const double f0 = std::exp(double(fs.lf0[size_t(t)]));
    if (voiced && f0 > 1.0) {
      phase += f0 / rate;
      if (phase >= 1.0) {
        phase -= 1.0;
        pulse[i] = std::sqrt(rate / f0);
      }
    }
  }

  std::vector<double> out(out_len, 0.0), wsum(out_len, 0.0);
  std::vector<double> window(size_t(win_len));
  for (int j = 0; j < win_len; j++)
    window[size_t(j)] =
        0.5 - 0.5 * std::cos(2.0 * M_PI * double(j) / double(win_len));

  std::vector<double> mc(size_t(cfg.mcep_dim));
  std::vector<double> seg_p(size_t(n)), seg_n(size_t(n));
  for (int t = 0; t < frames; t++) {
    const long start = long(t) * hop - win_len / 2;
    std::fill(seg_p.begin(), seg_p.end(), 0.0);
    std::fill(seg_n.begin(), seg_n.end(), 0.0);
    for (int j = 0; j < win_len; j++) {
      const long idx = start + j;
      if (idx < 0 || idx >= long(out_len)) continue;
      seg_p[size_t(j)] = pulse[size_t(idx)] * window[size_t(j)];
      seg_n[size_t(j)] = noise[size_t(idx)] * window[size_t(j)];
    }
    auto spec_p = fft_real(seg_p, size_t(n));
    auto spec_n = fft_real(seg_n, size_t(n));

    for (int d = 0; d < cfg.mcep_dim; d++)
      mc[size_t(d)] = double(fs.mcep_row(t)[d]);
    auto env = envelope_from_mcep(mc, cfg);

    const bool voiced = fs.uv[size_t(t)] > 0.5f;
    std::vector<std::complex<double>> mixed(size_t(n), {0.0, 0.0});
    for (int k = 0; k <= half; k++) {
      int band = int(double(k) / double(half + 1) * fs.ap_bands);
      band = std::clamp(band, 0, fs.ap_bands - 1);
      const double ap = std::clamp(double(fs.ap_row(t)[band]), 0.0, 1.0);
      const double g_noise = std::sqrt(ap);
      const double g_pulse = voiced ? std::sqrt(1.0 - ap) : 0.0;
      const double amp = std::exp(env[size_t(k)]);
      const std::complex<double> v =
          (spec_p[size_t(k)] * g_pulse + spec_n[size_t(k)] * g_noise) * amp;
      mixed[size_t(k)] = v;
      if (k > 0 && k < half) mixed[size_t(n - k)] = std::conj(v);
    }
    auto y = ifft_real(mixed);
    for (int j = 0; j < n; j++) {
      const long idx = start + j;
      if (idx < 0 || idx >= long(out_len)) continue;
      out[size_t(idx)] += y[size_t(j)];
      if (j < win_len) wsum[size_t(idx)] += window[size_t(j)];
    }
  }

  Waveform w;
  w.rate = rate;
  w.samples.resize(out_len);
  for (size_t i = 0; i < out_len; i++) {
    const double v = out[i] / std::max(wsum[i], 0.25);
    w.samples[i] = float(std::clamp(v, -1.0, 1.0));
  }
  return w;
}

}  // namespace vc
