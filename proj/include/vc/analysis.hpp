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

#ifndef VC_ANALYSIS_HPP_
#define VC_ANALYSIS_HPP_

#include <string>
#include <vector>

#include "vc/waveform.hpp"

namespace vc {

struct AnalysisConfig {
  double frame_shift = 0.005;   // seconds
  int fft_size = 1024;          // power of two
  double f0_floor = 70.0;       // Hz
  double f0_ceil = 400.0;       // Hz
  double mel_warp_alpha = 0.466;  // all-pass warping (0.466 suits 24 kHz)
  int mcep_dim = 49;            // includes the 0th (power) coefficient
  int ap_bands = 5;
  double voicing_threshold = 0.15;  // normalized-difference threshold
  double env_floor_log = -13.815510557964274;  // ln(1e-6) amplitude floor

  void validate(double rate) const;  // throws ConfigError
};

// Per-frame speech features; the currency between analysis, the spectral
// model, and the vocoder. All four streams share the frame count.
struct FeatureSequence {
  std::vector<float> uv;    // 1 voiced / 0 unvoiced
  std::vector<float> lf0;   // continuous natural-log F0 (log Hz)
  std::vector<float> ap;    // [frames x ap_bands], row-major, each in [0,1]
  std::vector<float> mcep;  // [frames x mcep_dim], row-major, index 0 = power
  int ap_bands = 0;
  int mcep_dim = 0;
  double frame_shift = 0.0;  // seconds
  double source_rate = 0.0;  // Hz

  int frames() const { return int(uv.size()); }
  const float* ap_row(int t) const { return ap.data() + size_t(t) * ap_bands; }
  float* ap_row(int t) { return ap.data() + size_t(t) * ap_bands; }
  const float* mcep_row(int t) const {
    return mcep.data() + size_t(t) * mcep_dim;
  }
  float* mcep_row(int t) { return mcep.data() + size_t(t) * mcep_dim; }
  void check_aligned() const;  // throws InputError on stream mismatch
};

// Number of analysis frames for a waveform: floor(duration/shift) + 1.
int frame_count(size_t num_samples, double rate, double frame_shift);

// F0 estimation: normalized-difference (YIN-style) pitch tracking with a
// fixed voicing threshold. f0 is 0 where unvoiced, inside
// [f0_floor, f0_ceil] where voiced.
struct F0Track {
  std::vector<float> uv;
  std::vector<float> f0;  // Hz, 0 when unvoiced
};
F0Track estimate_f0(const Waveform& w, const AnalysisConfig& cfg);

// ln(f0) at voiced frames; unvoiced gaps filled by linear interpolation,
// leading/trailing runs by the nearest voiced value. Throws NoVoicingError
// when no frame is voiced.
std::vector<float> continuize_lf0(const std::vector<float>& uv,
                                  const std::vector<float>& f0);

// Per-band aperiodicity from the normalized autocorrelation of band-limited
// signal at the pitch lag. Unvoiced frames are forced to 1.0 in every band.
std::vector<float> band_aperiodicity(const Waveform& w,
                                     const std::vector<float>& f0,
                                     const std::vector<float>& uv,
                                     const AnalysisConfig& cfg);

// Per-frame log-amplitude spectral envelope (fft_size/2+1 bins): Hann
// windowed, pitch-adaptively cepstrally smoothed, floored at env_floor_log.
std::vector<std::vector<double>> spectral_envelope(const Waveform& w,
                                                   const std::vector<float>& f0,
                                                   const AnalysisConfig& cfg);

// Mel-cepstrum by first-order all-pass frequency warping of the envelope;
// coefficient 0 carries frame power. envelope_from_mcep inverts it.
std::vector<double> mcep_from_envelope(const std::vector<double>& env,
                                       const AnalysisConfig& cfg);
std::vector<double> envelope_from_mcep(const std::vector<double>& mc,
                                       const AnalysisConfig& cfg);

// Full analysis: F0 -> continuous lf0 -> aperiodicity -> envelope -> mcep.
FeatureSequence analyze(const Waveform& w, const AnalysisConfig& cfg);

// Feature cache file ("VCFT"): version, frame count, stream dims, frame
// shift, rate, then row-major little-endian f32 per stream.
void write_feature_file(const std::string& path, const FeatureSequence& fs);
FeatureSequence read_feature_file(const std::string& path);

// Mean mel-cepstral distance in dB over frames, coefficients 1..dim-1
// (power excluded): (10/ln10) * sqrt(2 * sum_d diff^2).
double mel_cepstral_distance_db(const FeatureSequence& a,
                                const FeatureSequence& b);
double mel_cepstral_distance_db(const std::vector<float>& a,
                                const std::vector<float>& b, int frames,
                                int dim);

}  // namespace vc

#endif  // VC_ANALYSIS_HPP_
