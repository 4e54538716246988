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

#include "vc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstring>

#include "vc/error.hpp"
#include "vc/fft.hpp"
#include "vc/serialize.hpp"

namespace vc {

namespace {

constexpr char kFeatureMagic[4] = {'V', 'C', 'F', 'T'};
constexpr uint32_t kFeatureVersion = 1;

// Geometric center of the search range; used as the smoothing pitch for
// frames without a voicing decision.
double default_f0(const AnalysisConfig& cfg) {
  return std::sqrt(cfg.f0_floor * cfg.f0_ceil);
}

size_t next_pow2(size_t n) {
  size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// Zero-padded read of a centered segment.
void read_segment(const Waveform& w, long start, int len, double* out) {
  const long n = long(w.size());
  for (int j = 0; j < len; j++) {
    long idx = start + j;
    out[j] = (idx >= 0 && idx < n) ? double(w.samples[size_t(idx)]) : 0.0;
  }
}

}  // namespace

void AnalysisConfig::validate(double rate) const {
  if (frame_shift <= 0) throw ConfigError("frame_shift must be positive");
  if (!is_power_of_two(size_t(fft_size)) || fft_size < 64)
    throw ConfigError("fft_size must be a power of two >= 64");
  if (!(f0_floor > 0 && f0_floor < f0_ceil && f0_ceil < rate / 2))
    throw ConfigError("need 0 < f0_floor < f0_ceil < rate/2");
  if (!(mel_warp_alpha >= 0 && mel_warp_alpha < 1))
    throw ConfigError("mel_warp_alpha must be in [0, 1)");
  if (mcep_dim < 2) throw ConfigError("mcep_dim must be >= 2");
  if (ap_bands < 1) throw ConfigError("ap_bands must be >= 1");
  if (mcep_dim > fft_size / 2)
    throw ConfigError("mcep_dim too large for fft_size");
}

void FeatureSequence::check_aligned() const {
  const size_t f = uv.size();
  if (lf0.size() != f || ap.size() != f * size_t(ap_bands) ||
      mcep.size() != f * size_t(mcep_dim))
    throw InputError("feature streams are not frame-aligned");
}

int frame_count(size_t num_samples, double rate, double frame_shift) {
  const double duration = double(num_samples) / rate;
  return int(std::floor(duration / frame_shift + 1e-9)) + 1;
}

// ---------------------------------------------------------------------------
// F0 estimation (normalized-difference / YIN-style)
// ---------------------------------------------------------------------------

F0Track estimate_f0(const Waveform& w, const AnalysisConfig& cfg) {
  if (w.rate <= 0) throw InputError("waveform rate must be positive");
  cfg.validate(w.rate);
  if (w.empty()) throw InputError("cannot estimate F0 of an empty waveform");
  const int frames = frame_count(w.size(), w.rate, cfg.frame_shift);
  if (frames < 2) throw InputError("waveform shorter than two frames");

  const double rate = w.rate;
  const int tau_min = std::max(2, int(std::floor(rate / cfg.f0_ceil)));
  const int tau_max = int(std::ceil(rate / cfg.f0_floor));
  const int corr_win = tau_max;           // difference-function window
  const int seg_len = corr_win + tau_max; // needs x[j + tau_max]

  F0Track track;
  track.uv.assign(frames, 0.0f);
  track.f0.assign(frames, 0.0f);

  std::vector<double> seg(seg_len);
  std::vector<double> diff(tau_max + 1, 0.0);
  std::vector<double> cmnd(tau_max + 1, 1.0);

  for (int t = 0; t < frames; t++) {
    const long center = std::lround(double(t) * cfg.frame_shift * rate);
    read_segment(w, center - seg_len / 2, seg_len, seg.data());

    double energy = 0.0;
    for (int j = 0; j < corr_win; j++) energy += seg[j] * seg[j];
    if (energy < 1e-10 * corr_win) continue;  // digital silence: unvoiced

    // d(tau) and its cumulative-mean normalization.
    double cum = 0.0;
    for (int tau = 1; tau <= tau_max; tau++) {
      double d = 0.0;
      for (int j = 0; j < corr_win; j++) {
        const double delta = seg[j] - seg[j + tau];
        d += delta * delta;
      }
      diff[tau] = d;
      cum += d;
      cmnd[tau] = cum > 0 ? d * double(tau) / cum : 1.0;
    }

    // First dip below the threshold, refined to its local minimum; fall back
    // to the global minimum (still subject to the voicing test).
    int best = -1;
    for (int tau = tau_min; tau <= tau_max; tau++) {
      if (cmnd[tau] < cfg.voicing_threshold) {
        while (tau + 1 <= tau_max && cmnd[tau + 1] < cmnd[tau]) tau++;
        best = tau;
        break;
      }
    }
    if (best < 0) {
      double lowest = 1e300;
      for (int tau = tau_min; tau <= tau_max; tau++) {
        if (cmnd[tau] < lowest) {
          lowest = cmnd[tau];
          best = tau;
        }
      }
    }
    if (best < 0 || cmnd[best] >= cfg.voicing_threshold) continue;

    // Parabolic interpolation around the minimum for sub-sample lag.
    double tau_hat = double(best);
    if (best > tau_min && best < tau_max) {
      const double a = cmnd[best - 1], b = cmnd[best], c = cmnd[best + 1];
      const double denom = a - 2.0 * b + c;
      if (std::fabs(denom) > 1e-12) {
        double shift = 0.5 * (a - c) / denom;
        shift = std::clamp(shift, -1.0, 1.0);
        tau_hat += shift;
      }
    }
    const double f0 = std::clamp(rate / tau_hat, cfg.f0_floor, cfg.f0_ceil);
    track.uv[size_t(t)] = 1.0f;
    track.f0[size_t(t)] = float(f0);
  }
  return track;
}

std::vector<float> continuize_lf0(const std::vector<float>& uv,
                                  const std::vector<float>& f0) {
  if (uv.size() != f0.size())
    throw InputError("uv/f0 length mismatch in continuize_lf0");
  const int n = int(uv.size());
  int first = -1, last = -1;
  for (int i = 0; i < n; i++) {
    if (uv[size_t(i)] > 0.5f) {
      if (first < 0) first = i;
      last = i;
    }
  }
  if (first < 0) throw NoVoicingError("no voiced frames to continuize");

  std::vector<float> lf0(size_t(n), 0.0f);
  for (int i = 0; i < n; i++)
    if (uv[size_t(i)] > 0.5f) lf0[size_t(i)] = float(std::log(f0[size_t(i)]));
  for (int i = 0; i < first; i++) lf0[size_t(i)] = lf0[size_t(first)];
  for (int i = last + 1; i < n; i++) lf0[size_t(i)] = lf0[size_t(last)];
  int prev = first;
  for (int i = first + 1; i <= last; i++) {
    if (uv[size_t(i)] > 0.5f) {
      if (i > prev + 1) {
        const double lo = lf0[size_t(prev)], hi = lf0[size_t(i)];
        for (int j = prev + 1; j < i; j++) {
          const double frac = double(j - prev) / double(i - prev);
          lf0[size_t(j)] = float(lo + (hi - lo) * frac);
        }
      }
      prev = i;
    }
  }
  return lf0;
}

// ---------------------------------------------------------------------------
// Band aperiodicity
// ---------------------------------------------------------------------------

std::vector<float> band_aperiodicity(const Waveform& w,
                                     const std::vector<float>& f0,
                                     const std::vector<float>& uv,
                                     const AnalysisConfig& cfg) {
  cfg.validate(w.rate);
  if (f0.size() != uv.size())
    throw InputError("f0/uv length mismatch in band_aperiodicity");
  const int frames = int(f0.size());
  const int bands = cfg.ap_bands;
  std::vector<float> ap(size_t(frames) * bands, 1.0f);

  const double rate = w.rate;
  const int tau_max = int(std::ceil(rate / cfg.f0_floor));
  const size_t fft_n = next_pow2(size_t(3 * tau_max));
  std::vector<double> seg(fft_n, 0.0);

  for (int t = 0; t < frames; t++) {
    if (uv[size_t(t)] < 0.5f) continue;  // unvoiced stays at the forced 1.0
    const double hz = std::clamp(double(f0[size_t(t)]), cfg.f0_floor,
                                 cfg.f0_ceil);
    const int tau = std::max(2, int(std::lround(rate / hz)));
    const int corr_win = 2 * tau;
    const int seg_len = 3 * tau;
    const long center = std::lround(double(t) * cfg.frame_shift * rate);
    std::fill(seg.begin(), seg.end(), 0.0);
    read_segment(w, center - seg_len / 2, seg_len, seg.data());

    auto spec = fft_real(seg, fft_n);
    for (int b = 0; b < bands; b++) {
      // Brick-wall band selection: keep bins whose frequency falls in
      // [b, b+1) * Nyquist / bands, mirrored onto the negative half.
      const size_t half = fft_n / 2;
      const size_t lo = size_t(double(b) / bands * double(half));
      const size_t hi = size_t(double(b + 1) / bands * double(half));
      std::vector<std::complex<double>> banded(fft_n, {0.0, 0.0});
      for (size_t k = std::max<size_t>(lo, 1); k < hi; k++) {
        banded[k] = spec[k];
        banded[fft_n - k] = spec[fft_n - k];
      }
      if (b == 0) banded[0] = spec[0];
      if (hi == half && bands == b + 1) banded[half] = spec[half];
      auto y = ifft_real(banded);

      double num = 0.0, e0 = 0.0, e1 = 0.0;
      for (int j = 0; j < corr_win; j++) {
        num += y[size_t(j)] * y[size_t(j + tau)];
        e0 += y[size_t(j)] * y[size_t(j)];
        e1 += y[size_t(j + tau)] * y[size_t(j + tau)];
      }
      const double denom = std::sqrt(e0 * e1);
      double periodicity = denom > 1e-14 ? num / denom : 0.0;
      periodicity = std::clamp(periodicity, 0.0, 1.0);
      ap[size_t(t) * bands + b] = float(1.0 - periodicity);
    }
  }
  return ap;
}

// ---------------------------------------------------------------------------
// Spectral envelope
// ---------------------------------------------------------------------------

std::vector<std::vector<double>> spectral_envelope(const Waveform& w,
                                                   const std::vector<float>& f0,
                                                   const AnalysisConfig& cfg) {
  cfg.validate(w.rate);
  const int frames = int(f0.size());
  const int n = cfg.fft_size;
  const int half = n / 2;
  const double rate = w.rate;
  const double pfloor = std::exp(2.0 * cfg.env_floor_log);

  std::vector<std::vector<double>> env(size_t(frames));
  std::vector<double> seg(size_t(n), 0.0);

  for (int t = 0; t < frames; t++) {
    const double hz = f0[size_t(t)] > 0 ? double(f0[size_t(t)])
                                        : default_f0(cfg);
    // About three pitch periods of Hann window, capped by the FFT size.
    int win_len = int(std::lround(3.0 * rate / hz));
    win_len = std::clamp(win_len, 64, n);
    const long center = std::lround(double(t) * cfg.frame_shift * rate);
    std::fill(seg.begin(), seg.end(), 0.0);
    read_segment(w, center - win_len / 2, win_len, seg.data());

    double wsum2 = 0.0;
    for (int j = 0; j < win_len; j++) {
      const double win =
          0.5 - 0.5 * std::cos(2.0 * M_PI * double(j) / double(win_len - 1));
      seg[size_t(j)] *= win;
      wsum2 += win * win;
    }
    auto spec = fft_real(seg, size_t(n));

    std::vector<double> log_amp(size_t(half + 1));
    for (int k = 0; k <= half; k++) {
      const double p = std::norm(spec[size_t(k)]) / std::max(wsum2, 1e-12);
      log_amp[size_t(k)] = 0.5 * std::log(std::max(p, pfloor));
    }

    // Cepstral smoothing with a pitch-adaptive lifter: quefrencies past half
    // the pitch period carry harmonic ripple, not envelope.
    const int q_cut = std::max(8, int(std::lround(rate / hz)) / 2);
    std::vector<double> sym(size_t(n));
    for (int k = 0; k <= half; k++) sym[size_t(k)] = log_amp[size_t(k)];
    for (int k = 1; k < half; k++) sym[size_t(n - k)] = log_amp[size_t(k)];
    std::vector<std::complex<double>> c(size_t(n));
    for (int k = 0; k < n; k++) c[size_t(k)] = {sym[size_t(k)], 0.0};
    fft(&c, true);
    const int q_roll = std::max(1, q_cut / 5);
    for (int q = 1; q <= half; q++) {
      double g = 1.0;
      if (q >= q_cut)
        g = 0.0;
      else if (q > q_cut - q_roll)
        g = 0.5 + 0.5 * std::cos(M_PI * double(q - (q_cut - q_roll)) /
                                 double(q_roll));
      c[size_t(q)] *= g;
      c[size_t(n - q)] *= g;
    }
    fft(&c, false);
    auto& e = env[size_t(t)];
    e.resize(size_t(half + 1));
    for (int k = 0; k <= half; k++) e[size_t(k)] = c[size_t(k)].real();
  }
  return env;
}

// ---------------------------------------------------------------------------
// Mel-cepstrum via first-order all-pass warping
// ---------------------------------------------------------------------------

namespace {

// omega + 2*atan(alpha*sin/(1-alpha*cos)); maps [0, pi] onto itself
// monotonically. The inverse is the same map with -alpha.
double warp_freq(double omega, double alpha) {
  return omega + 2.0 * std::atan2(alpha * std::sin(omega),
                                  1.0 - alpha * std::cos(omega));
}

double interp_bins(const std::vector<double>& v, double pos) {
  const double last = double(v.size() - 1);
  pos = std::clamp(pos, 0.0, last);
  const size_t i0 = size_t(pos);
  if (double(i0) >= last) return v.back();
  const double frac = pos - double(i0);
  return v[i0] * (1.0 - frac) + v[i0 + 1] * frac;
}

}  // namespace

std::vector<double> mcep_from_envelope(const std::vector<double>& env,
                                       const AnalysisConfig& cfg) {
  const int n = cfg.fft_size;
  const int half = n / 2;
  if (int(env.size()) != half + 1)
    throw InputError("envelope must have fft_size/2+1 bins, got " +
                     std::to_string(env.size()));
  // Sample the envelope on the warped-uniform grid.
  std::vector<double> warped(size_t(half + 1));
  for (int k = 0; k <= half; k++) {
    const double omega_w = M_PI * double(k) / double(half);
    const double omega = warp_freq(omega_w, -cfg.mel_warp_alpha);
    warped[size_t(k)] = interp_bins(env, omega / M_PI * double(half));
  }
  std::vector<std::complex<double>> c(size_t(n));
  for (int k = 0; k <= half; k++) c[size_t(k)] = {warped[size_t(k)], 0.0};
  for (int k = 1; k < half; k++) c[size_t(n - k)] = {warped[size_t(k)], 0.0};
  fft(&c, true);
  std::vector<double> mc(size_t(cfg.mcep_dim));
  for (int m = 0; m < cfg.mcep_dim; m++) mc[size_t(m)] = c[size_t(m)].real();
  return mc;
}

std::vector<double> envelope_from_mcep(const std::vector<double>& mc,
                                       const AnalysisConfig& cfg) {
  const int n = cfg.fft_size;
  const int half = n / 2;
  if (int(mc.size()) != cfg.mcep_dim)
    throw InputError("mcep dimension mismatch: expected " +
                     std::to_string(cfg.mcep_dim) + ", got " +
                     std::to_string(mc.size()));
  std::vector<std::complex<double>> a(size_t(n), {0.0, 0.0});
  a[0] = {mc[0], 0.0};
  for (int m = 1; m < cfg.mcep_dim && m < half; m++) {
    a[size_t(m)] = {mc[size_t(m)], 0.0};
    a[size_t(n - m)] = {mc[size_t(m)], 0.0};
  }
  fft(&a, false);
  std::vector<double> warped(size_t(half + 1));
  for (int k = 0; k <= half; k++) warped[size_t(k)] = a[size_t(k)].real();
  std::vector<double> env(size_t(half + 1));
  for (int k = 0; k <= half; k++) {
    const double omega = M_PI * double(k) / double(half);
    const double omega_w = warp_freq(omega, cfg.mel_warp_alpha);
    env[size_t(k)] = interp_bins(warped, omega_w / M_PI * double(half));
  }
  return env;
}

// ---------------------------------------------------------------------------

FeatureSequence analyze(const Waveform& w, const AnalysisConfig& cfg) {
  auto track = estimate_f0(w, cfg);
  auto lf0 = continuize_lf0(track.uv, track.f0);
  auto ap = band_aperiodicity(w, track.f0, track.uv, cfg);
  auto env = spectral_envelope(w, track.f0, cfg);

  FeatureSequence fs;
  fs.uv = std::move(track.uv);
  fs.lf0 = std::move(lf0);
  fs.ap = std::move(ap);
  fs.ap_bands = cfg.ap_bands;
  fs.mcep_dim = cfg.mcep_dim;
  fs.frame_shift = cfg.frame_shift;
  fs.source_rate = w.rate;
  fs.mcep.resize(env.size() * size_t(cfg.mcep_dim));
  for (size_t t = 0; t < env.size(); t++) {
    auto mc = mcep_from_envelope(env[t], cfg);
    for (int d = 0; d < cfg.mcep_dim; d++)
      fs.mcep[t * size_t(cfg.mcep_dim) + size_t(d)] = float(mc[size_t(d)]);
  }
  fs.check_aligned();
  return fs;
}

// ---------------------------------------------------------------------------
// Feature cache file
// ---------------------------------------------------------------------------

void write_feature_file(const std::string& path, const FeatureSequence& fs) {
  fs.check_aligned();
  BinaryWriter out(path);
  out.bytes(kFeatureMagic, 4);
  out.u32(kFeatureVersion);
  out.u32(uint32_t(fs.frames()));
  out.u32(1);
  out.u32(1);
  out.u32(uint32_t(fs.ap_bands));
  out.u32(uint32_t(fs.mcep_dim));
  out.f64(fs.frame_shift);
  out.f64(fs.source_rate);
  out.f32_array(fs.uv.data(), fs.uv.size());
  out.f32_array(fs.lf0.data(), fs.lf0.size());
  out.f32_array(fs.ap.data(), fs.ap.size());
  out.f32_array(fs.mcep.data(), fs.mcep.size());
  out.close();
}

FeatureSequence read_feature_file(const std::string& path) {
  BinaryReader in(path);
  char magic[4];
  in.bytes(magic, 4);
  if (std::memcmp(magic, kFeatureMagic, 4) != 0)
    throw FormatError("not a feature cache file: " + path);
  const uint32_t version = in.u32();
  if (version != kFeatureVersion)
    throw FormatError("unsupported feature file version " +
                      std::to_string(version) + ": " + path);
  FeatureSequence fs;
  const uint32_t frames = in.u32();
  const uint32_t uv_dim = in.u32();
  const uint32_t lf0_dim = in.u32();
  fs.ap_bands = int(in.u32());
  fs.mcep_dim = int(in.u32());
  if (uv_dim != 1 || lf0_dim != 1 || fs.ap_bands < 1 || fs.mcep_dim < 1)
    throw CorruptFileError("bad stream dims in feature file: " + path);
  fs.frame_shift = in.f64();
  fs.source_rate = in.f64();
  fs.uv.resize(frames);
  fs.lf0.resize(frames);
  fs.ap.resize(size_t(frames) * size_t(fs.ap_bands));
  fs.mcep.resize(size_t(frames) * size_t(fs.mcep_dim));
  in.f32_array(fs.uv.data(), fs.uv.size());
  in.f32_array(fs.lf0.data(), fs.lf0.size());
  in.f32_array(fs.ap.data(), fs.ap.size());
  in.f32_array(fs.mcep.data(), fs.mcep.size());
  return fs;
}

double mel_cepstral_distance_db(const std::vector<float>& a,
                                const std::vector<float>& b, int frames,
                                int dim) {
  if (a.size() != b.size() || int(a.size()) != frames * dim)
    throw InputError("mel-cepstral distance needs equal-shape sequences");
  double total = 0.0;
  for (int t = 0; t < frames; t++) {
    double ss = 0.0;
    for (int d = 1; d < dim; d++) {
      const double diff = double(a[size_t(t) * dim + d]) -
                          double(b[size_t(t) * dim + d]);
      ss += diff * diff;
    }
    total += std::sqrt(2.0 * ss);
  }
  return 10.0 / std::log(10.0) * total / std::max(1, frames);
}

double mel_cepstral_distance_db(const FeatureSequence& a,
                                const FeatureSequence& b) {
  if (a.frames() != b.frames() || a.mcep_dim != b.mcep_dim)
    throw InputError("mel-cepstral distance needs aligned sequences");
  return mel_cepstral_distance_db(a.mcep, b.mcep, a.frames(), a.mcep_dim);
}

}  // namespace vc
