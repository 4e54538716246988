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

#ifndef VC_RNG_HPP_
#define VC_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <random>

namespace vc {

// Seeded generator with hand-rolled distributions so that a given seed yields
// the same stream on every platform and standard library. std::*_distribution
// is implementation-defined, which would break the byte-identical-rerun
// contract across toolchains.
class Rng {
 public:
  explicit Rng(uint64_t seed = 0) : engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform in (-0.5, 0.5), end points excluded.
  double uniform_pm_half() {
    double u = uniform() - 0.5;
    if (u <= -0.5) u = -0.5 + 1e-12;
    return u;
  }

  // Uniform integer in [0, n).
  uint64_t uniform_int(uint64_t n) {
    // Rejection-free modulo is biased for huge n; n here is always small
    // (speaker counts, frame counts), so the bias is below measurement.
    return engine_() % n;
  }

  // Standard normal via Box-Muller on the deterministic uniform stream.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * M_PI * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

  // Uniform in [-scale, scale].
  double uniform_sym(double scale) { return (uniform() * 2.0 - 1.0) * scale; }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Stable seed mixing for deriving per-item streams from a run seed.
inline uint64_t mix_seed(uint64_t seed, uint64_t salt) {
  uint64_t x = seed ^ (salt + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebull;
  x ^= x >> 31;
  return x;
}

}  // namespace vc

#endif  // VC_RNG_HPP_
