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

#ifndef VC_SYNTHESIS_HPP_
#define VC_SYNTHESIS_HPP_

#include <cstdint>

#include "vc/analysis.hpp"
#include "vc/waveform.hpp"

namespace vc {

// Parametric debug vocoder: pulse-train plus noise excitation, mixed per band
// by the aperiodicity stream, filtered by the mel-cepstral envelope and
// overlap-added. cfg supplies the spectral geometry (fft_size, warp alpha)
// and must match the feature dimensions. Deterministic for a given seed.
Waveform synthesize_parametric(const FeatureSequence& fs,
                               const AnalysisConfig& cfg,
                               uint64_t seed = 0x5eedu);

}  // namespace vc

#endif  // VC_SYNTHESIS_HPP_
