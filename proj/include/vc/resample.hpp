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

#ifndef VC_RESAMPLE_HPP_
#define VC_RESAMPLE_HPP_

#include "vc/waveform.hpp"

namespace vc {

// Band-limited sample-rate conversion by windowed-sinc interpolation.
// Output length is round(len * new_rate / old_rate). `taps` counts the sinc
// zero crossings covered by the Hann-windowed kernel at unit bandwidth; when
// downsampling the kernel widens so the cutoff tracks the new Nyquist.
Waveform resample(const Waveform& w, double new_rate, int taps = 32);

}  // namespace vc

#endif  // VC_RESAMPLE_HPP_
