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

#ifndef VC_WAV_IO_HPP_
#define VC_WAV_IO_HPP_

#include <string>

#include "vc/waveform.hpp"

namespace vc {

// Reads a RIFF/WAVE file: PCM-16 or IEEE-float-32, 1-2 channels. Channels are
// averaged to mono; 16-bit samples scale by 1/32768. Throws FormatError for
// unsupported encodings, CorruptFileError for files shorter than their header
// claims.
Waveform read_wav(const std::string& path);

// Writes mono PCM-16 little-endian. Samples are clamped and rounded.
void write_wav(const std::string& path, const Waveform& w);

}  // namespace vc

#endif  // VC_WAV_IO_HPP_
