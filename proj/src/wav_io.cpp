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

#include "vc/wav_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <vector>

#include "vc/error.hpp"

namespace vc {

namespace {

constexpr uint16_t kFormatPcm = 1;
constexpr uint16_t kFormatFloat = 3;
constexpr uint16_t kFormatExtensible = 0xFFFE;

uint16_t rd_u16(const uint8_t* p) { return uint16_t(p[0] | (p[1] << 8)); }
uint32_t rd_u32(const uint8_t* p) {
  return uint32_t(p[0]) | uint32_t(p[1]) << 8 | uint32_t(p[2]) << 16 |
         uint32_t(p[3]) << 24;
}

}  // namespace

Waveform read_wav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open wav file: " + path);
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0)
    throw FormatError("not a RIFF/WAVE file: " + path);

  uint16_t format_tag = 0, channels = 0, bits = 0;
  uint32_t sample_rate = 0;
  bool have_fmt = false;
  size_t data_offset = 0, data_size = 0;

  size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const char* id = reinterpret_cast<const char*>(bytes.data() + pos);
    uint32_t chunk_size = rd_u32(bytes.data() + pos + 4);
    size_t body = pos + 8;
    if (std::memcmp(id, "fmt ", 4) == 0) {
      if (body + 16 > bytes.size())
        throw CorruptFileError("truncated fmt chunk: " + path);
      format_tag = rd_u16(bytes.data() + body);
      channels = rd_u16(bytes.data() + body + 2);
      sample_rate = rd_u32(bytes.data() + body + 4);
      bits = rd_u16(bytes.data() + body + 14);
      if (format_tag == kFormatExtensible) {
        // Extensible: the real format lives in the first two bytes of the
        // 16-byte SubFormat GUID at offset 24 of the chunk body.
        if (chunk_size < 40 || body + 26 > bytes.size())
          throw CorruptFileError("truncated extensible fmt chunk: " + path);
        format_tag = rd_u16(bytes.data() + body + 24);
      }
      have_fmt = true;
    } else if (std::memcmp(id, "data", 4) == 0) {
      data_offset = body;
      data_size = chunk_size;
      break;
    }
    pos = body + chunk_size + (chunk_size & 1);  // chunks are word-aligned
  }

  if (!have_fmt || data_offset == 0)
    throw FormatError("missing fmt/data chunk: " + path);
  if (channels < 1 || channels > 2)
    throw FormatError("unsupported channel count " + std::to_string(channels) +
                      ": " + path);
  if (sample_rate == 0) throw FormatError("zero sample rate: " + path);
  const bool pcm16 = format_tag == kFormatPcm && bits == 16;
  const bool f32 = format_tag == kFormatFloat && bits == 32;
  if (!pcm16 && !f32)
    throw FormatError("unsupported encoding (format tag " +
                      std::to_string(format_tag) + ", " +
                      std::to_string(bits) + "-bit): " + path);
  if (data_offset + data_size > bytes.size())
    throw CorruptFileError("data chunk truncated: " + path);

  const size_t bytes_per_sample = pcm16 ? 2 : 4;
  const size_t frame_bytes = bytes_per_sample * channels;
  const size_t frames = data_size / frame_bytes;

  Waveform w;
  w.rate = double(sample_rate);
  w.samples.resize(frames);
  const uint8_t* p = bytes.data() + data_offset;
  for (size_t i = 0; i < frames; i++) {
    double acc = 0.0;
    for (int c = 0; c < channels; c++) {
      const uint8_t* sp = p + i * frame_bytes + size_t(c) * bytes_per_sample;
      if (pcm16) {
        int16_t v = int16_t(rd_u16(sp));
        acc += double(v) / 32768.0;
      } else {
        uint32_t u = rd_u32(sp);
        float v;
        std::memcpy(&v, &u, 4);
        acc += double(v);
      }
    }
    w.samples[i] = float(std::clamp(acc / channels, -1.0, 1.0));
  }
  return w;
}

void write_wav(const std::string& path, const Waveform& w) {
  if (w.rate <= 0) throw InputError("waveform rate must be positive");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open wav file for writing: " + path);

  const uint32_t rate = uint32_t(std::lround(w.rate));
  const uint32_t data_size = uint32_t(w.size() * 2);
  auto wr_u16 = [&](uint16_t v) {
    char b[2] = {char(v), char(v >> 8)};
    out.write(b, 2);
  };
  auto wr_u32 = [&](uint32_t v) {
    char b[4] = {char(v), char(v >> 8), char(v >> 16), char(v >> 24)};
    out.write(b, 4);
  };

  out.write("RIFF", 4);
  wr_u32(36 + data_size);
  out.write("WAVE", 4);
  out.write("fmt ", 4);
  wr_u32(16);
  wr_u16(kFormatPcm);
  wr_u16(1);  // mono
  wr_u32(rate);
  wr_u32(rate * 2);  // byte rate
  wr_u16(2);         // block align
  wr_u16(16);        // bits
  out.write("data", 4);
  wr_u32(data_size);
  for (float s : w.samples) {
    double v = std::clamp(double(s), -1.0, 1.0) * 32768.0;
    int32_t q = int32_t(std::lround(v));
    q = std::clamp(q, -32768, 32767);
    wr_u16(uint16_t(int16_t(q)));
  }
  out.close();
  if (!out) throw IoError("wav write failed: " + path);
}

}  // namespace vc
