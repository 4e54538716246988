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

#ifndef VC_SHA256_HPP_
#define VC_SHA256_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace vc {

// Incremental SHA-256 (FIPS 180-4). Used for checkpoint chain verification
// and content-hash caching.
class Sha256 {
 public:
  Sha256() { reset(); }

  void reset();
  void update(const void* data, size_t len);
  std::array<uint8_t, 32> digest();  // finalizes; reuse requires reset()

  static std::array<uint8_t, 32> of(const void* data, size_t len) {
    Sha256 h;
    h.update(data, len);
    return h.digest();
  }
  static std::string hex(const std::array<uint8_t, 32>& d);
  static std::string hex_of(const void* data, size_t len) {
    return hex(of(data, len));
  }
  static std::string hex_of(const std::string& s) {
    return hex_of(s.data(), s.size());
  }

 private:
  void process_block(const uint8_t* block);

  uint32_t state_[8];
  uint64_t bit_count_ = 0;
  uint8_t buffer_[64];
  size_t buffer_len_ = 0;
};

// Hash of an entire file's bytes. Throws IoError if unreadable.
std::string sha256_file_hex(const std::string& path);

}  // namespace vc

#endif  // VC_SHA256_HPP_
