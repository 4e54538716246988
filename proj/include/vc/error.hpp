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

#ifndef VC_ERROR_HPP_
#define VC_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace vc {

// Base of all toolkit errors. Subclass choice encodes the failure family so
// callers (and the CLI exit-code mapping) can react without string matching.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad configuration value or an out-of-contract knob.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Unsupported file encoding or container layout.
class FormatError : public Error {
 public:
  using Error::Error;
};

// File shorter or more damaged than its own header claims.
class CorruptFileError : public Error {
 public:
  using Error::Error;
};

// Caller passed data violating an operation precondition (shape, alignment,
// unnormalized input, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

// Non-finite value produced where the contract requires finite results.
class NumericError : public Error {
 public:
  using Error::Error;
};

// Math-domain violation (e.g. nonpositive scale parameter).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Speaker statistics missing, degenerate, or built from too little data.
class StatsError : public Error {
 public:
  using Error::Error;
};

// No voiced frames where at least one is required.
class NoVoicingError : public Error {
 public:
  using Error::Error;
};

// Duplicate or inconsistent utterance manifest records.
class ManifestError : public Error {
 public:
  using Error::Error;
};

// Checkpoint hash mismatch or a broken training-stage chain.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

// Filesystem-level failure not covered by the above.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace vc

#endif  // VC_ERROR_HPP_
