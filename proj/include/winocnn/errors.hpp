// Copyright 2026 The WinoCNN Authors. All Rights Reserved.
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

#pragma once

#include <stdexcept>
#include <string>

namespace winocnn {

// Shape or dimension mismatch between tensors / layer parameters.
class ShapeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Out-of-bounds element access.
class BoundsError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Malformed or unreadable file (tensor files, suite files).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Illegal access on a synced buffer (e.g. const read while uninitialized).
class AccessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Kernel launch against a device without the kernel loaded.
class LaunchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Layer configuration the engine does not support (kernel size, stride).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Model-description parse or validation failure; carries the 1-based line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace winocnn
