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

#include <cstdint>
#include <filesystem>
#include <iosfwd>

#include "winocnn/tensor.hpp"

namespace winocnn {

// FCW tensor container: magic "FCW1", five little-endian uint32 words
// (version=1, n, c, h, w), then n*c*h*w little-endian IEEE-754 float32.
inline constexpr std::uint32_t kFcwVersion = 1;

void write_fcw(std::ostream& out, const Tensor4D& t);
void write_fcw(const std::filesystem::path& path, const Tensor4D& t);

/// Throws IoError on bad magic, unsupported version, or payload length
/// mismatch (short read or trailing bytes).
Tensor4D read_fcw(std::istream& in);
Tensor4D read_fcw(const std::filesystem::path& path);

}  // namespace winocnn
