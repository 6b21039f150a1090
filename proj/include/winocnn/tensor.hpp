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

#include <cstddef>
#include <vector>

#include "winocnn/errors.hpp"

namespace winocnn {

/// Dense 4-D single-precision tensor in flattened NCHW layout.
///
/// Element (i, j, k, l) lives at flat index ((i*c + j)*h + k)*w + l, i.e.
/// row-major with the width axis fastest. All dimensions are at least 1 and
/// the backing array always holds exactly n*c*h*w values.
class Tensor4D {
 public:
  Tensor4D() = default;
  Tensor4D(int n, int c, int h, int w);
  Tensor4D(int n, int c, int h, int w, std::vector<float> data);

  int n() const noexcept { return n_; }
  int c() const noexcept { return c_; }
  int h() const noexcept { return h_; }
  int w() const noexcept { return w_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  std::size_t index(int i, int j, int k, int l) const noexcept {
    return ((static_cast<std::size_t>(i) * c_ + j) * h_ + k) * w_ + l;
  }

  /// Bounds-checked element access.
  float at(int i, int j, int k, int l) const;
  float& at(int i, int j, int k, int l);

  const float* data() const noexcept { return data_.data(); }
  float* data() noexcept { return data_.data(); }
  const std::vector<float>& values() const noexcept { return data_; }
  std::vector<float>& values() noexcept { return data_; }

  /// Pointer to the start of one h*w spatial plane.
  const float* plane(int image, int channel) const noexcept {
    return data_.data() + index(image, channel, 0, 0);
  }
  float* plane(int image, int channel) noexcept {
    return data_.data() + index(image, channel, 0, 0);
  }

  bool same_shape(const Tensor4D& other) const noexcept {
    return n_ == other.n_ && c_ == other.c_ && h_ == other.h_ && w_ == other.w_;
  }

 private:
  void check_index(int i, int j, int k, int l) const;

  int n_ = 0, c_ = 0, h_ = 0, w_ = 0;
  std::vector<float> data_;
};

/// Zero rows/columns added around each spatial plane.
struct PaddingSpec {
  int top = 0;
  int bottom = 0;
  int left = 0;
  int right = 0;
};

/// Returns a copy of `t` with each plane grown per `p`; new cells are 0.0f.
Tensor4D pad_zero(const Tensor4D& t, const PaddingSpec& p);

/// Inverse of pad_zero: removes the given margins from each plane.
Tensor4D crop(const Tensor4D& t, const PaddingSpec& p);

}  // namespace winocnn
