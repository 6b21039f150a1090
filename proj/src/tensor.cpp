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

#include "winocnn/tensor.hpp"

#include <string>

namespace winocnn {

namespace {

std::size_t checked_volume(int n, int c, int h, int w) {
  if (n < 1 || c < 1 || h < 1 || w < 1) {
    throw ShapeError("tensor dimensions must all be >= 1, got " +
                     std::to_string(n) + "x" + std::to_string(c) + "x" +
                     std::to_string(h) + "x" + std::to_string(w));
  }
  return static_cast<std::size_t>(n) * c * h * w;
}

}  // namespace

Tensor4D::Tensor4D(int n, int c, int h, int w)
    : n_(n), c_(c), h_(h), w_(w), data_(checked_volume(n, c, h, w), 0.0f) {}

Tensor4D::Tensor4D(int n, int c, int h, int w, std::vector<float> data)
    : n_(n), c_(c), h_(h), w_(w), data_(std::move(data)) {
  if (checked_volume(n, c, h, w) != data_.size()) {
    throw ShapeError("tensor data length " + std::to_string(data_.size()) +
                     " does not match n*c*h*w");
  }
}

void Tensor4D::check_index(int i, int j, int k, int l) const {
  if (i < 0 || i >= n_ || j < 0 || j >= c_ || k < 0 || k >= h_ || l < 0 ||
      l >= w_) {
    throw BoundsError("tensor index (" + std::to_string(i) + "," +
                      std::to_string(j) + "," + std::to_string(k) + "," +
                      std::to_string(l) + ") out of bounds for " +
                      std::to_string(n_) + "x" + std::to_string(c_) + "x" +
                      std::to_string(h_) + "x" + std::to_string(w_));
  }
}

float Tensor4D::at(int i, int j, int k, int l) const {
  check_index(i, j, k, l);
  return data_[index(i, j, k, l)];
}

float& Tensor4D::at(int i, int j, int k, int l) {
  check_index(i, j, k, l);
  return data_[index(i, j, k, l)];
}

Tensor4D pad_zero(const Tensor4D& t, const PaddingSpec& p) {
  if (p.top < 0 || p.bottom < 0 || p.left < 0 || p.right < 0) {
    throw ShapeError("padding amounts must be >= 0");
  }
  const int oh = t.h() + p.top + p.bottom;
  const int ow = t.w() + p.left + p.right;
  Tensor4D out(t.n(), t.c(), oh, ow);
  for (int i = 0; i < t.n(); ++i) {
    for (int j = 0; j < t.c(); ++j) {
      const float* src = t.plane(i, j);
      float* dst = out.plane(i, j);
      for (int k = 0; k < t.h(); ++k) {
        float* row = dst + static_cast<std::size_t>(k + p.top) * ow + p.left;
        const float* src_row = src + static_cast<std::size_t>(k) * t.w();
        for (int l = 0; l < t.w(); ++l) row[l] = src_row[l];
      }
    }
  }
  return out;
}

Tensor4D crop(const Tensor4D& t, const PaddingSpec& p) {
  const int oh = t.h() - p.top - p.bottom;
  const int ow = t.w() - p.left - p.right;
  if (oh < 1 || ow < 1) {
    throw ShapeError("crop margins exceed tensor size");
  }
  Tensor4D out(t.n(), t.c(), oh, ow);
  for (int i = 0; i < t.n(); ++i) {
    for (int j = 0; j < t.c(); ++j) {
      const float* src = t.plane(i, j);
      float* dst = out.plane(i, j);
      for (int k = 0; k < oh; ++k) {
        const float* src_row =
            src + static_cast<std::size_t>(k + p.top) * t.w() + p.left;
        float* row = dst + static_cast<std::size_t>(k) * ow;
        for (int l = 0; l < ow; ++l) row[l] = src_row[l];
      }
    }
  }
  return out;
}

}  // namespace winocnn
