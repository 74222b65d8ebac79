// Copyright 2026 The lesionsym Authors
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

#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

namespace lesionsym {

// Pixel coordinate. Row 0 is the top of the image, column 0 the left edge;
// this convention is fixed across the whole project.
struct PixelCoord {
  int row = 0;
  int col = 0;
};

// Binary lesion mask: row-major grid, one byte per pixel, 1 = lesion (white),
// 0 = background. One byte per pixel keeps the scan kernels branch-free.
// Equality compares dimensions and pixels only; source_id is provenance
// metadata.
class BinaryMask {
 public:
  BinaryMask(int width, int height, bool fill = false);
  static BinaryMask from_pixels(int width, int height, std::vector<std::uint8_t> pixels,
                                std::string source_id = {});

  int width() const { return width_; }
  int height() const { return height_; }

  bool at(int r, int c) const {
    assert(r >= 0 && r < height_ && c >= 0 && c < width_);
    return px_[static_cast<std::size_t>(r) * width_ + c] != 0;
  }
  bool at(PixelCoord p) const { return at(p.row, p.col); }
  void set(int r, int c, bool v) {
    assert(r >= 0 && r < height_ && c >= 0 && c < width_);
    px_[static_cast<std::size_t>(r) * width_ + c] = v ? 1 : 0;
  }

  const std::uint8_t* row(int r) const { return px_.data() + static_cast<std::size_t>(r) * width_; }
  std::uint8_t* row(int r) { return px_.data() + static_cast<std::size_t>(r) * width_; }
  const std::vector<std::uint8_t>& pixels() const { return px_; }

  std::uint64_t count_white() const;

  const std::string& source_id() const { return source_id_; }
  void set_source_id(std::string id) { source_id_ = std::move(id); }

  friend bool operator==(const BinaryMask& a, const BinaryMask& b) {
    return a.width_ == b.width_ && a.height_ == b.height_ && a.px_ == b.px_;
  }

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> px_;
  std::string source_id_;
};

// Flip direction. `horizontal` flips columns (c -> width-1-c), `vertical`
// flips rows (r -> height-1-r). Both are involutions and commute.
enum class MirrorAxis { horizontal, vertical };

BinaryMask mirror(const BinaryMask& m, MirrorAxis axis);

// Equals mirror(mirror(m, horizontal), vertical).
BinaryMask rotate180(const BinaryMask& m);

// Surrounds the mask with background rows/columns. Used by the translation
// invariance checks.
BinaryMask pad(const BinaryMask& m, int top, int bottom, int left, int right);

}  // namespace lesionsym
