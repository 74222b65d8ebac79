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

#include "lesionsym/mask.hpp"

#include <cstring>

#include "lesionsym/error.hpp"
#include "lesionsym/kernels.hpp"

namespace lesionsym {

namespace {

// Keeps every integer sum used by the geometry well inside 64 bits.
constexpr int kMaxDim = 1 << 20;
constexpr std::size_t kMaxPixels = std::size_t{1} << 28;

void check_dims(int width, int height) {
  if (width < 1 || height < 1) fail(Errc::InvalidArgument, "mask dimensions must be positive");
  if (width > kMaxDim || height > kMaxDim || static_cast<std::size_t>(width) * height > kMaxPixels)
    fail(Errc::InvalidArgument, "mask dimensions exceed supported size");
}

}  // namespace

BinaryMask::BinaryMask(int width, int height, bool fill) : width_(width), height_(height) {
  check_dims(width, height);
  px_.assign(static_cast<std::size_t>(width) * height, fill ? 1 : 0);
}

BinaryMask BinaryMask::from_pixels(int width, int height, std::vector<std::uint8_t> pixels,
                                   std::string source_id) {
  check_dims(width, height);
  if (pixels.size() != static_cast<std::size_t>(width) * height)
    fail(Errc::InvalidArgument, "pixel buffer size does not match dimensions");
  BinaryMask m(width, height);
  for (std::size_t i = 0; i < pixels.size(); ++i) m.px_[i] = pixels[i] ? 1 : 0;
  m.source_id_ = std::move(source_id);
  return m;
}

std::uint64_t BinaryMask::count_white() const {
  return kernels::active_ops().count_ones(px_.data(), px_.size());
}

BinaryMask mirror(const BinaryMask& m, MirrorAxis axis) {
  BinaryMask out(m.width(), m.height());
  out.set_source_id(m.source_id());
  const auto& k = kernels::active_ops();
  if (axis == MirrorAxis::horizontal) {
    for (int r = 0; r < m.height(); ++r) k.reverse_copy(m.row(r), out.row(r), static_cast<std::size_t>(m.width()));
  } else {
    for (int r = 0; r < m.height(); ++r)
      std::memcpy(out.row(m.height() - 1 - r), m.row(r), static_cast<std::size_t>(m.width()));
  }
  return out;
}

BinaryMask rotate180(const BinaryMask& m) {
  // Reversing the whole row-major buffer flips both axes at once.
  BinaryMask out(m.width(), m.height());
  out.set_source_id(m.source_id());
  kernels::active_ops().reverse_copy(m.pixels().data(), out.row(0), m.pixels().size());
  return out;
}

BinaryMask pad(const BinaryMask& m, int top, int bottom, int left, int right) {
  if (top < 0 || bottom < 0 || left < 0 || right < 0) fail(Errc::InvalidArgument, "negative padding");
  BinaryMask out(m.width() + left + right, m.height() + top + bottom);
  out.set_source_id(m.source_id());
  for (int r = 0; r < m.height(); ++r) std::memcpy(out.row(r + top) + left, m.row(r), static_cast<std::size_t>(m.width()));
  return out;
}

}  // namespace lesionsym
