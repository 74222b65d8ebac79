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

#include "doctest.h"
#include "lesionsym/error.hpp"
#include "lesionsym/mask.hpp"
#include "lesionsym/rng.hpp"
#include "support/fixtures.hpp"

using namespace lesionsym;

namespace {

// Independent coordinate-remap reference for the transforms.
BinaryMask remap_mirror(const BinaryMask& m, MirrorAxis axis) {
  BinaryMask out(m.width(), m.height());
  for (int r = 0; r < m.height(); ++r) {
    for (int c = 0; c < m.width(); ++c) {
      if (axis == MirrorAxis::horizontal) {
        out.set(r, m.width() - 1 - c, m.at(r, c));
      } else {
        out.set(m.height() - 1 - r, c, m.at(r, c));
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("mask construction validates dimensions") {
  CHECK_THROWS_AS(BinaryMask(0, 4), Error);
  CHECK_THROWS_AS(BinaryMask(4, -1), Error);
  CHECK_THROWS_AS(BinaryMask::from_pixels(2, 2, {1, 0, 1}), Error);
  auto m = BinaryMask::from_pixels(2, 2, {9, 0, 1, 0});
  CHECK(m.at(0, 0));  // nonzero bytes normalize to 1
  CHECK(m.count_white() == 2);
}

TEST_CASE("horizontal mirror moves a left-half block to the right half") {
  BinaryMask m(4, 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 2; ++c) m.set(r, c, true);
  BinaryMask flipped = mirror(m, MirrorAxis::horizontal);
  for (int r = 0; r < 4; ++r) {
    CHECK_FALSE(flipped.at(r, 0));
    CHECK_FALSE(flipped.at(r, 1));
    CHECK(flipped.at(r, 2));
    CHECK(flipped.at(r, 3));
  }
}

TEST_CASE("mirror is an involution on random masks") {
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    auto m = testing::random_mask(rng, 3 + static_cast<int>(rng.below(60)), 3 + static_cast<int>(rng.below(60)));
    CHECK(mirror(mirror(m, MirrorAxis::horizontal), MirrorAxis::horizontal) == m);
    CHECK(mirror(mirror(m, MirrorAxis::vertical), MirrorAxis::vertical) == m);
  }
}

TEST_CASE("mirror matches the coordinate-remap reference") {
  Rng rng(6);
  for (int i = 0; i < 30; ++i) {
    auto m = testing::random_mask(rng, 1 + static_cast<int>(rng.below(70)), 1 + static_cast<int>(rng.below(70)));
    CHECK(mirror(m, MirrorAxis::horizontal) == remap_mirror(m, MirrorAxis::horizontal));
    CHECK(mirror(m, MirrorAxis::vertical) == remap_mirror(m, MirrorAxis::vertical));
  }
}

TEST_CASE("rotate180 maps the corner across the center") {
  BinaryMask m(3, 3);
  m.set(0, 0, true);
  BinaryMask rotated = rotate180(m);
  CHECK(rotated.at(2, 2));
  CHECK(rotated.count_white() == 1);
  CHECK(rotate180(rotated) == m);
}

TEST_CASE("rotate180 equals the composition of both mirrors") {
  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    auto m = testing::random_mask(rng, 2 + static_cast<int>(rng.below(40)), 2 + static_cast<int>(rng.below(40)));
    CHECK(rotate180(m) == mirror(mirror(m, MirrorAxis::horizontal), MirrorAxis::vertical));
    CHECK(mirror(mirror(m, MirrorAxis::horizontal), MirrorAxis::vertical) ==
          mirror(mirror(m, MirrorAxis::vertical), MirrorAxis::horizontal));
  }
}

TEST_CASE("transforms preserve the white-pixel count") {
  Rng rng(8);
  for (int i = 0; i < 20; ++i) {
    auto m = testing::random_mask(rng, 5 + static_cast<int>(rng.below(50)), 5 + static_cast<int>(rng.below(50)));
    const auto count = m.count_white();
    CHECK(mirror(m, MirrorAxis::horizontal).count_white() == count);
    CHECK(mirror(m, MirrorAxis::vertical).count_white() == count);
    CHECK(rotate180(m).count_white() == count);
  }
}

TEST_CASE("pad surrounds with background") {
  BinaryMask m(2, 2, true);
  BinaryMask padded = pad(m, 1, 2, 3, 4);
  CHECK(padded.width() == 9);
  CHECK(padded.height() == 5);
  CHECK(padded.count_white() == 4);
  CHECK(padded.at(1, 3));
  CHECK_FALSE(padded.at(0, 0));
}
