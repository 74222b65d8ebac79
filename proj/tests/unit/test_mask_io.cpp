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

#include <string>
#include <vector>

#include "doctest.h"
#include "lesionsym/error.hpp"
#include "lesionsym/mask_io.hpp"
#include "lesionsym/rng.hpp"
#include "support/fixtures.hpp"

using namespace lesionsym;

namespace {

std::vector<std::uint8_t> bytes_of(const std::string& s) { return {s.begin(), s.end()}; }

// PNG fixtures written by an independent reference encoder (PIL); the decoded
// pixel values are frozen alongside the bytes.

// 2x2 grayscale, pixels row-major: 0, 255, 0, 255
const unsigned char kPng2x2Gray[] = {
    0x89, 0x50, 0x4e, 0x47, 0x0d, 0x0a, 0x1a, 0x0a, 0x00, 0x00, 0x00, 0x0d, 0x49, 0x48, 0x44, 0x52,
    0x00, 0x00, 0x00, 0x02, 0x00, 0x00, 0x00, 0x02, 0x08, 0x00, 0x00, 0x00, 0x00, 0x57, 0xdd, 0x52,
    0xf8, 0x00, 0x00, 0x00, 0x0e, 0x49, 0x44, 0x41, 0x54, 0x78, 0x9c, 0x63, 0x60, 0xf8, 0xcf, 0xc4,
    0xc0, 0x00, 0x00, 0x04, 0x08, 0x01, 0x02, 0xf7, 0xa1, 0xfc, 0x74, 0x00, 0x00, 0x00, 0x00, 0x49,
    0x45, 0x4e, 0x44, 0xae, 0x42, 0x60, 0x82};

// 3x3 grayscale, pixels row-major: 0,255,0, 255,127,255, 0,255,0
const unsigned char kPng3x3Gray127[] = {
    0x89, 0x50, 0x4e, 0x47, 0x0d, 0x0a, 0x1a, 0x0a, 0x00, 0x00, 0x00, 0x0d, 0x49, 0x48, 0x44, 0x52,
    0x00, 0x00, 0x00, 0x03, 0x00, 0x00, 0x00, 0x03, 0x08, 0x00, 0x00, 0x00, 0x00, 0x73, 0x43, 0xea,
    0x63, 0x00, 0x00, 0x00, 0x14, 0x49, 0x44, 0x41, 0x54, 0x78, 0x9c, 0x63, 0x60, 0xf8, 0xcf, 0xc0,
    0xf0, 0xbf, 0xfe, 0x3f, 0x03, 0xc3, 0x7f, 0x06, 0x00, 0x1a, 0xee, 0x04, 0x7c, 0xfa, 0xd7, 0xe7,
    0x3a, 0x00, 0x00, 0x00, 0x00, 0x49, 0x45, 0x4e, 0x44, 0xae, 0x42, 0x60, 0x82};

// 2x2 RGB, pixels row-major: (0,0,0) (255,255,255) (255,0,0) (0,0,255)
const unsigned char kPng2x2Rgb[] = {
    0x89, 0x50, 0x4e, 0x47, 0x0d, 0x0a, 0x1a, 0x0a, 0x00, 0x00, 0x00, 0x0d, 0x49, 0x48, 0x44, 0x52,
    0x00, 0x00, 0x00, 0x02, 0x00, 0x00, 0x00, 0x02, 0x08, 0x02, 0x00, 0x00, 0x00, 0xfd, 0xd4, 0x9a,
    0x73, 0x00, 0x00, 0x00, 0x15, 0x49, 0x44, 0x41, 0x54, 0x78, 0x9c, 0x05, 0xc1, 0x01, 0x01, 0x00,
    0x00, 0x00, 0x80, 0x10, 0xff, 0x4f, 0x17, 0x50, 0x09, 0x1a, 0x21, 0xec, 0x04, 0xfc, 0x92, 0x6f,
    0x8c, 0x55, 0x00, 0x00, 0x00, 0x00, 0x49, 0x45, 0x4e, 0x44, 0xae, 0x42, 0x60, 0x82};

}  // namespace

TEST_CASE("saturated ASCII PGM loads all-true") {
  std::string pgm = "P2\n4 4\n255\n";
  for (int i = 0; i < 16; ++i) pgm += "255 ";
  LoadResult r = load_mask(bytes_of(pgm));
  CHECK(r.mask.width() == 4);
  CHECK(r.mask.height() == 4);
  CHECK(r.mask.count_white() == 16);
  CHECK_FALSE(r.non_binary);
}

TEST_CASE("2x2 grayscale PNG maps nonzero to lesion") {
  LoadResult r = load_mask(std::span(kPng2x2Gray, sizeof(kPng2x2Gray)));
  CHECK(r.mask.width() == 2);
  CHECK(r.mask.height() == 2);
  CHECK(r.mask.count_white() == 2);
  CHECK_FALSE(r.mask.at(0, 0));
  CHECK(r.mask.at(0, 1));
  CHECK_FALSE(r.mask.at(1, 0));
  CHECK(r.mask.at(1, 1));
  CHECK_FALSE(r.non_binary);
}

TEST_CASE("PNG with a mid-gray sample is flagged non-binary but still loads") {
  LoadResult r = load_mask(std::span(kPng3x3Gray127, sizeof(kPng3x3Gray127)));
  CHECK(r.mask.at(1, 1));  // 127 binarizes to lesion
  CHECK(r.mask.count_white() == 5);
  CHECK(r.non_binary);
}

TEST_CASE("RGB PNG binarizes by integer luma") {
  LoadResult r = load_mask(std::span(kPng2x2Rgb, sizeof(kPng2x2Rgb)));
  CHECK_FALSE(r.mask.at(0, 0));  // black
  CHECK(r.mask.at(0, 1));        // white
  CHECK(r.mask.at(1, 0));        // red: nonzero luma
  CHECK(r.mask.at(1, 1));        // blue: nonzero luma
  CHECK(r.non_binary);           // colored samples are not strict black/white
}

TEST_CASE("PBM P4 semantics: set bits are black, clear bits are lesion") {
  // 4x2: first row bits 1010 -> lesion at columns 1 and 3
  std::vector<std::uint8_t> pbm = bytes_of("P4\n4 2\n");
  pbm.push_back(0b10100000);
  pbm.push_back(0b00000000);  // second row all white
  LoadResult r = load_mask(pbm);
  CHECK_FALSE(r.mask.at(0, 0));
  CHECK(r.mask.at(0, 1));
  CHECK_FALSE(r.mask.at(0, 2));
  CHECK(r.mask.at(0, 3));
  CHECK(r.mask.at(1, 0));
  CHECK(r.mask.count_white() == 6);
}

TEST_CASE("binary PGM with 16-bit samples and comments") {
  std::vector<std::uint8_t> pgm = bytes_of("P5\n# comment\n2 1\n65535\n");
  pgm.insert(pgm.end(), {0xFF, 0xFF, 0x00, 0x00});
  LoadResult r = load_mask(pgm);
  CHECK(r.mask.at(0, 0));
  CHECK_FALSE(r.mask.at(0, 1));
  CHECK_FALSE(r.non_binary);
}

TEST_CASE("single-pixel round trip") {
  BinaryMask m(1, 1, true);
  for (MaskFormat f : {MaskFormat::png, MaskFormat::pbm, MaskFormat::pgm}) {
    auto bytes = save_mask(m, f);
    CHECK(load_mask(bytes).mask == m);
  }
}

TEST_CASE("checkerboard round trip") {
  BinaryMask m(4, 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m.set(r, c, (r + c) % 2 == 0);
  for (MaskFormat f : {MaskFormat::png, MaskFormat::pbm, MaskFormat::pgm}) {
    LoadResult back = load_mask(save_mask(m, f));
    CHECK(back.mask == m);
    CHECK_FALSE(back.non_binary);
  }
}

TEST_CASE("random masks round trip through every format") {
  Rng rng(42);
  for (int i = 0; i < 12; ++i) {
    const int w = 1 + static_cast<int>(rng.below(80));
    const int h = 1 + static_cast<int>(rng.below(80));
    auto m = testing::random_mask(rng, w, h, 0.4);
    for (MaskFormat f : {MaskFormat::png, MaskFormat::pbm, MaskFormat::pgm}) {
      CHECK(load_mask(save_mask(m, f)).mask == m);
    }
  }
}

TEST_CASE("unsupported and malformed inputs raise distinct errors") {
  CHECK_THROWS_WITH_AS(static_cast<void>(load_mask(bytes_of("P6\n1 1\n255\nxyz"))),
                       doctest::Contains("UnsupportedFormat"), Error);
  CHECK_THROWS_WITH_AS(static_cast<void>(load_mask(bytes_of("hello world"))),
                       doctest::Contains("UnsupportedFormat"), Error);
  CHECK_THROWS_WITH_AS(static_cast<void>(load_mask(bytes_of("P5\n4 4\n255\nxx"))),
                       doctest::Contains("MalformedImage"), Error);
  std::vector<std::uint8_t> truncated_png(kPng2x2Gray, kPng2x2Gray + 20);
  CHECK_THROWS_WITH_AS(static_cast<void>(load_mask(truncated_png)), doctest::Contains("MalformedImage"),
                       Error);
  // expected-format mismatch
  CHECK_THROWS_WITH_AS(static_cast<void>(load_mask(bytes_of("P4\n1 1\n\x00"), MaskFormat::png)),
                       doctest::Contains("UnsupportedFormat"), Error);
}

TEST_CASE("file round trip sets source_id from the stem") {
  testing::TempDir dir("maskio");
  BinaryMask m(3, 2);
  m.set(1, 2, true);
  save_mask_file(dir.path() / "lesion_a.png", m);
  LoadResult r = load_mask_file(dir.path() / "lesion_a.png");
  CHECK(r.mask == m);
  CHECK(r.mask.source_id() == "lesion_a");
}
