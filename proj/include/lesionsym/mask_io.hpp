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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lesionsym/mask.hpp"

namespace lesionsym {

enum class MaskFormat { png, pbm, pgm };

std::optional<MaskFormat> format_from_extension(const std::filesystem::path& path);

struct LoadResult {
  BinaryMask mask;
  // Set when some sample was neither 0 nor the format maximum (255 for 8-bit
  // gray, pure black/white for RGB). The pixel still binarizes as
  // nonzero-is-lesion; the flag lets callers report that the source was not
  // strictly binary.
  bool non_binary = false;
};

// Decodes a mask from PNG (8-bit grayscale or RGB), binary PBM (P4) or
// ASCII/binary PGM (P2/P5). The format is detected from the magic bytes; when
// `expected` is given a mismatch is an UnsupportedFormat error.
// Errors: UnsupportedFormat for other formats, MalformedImage for undecodable
// content.
LoadResult load_mask(std::span<const std::uint8_t> bytes, std::optional<MaskFormat> expected = {});

// Encodes a mask. PNG output is 8-bit grayscale with values exactly 0 and
// 255; PBM is P4; PGM is binary P5 with maxval 255. load_mask(save_mask(m))
// reproduces m bit-exactly.
std::vector<std::uint8_t> save_mask(const BinaryMask& mask, MaskFormat format);

// File wrappers. The loaded mask's source_id is the filename stem.
LoadResult load_mask_file(const std::filesystem::path& path);
void save_mask_file(const std::filesystem::path& path, const BinaryMask& mask);

}  // namespace lesionsym
