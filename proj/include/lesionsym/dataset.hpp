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

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lesionsym/gsaa.hpp"
#include "lesionsym/mask.hpp"

namespace lesionsym {

// Ground-truth shape labels keyed by image id, in file order.
struct LabelTable {
  std::vector<std::pair<std::string, SymmetryClass>> entries;
  std::array<std::uint64_t, 3> class_counts{};  // indexed by SymmetryClass

  std::optional<SymmetryClass> find(std::string_view id) const;
  std::vector<std::string> ids() const;
};

// CSV schema: header `image_id,label`; labels are the three shape classes,
// case-insensitive, '-' and '_' interchangeable.
// Errors: HeaderMismatch, RaggedRow, UnknownLabel, DuplicateId.
LabelTable ingest_labels(std::string_view csv_text);
std::string labels_to_csv(const LabelTable& table);

// Mirror augmentation: for each labeled original emits the original plus its
// horizontal and vertical mirrors with ids `<id>`, `<id>_h`, `<id>_v`, every
// copy inheriting the original's label. Output size is exactly 3x input.
// Errors: MissingMask when a labeled id has no mask.
struct AugmentedItem {
  std::string id;
  BinaryMask mask;
  SymmetryClass label;
};
std::vector<AugmentedItem> augment_mirror(
    const LabelTable& labels, const std::function<BinaryMask(const std::string& id)>& mask_source);

// Split sizing uses exact decimal fractions so the manifest is identical on
// every platform.
Ratio parse_decimal_fraction(std::string_view text);  // "0.75" -> 75/100

struct SplitFractions {
  Ratio train{75, 100};
  Ratio val{20, 100};
  Ratio test{5, 100};
};

struct SplitManifest {
  std::vector<std::string> train;
  std::vector<std::string> val;
  std::vector<std::string> test;
  std::uint64_t seed = 0;
  SplitFractions fractions;
};

// Seeded partition of the id set. Ids are sorted, Fisher-Yates shuffled with
// the project Rng, then the first round-half-up(n*test) ids become the test
// split, the next round-half-up(n*val) the validation split, and the
// remainder the training split; each list is re-sorted for stable output.
// `test_count` overrides the computed test size. Input order never matters.
// Errors: EmptyInput, BadFractions (non-positive, or sum differing from 1 by
// more than 1e-9).
SplitManifest split(std::vector<std::string> ids, const SplitFractions& fractions, std::uint64_t seed,
                    std::optional<std::uint64_t> test_count = {});

nlohmann::ordered_json manifest_to_json(const SplitManifest& manifest);
SplitManifest manifest_from_json(std::string_view text);

}  // namespace lesionsym
