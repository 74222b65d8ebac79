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

#include <string>
#include <string_view>
#include <vector>

#include "lesionsym/metrics.hpp"

namespace lesionsym {

// One externally computed feature vector. An empty label marks a
// predict-only record.
struct FeatureRecord {
  std::string id;
  std::string label;
  std::vector<double> features;
};

struct FeatureSet {
  std::vector<FeatureRecord> records;
  std::size_t dim = 0;
  ClassSet classes;  // distinct non-empty labels, sorted

  const FeatureRecord* find(std::string_view id) const;
};

// CSV schema: header `id,label,f0,...,f{d-1}`, one record per row, label
// cell may be empty. Errors: HeaderMismatch, RaggedRow, NonFiniteValue,
// DuplicateId, EmptySet for a header-only file.
FeatureSet load_features(std::string_view csv_text);

// Inverse of load_features; feature values round-trip bit-exactly through
// shortest-round-trip decimal serialization.
std::string features_to_csv(const FeatureSet& set);

}  // namespace lesionsym
