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

#include <filesystem>
#include <string>
#include <vector>

#include "lesionsym/features.hpp"
#include "lesionsym/mask.hpp"
#include "lesionsym/rng.hpp"

namespace lesionsym::testing {

// Unique scratch directory, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("lesionsym_" + tag + "_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }
  std::string str(const std::string& rel) const { return (path_ / rel).string(); }

 private:
  std::filesystem::path path_;
};

// Uniform random mask; guaranteed at least one white pixel.
inline BinaryMask random_mask(Rng& rng, int width, int height, double density = 0.5) {
  BinaryMask mask(width, height);
  bool any = false;
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      if (rng.chance(density)) {
        mask.set(r, c, true);
        any = true;
      }
    }
  }
  if (!any) mask.set(height / 2, width / 2, true);
  return mask;
}

// Labeled near-Gaussian blobs, one cluster per class mean. Deterministic in
// the seed; separability is set by the mean spacing.
inline FeatureSet make_blobs(const std::vector<std::pair<std::string, std::vector<double>>>& class_means,
                             int per_class, std::uint64_t seed, const std::string& id_prefix = "p") {
  FeatureSet set;
  set.dim = class_means.front().second.size();
  Rng rng(seed);
  int serial = 0;
  for (const auto& [label, mean] : class_means) {
    for (int i = 0; i < per_class; ++i) {
      FeatureRecord rec;
      rec.id = id_prefix + std::to_string(serial++);
      rec.label = label;
      rec.features.resize(set.dim);
      for (std::size_t d = 0; d < set.dim; ++d) rec.features[d] = mean[d] + rng.gauss();
      set.records.push_back(std::move(rec));
    }
  }
  std::set<std::string> labels;
  for (const auto& [label, mean] : class_means) labels.insert(label);
  set.classes.labels.assign(labels.begin(), labels.end());
  return set;
}

}  // namespace lesionsym::testing
