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

#include "lesionsym/features.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <unordered_set>

#include "lesionsym/csv.hpp"
#include "lesionsym/error.hpp"

namespace lesionsym {

namespace {

double parse_finite_double(const std::string& cell, const std::string& where) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc() || ptr != cell.data() + cell.size() || !std::isfinite(v))
    fail(Errc::NonFiniteValue, "feature cell '" + cell + "' in " + where);
  return v;
}

std::string shortest_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace

const FeatureRecord* FeatureSet::find(std::string_view id) const {
  for (const auto& r : records) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

FeatureSet load_features(std::string_view csv_text) {
  auto rows = csv::parse(csv_text);
  if (rows.empty()) fail(Errc::HeaderMismatch, "feature CSV has no header");
  const auto& header = rows[0];
  if (header.size() < 3 || header[0] != "id" || header[1] != "label")
    fail(Errc::HeaderMismatch, "feature CSV header must start with id,label,f0,...");
  const std::size_t dim = header.size() - 2;
  for (std::size_t i = 0; i < dim; ++i) {
    if (header[i + 2] != "f" + std::to_string(i))
      fail(Errc::HeaderMismatch, "feature column " + std::to_string(i) + " must be named f" + std::to_string(i));
  }
  if (rows.size() < 2) fail(Errc::EmptySet, "feature CSV has no records");

  FeatureSet set;
  set.dim = dim;
  std::unordered_set<std::string> seen;
  std::set<std::string> labels;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != header.size())
      fail(Errc::RaggedRow, "feature row " + std::to_string(r) + " has " + std::to_string(row.size()) +
                                " cells, expected " + std::to_string(header.size()));
    FeatureRecord rec;
    rec.id = row[0];
    rec.label = row[1];
    if (rec.id.empty()) fail(Errc::InvalidArgument, "feature row " + std::to_string(r) + " has empty id");
    if (!seen.insert(rec.id).second) fail(Errc::DuplicateId, "feature id '" + rec.id + "'");
    rec.features.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i)
      rec.features.push_back(parse_finite_double(row[i + 2], "row " + std::to_string(r)));
    if (!rec.label.empty()) labels.insert(rec.label);
    set.records.push_back(std::move(rec));
  }
  set.classes.labels.assign(labels.begin(), labels.end());
  return set;
}

std::string features_to_csv(const FeatureSet& set) {
  std::vector<std::string> header{"id", "label"};
  for (std::size_t i = 0; i < set.dim; ++i) header.push_back("f" + std::to_string(i));
  std::string out = csv::join(header) + "\n";
  for (const auto& rec : set.records) {
    std::vector<std::string> row{rec.id, rec.label};
    for (double v : rec.features) row.push_back(shortest_double(v));
    out += csv::join(row) + "\n";
  }
  return out;
}

}  // namespace lesionsym
