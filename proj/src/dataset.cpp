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

#include "lesionsym/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "lesionsym/csv.hpp"
#include "lesionsym/error.hpp"
#include "lesionsym/rng.hpp"

namespace lesionsym {

std::optional<SymmetryClass> LabelTable::find(std::string_view id) const {
  for (const auto& [entry_id, label] : entries) {
    if (entry_id == id) return label;
  }
  return std::nullopt;
}

std::vector<std::string> LabelTable::ids() const {
  std::vector<std::string> out;
  out.reserve(entries.size());
  for (const auto& [id, label] : entries) out.push_back(id);
  return out;
}

LabelTable ingest_labels(std::string_view csv_text) {
  auto rows = csv::parse(csv_text);
  if (rows.empty()) fail(Errc::HeaderMismatch, "label CSV has no header");
  if (rows[0].size() != 2 || rows[0][0] != "image_id" || rows[0][1] != "label")
    fail(Errc::HeaderMismatch, "label CSV header must be image_id,label");

  LabelTable table;
  std::unordered_map<std::string, bool> seen;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != 2) fail(Errc::RaggedRow, "label row " + std::to_string(r) + " must have 2 cells");
    const std::string& id = row[0];
    if (id.empty()) fail(Errc::InvalidArgument, "label row " + std::to_string(r) + " has empty id");
    if (seen.count(id)) fail(Errc::DuplicateId, "image id '" + id + "'");
    seen[id] = true;
    auto label = parse_symmetry_class(row[1]);
    if (!label) fail(Errc::UnknownLabel, "label '" + row[1] + "' for image '" + id + "'");
    table.entries.emplace_back(id, *label);
    ++table.class_counts[static_cast<std::size_t>(*label)];
  }
  return table;
}

std::string labels_to_csv(const LabelTable& table) {
  std::string out = "image_id,label\n";
  for (const auto& [id, label] : table.entries) {
    out += id;
    out += ',';
    out += to_string(label);
    out += '\n';
  }
  return out;
}

std::vector<AugmentedItem> augment_mirror(
    const LabelTable& labels, const std::function<BinaryMask(const std::string& id)>& mask_source) {
  std::vector<AugmentedItem> out;
  out.reserve(labels.entries.size() * 3);
  for (const auto& [id, label] : labels.entries) {
    BinaryMask original = mask_source(id);
    BinaryMask h = mirror(original, MirrorAxis::horizontal);
    BinaryMask v = mirror(original, MirrorAxis::vertical);
    out.push_back({id, std::move(original), label});
    out.push_back({id + "_h", std::move(h), label});
    out.push_back({id + "_v", std::move(v), label});
  }
  return out;
}

Ratio parse_decimal_fraction(std::string_view text) {
  if (text.empty()) fail(Errc::BadFractions, "empty fraction");
  std::int64_t num = 0, den = 1;
  bool seen_dot = false, seen_digit = false;
  for (char ch : text) {
    if (ch == '.') {
      if (seen_dot) fail(Errc::BadFractions, "fraction '" + std::string(text) + "'");
      seen_dot = true;
    } else if (ch >= '0' && ch <= '9') {
      if (num > (1LL << 56)) fail(Errc::BadFractions, "fraction '" + std::string(text) + "' has too many digits");
      num = num * 10 + (ch - '0');
      if (seen_dot) den *= 10;
      seen_digit = true;
    } else {
      fail(Errc::BadFractions, "fraction '" + std::string(text) + "'");
    }
  }
  if (!seen_digit) fail(Errc::BadFractions, "fraction '" + std::string(text) + "'");
  return Ratio{num, den};
}

namespace {

// round-half-up(n * frac) with exact integer arithmetic
std::uint64_t rounded_share(std::uint64_t n, const Ratio& frac) {
  const unsigned __int128 scaled = static_cast<unsigned __int128>(n) * static_cast<unsigned __int128>(frac.num);
  const unsigned __int128 den = static_cast<unsigned __int128>(frac.den);
  unsigned __int128 q = scaled / den;
  if ((scaled % den) * 2 >= den) ++q;
  return static_cast<std::uint64_t>(q);
}

void check_fractions(const SplitFractions& f) {
  for (const Ratio* r : {&f.train, &f.val, &f.test}) {
    if (r->den <= 0 || r->num <= 0) fail(Errc::BadFractions, "fractions must be positive");
  }
  const double sum = static_cast<double>(f.train.num) / f.train.den + static_cast<double>(f.val.num) / f.val.den +
                     static_cast<double>(f.test.num) / f.test.den;
  if (std::abs(sum - 1.0) > 1e-9) fail(Errc::BadFractions, "fractions must sum to 1");
}

double ratio_value(const Ratio& r) { return static_cast<double>(r.num) / static_cast<double>(r.den); }

}  // namespace

SplitManifest split(std::vector<std::string> ids, const SplitFractions& fractions, std::uint64_t seed,
                    std::optional<std::uint64_t> test_count) {
  if (ids.empty()) fail(Errc::EmptyInput, "no ids to split");
  check_fractions(fractions);

  std::sort(ids.begin(), ids.end());
  for (std::size_t i = 1; i < ids.size(); ++i) {
    if (ids[i] == ids[i - 1]) fail(Errc::DuplicateId, "id '" + ids[i] + "'");
  }
  const std::uint64_t n = ids.size();
  std::uint64_t n_test = test_count ? *test_count : rounded_share(n, fractions.test);
  if (n_test > n) fail(Errc::BadFractions, "test count exceeds id count");
  std::uint64_t n_val = std::min(rounded_share(n, fractions.val), n - n_test);

  Rng rng(seed);
  rng.shuffle(ids);

  SplitManifest manifest;
  manifest.seed = seed;
  manifest.fractions = fractions;
  manifest.test.assign(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(n_test));
  manifest.val.assign(ids.begin() + static_cast<std::ptrdiff_t>(n_test),
                      ids.begin() + static_cast<std::ptrdiff_t>(n_test + n_val));
  manifest.train.assign(ids.begin() + static_cast<std::ptrdiff_t>(n_test + n_val), ids.end());
  std::sort(manifest.test.begin(), manifest.test.end());
  std::sort(manifest.val.begin(), manifest.val.end());
  std::sort(manifest.train.begin(), manifest.train.end());
  return manifest;
}

nlohmann::ordered_json manifest_to_json(const SplitManifest& manifest) {
  nlohmann::ordered_json j;
  j["seed"] = manifest.seed;
  j["fractions"] = {ratio_value(manifest.fractions.train), ratio_value(manifest.fractions.val),
                    ratio_value(manifest.fractions.test)};
  j["train"] = manifest.train;
  j["val"] = manifest.val;
  j["test"] = manifest.test;
  return j;
}

SplitManifest manifest_from_json(std::string_view text) {
  try {
    auto j = nlohmann::json::parse(text);
    SplitManifest m;
    m.seed = j.at("seed").get<std::uint64_t>();
    m.train = j.at("train").get<std::vector<std::string>>();
    m.val = j.at("val").get<std::vector<std::string>>();
    m.test = j.at("test").get<std::vector<std::string>>();
    return m;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::InvalidArgument, std::string("manifest JSON: ") + e.what());
  }
}

}  // namespace lesionsym
