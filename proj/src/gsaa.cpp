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

#include "lesionsym/gsaa.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "lesionsym/error.hpp"
#include "lesionsym/kernels.hpp"

namespace lesionsym {

namespace {

using u128 = unsigned __int128;

std::uint64_t quadrant_value(const QuadrantCounts& q, Quadrant which) {
  switch (which) {
    case Quadrant::a: return q.a;
    case Quadrant::b: return q.b;
    case Quadrant::c: return q.c;
    case Quadrant::d: return q.d;
  }
  return 0;
}

void check_config(const GsaaConfig& config) {
  if (config.lower.den <= 0 || config.upper.den <= 0 || config.lower.num <= 0)
    fail(Errc::InvalidArgument, "ratio band must be positive");
  // 0 < lower <= 1 <= upper
  if (config.lower.num > config.lower.den || config.upper.num < config.upper.den)
    fail(Errc::InvalidArgument, "ratio band must satisfy lower <= 1 <= upper");
}

}  // namespace

std::string_view to_string(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::asymmetric: return "asymmetric";
    case SymmetryClass::half_symmetric: return "half_symmetric";
    case SymmetryClass::symmetric: return "symmetric";
  }
  return "?";
}

std::optional<SymmetryClass> parse_symmetry_class(std::string_view text) {
  std::string norm;
  norm.reserve(text.size());
  for (char ch : text) {
    if (ch == '-') ch = '_';
    norm.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  if (norm == "asymmetric") return SymmetryClass::asymmetric;
  if (norm == "half_symmetric") return SymmetryClass::half_symmetric;
  if (norm == "symmetric") return SymmetryClass::symmetric;
  return std::nullopt;
}

std::string_view to_string(GsaaWarning w) {
  switch (w) {
    case GsaaWarning::empty_quadrant_pair: return "EmptyQuadrantPair";
    case GsaaWarning::tiny_mask: return "TinyMask";
    case GsaaWarning::non_binary_input: return "NonBinaryInput";
  }
  return "?";
}

const std::array<QuadrantPair, 4>& pairs_of(PairSet set) {
  static const std::array<QuadrantPair, 4> kAlgorithm{{{Quadrant::a, Quadrant::b},
                                                       {Quadrant::a, Quadrant::d},
                                                       {Quadrant::b, Quadrant::c},
                                                       {Quadrant::c, Quadrant::d}}};
  static const std::array<QuadrantPair, 4> kTable{{{Quadrant::a, Quadrant::c},
                                                   {Quadrant::b, Quadrant::d},
                                                   {Quadrant::a, Quadrant::b},
                                                   {Quadrant::c, Quadrant::d}}};
  return set == PairSet::algorithm ? kAlgorithm : kTable;
}

Centroid centroid(const BinaryMask& mask) {
  const auto& k = kernels::active_ops();
  Centroid out;
  const std::size_t width = static_cast<std::size_t>(mask.width());
  for (int r = 0; r < mask.height(); ++r) {
    const std::uint8_t* row = mask.row(r);
    std::uint64_t cnt = k.count_ones(row, width);
    if (!cnt) continue;
    out.count += cnt;
    out.sum_rows += static_cast<std::uint64_t>(r) * cnt;
    out.sum_cols += k.index_weighted_sum(row, width);
  }
  if (out.count == 0) fail(Errc::EmptyMask, "mask has no white pixels");
  return out;
}

QuadrantCounts quadrant_counts(const BinaryMask& mask) {
  const Centroid cen = centroid(mask);
  const auto& k = kernels::active_ops();
  // First column on the right side: smallest c with c*count >= sum_cols.
  const std::uint64_t col_split = (cen.sum_cols + cen.count - 1) / cen.count;
  const std::uint64_t row_split = (cen.sum_rows + cen.count - 1) / cen.count;
  const std::size_t split = static_cast<std::size_t>(col_split);
  const std::size_t width = static_cast<std::size_t>(mask.width());

  QuadrantCounts out;
  for (int r = 0; r < mask.height(); ++r) {
    const std::uint8_t* row = mask.row(r);
    std::uint64_t left = k.count_ones(row, split);
    std::uint64_t right = k.count_ones(row + split, width - split);
    if (static_cast<std::uint64_t>(r) >= row_split) {
      out.a += right;
      out.b += left;
    } else {
      out.d += right;
      out.c += left;
    }
  }
  return out;
}

std::array<bool, 4> quotient_indicators(const QuadrantCounts& counts, const GsaaConfig& config,
                                        std::vector<GsaaWarning>* warnings) {
  check_config(config);
  std::array<bool, 4> bits{};
  const auto& pairs = pairs_of(config.pair_set);
  bool warned_empty = false;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::uint64_t first = quadrant_value(counts, pairs[i].first);
    const std::uint64_t second = quadrant_value(counts, pairs[i].second);
    bool bit = false;
    if (config.mode == IndicatorMode::symmetric) {
      if (first == 0 && second == 0) {
        if (warnings && !warned_empty) warnings->push_back(GsaaWarning::empty_quadrant_pair);
        warned_empty = true;
      } else {
        const std::uint64_t lo = std::min(first, second);
        const std::uint64_t hi = std::max(first, second);
        bit = u128(lo) * u128(config.lower.den) >= u128(hi) * u128(config.lower.num);
      }
    } else {
      if (second == 0) {
        if (warnings && !warned_empty) warnings->push_back(GsaaWarning::empty_quadrant_pair);
        warned_empty = true;
      } else {
        bit = u128(first) * u128(config.lower.den) >= u128(second) * u128(config.lower.num) &&
              u128(first) * u128(config.upper.den) <= u128(second) * u128(config.upper.num);
      }
    }
    bits[i] = bit;
  }
  return bits;
}

SymmetryClass label_from_ones(int ones_count) {
  if (ones_count == 0) return SymmetryClass::asymmetric;
  if (ones_count <= 2) return SymmetryClass::half_symmetric;
  return SymmetryClass::symmetric;
}

GsaaResult classify_counts(const QuadrantCounts& counts, const GsaaConfig& config) {
  GsaaResult result;
  result.counts = counts;
  result.indicators = quotient_indicators(counts, config, &result.warnings);
  result.ones_count = static_cast<int>(std::count(result.indicators.begin(), result.indicators.end(), true));
  result.label = label_from_ones(result.ones_count);
  return result;
}

GsaaResult classify(const BinaryMask& mask, const GsaaConfig& config) {
  GsaaResult result = classify_counts(quadrant_counts(mask), config);
  if (result.counts.total() < config.min_pixels_warning) result.warnings.push_back(GsaaWarning::tiny_mask);
  return result;
}

}  // namespace lesionsym
