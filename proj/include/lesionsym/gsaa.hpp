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
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "lesionsym/mask.hpp"

namespace lesionsym {

// Three-way lesion shape label. The enum order is the canonical class order
// used by every report in this project.
enum class SymmetryClass { asymmetric, half_symmetric, symmetric };

std::string_view to_string(SymmetryClass c);
// Tolerant parse: case-insensitive, '-' and '_' interchangeable.
std::optional<SymmetryClass> parse_symmetry_class(std::string_view text);

// Exact centroid of the white pixels, kept as integer sums so that the
// position (sum_rows/count, sum_cols/count) never rounds.
struct Centroid {
  std::uint64_t sum_rows = 0;
  std::uint64_t sum_cols = 0;
  std::uint64_t count = 0;
};

// White-pixel totals of the four regions cut by the two perpendicular axes
// through the centroid:
//   a: right-bottom   b: left-bottom   c: left-up   d: right-up
// A pixel (r, c) is on the right side iff c*count >= sum_cols and on the
// bottom side iff r*count >= sum_rows, both as exact integer comparisons;
// pixels exactly on an axis therefore land right/bottom.
struct QuadrantCounts {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t c = 0;
  std::uint64_t d = 0;
  std::uint64_t total() const { return a + b + c + d; }
};

enum class Quadrant { a, b, c, d };
using QuadrantPair = std::pair<Quadrant, Quadrant>;

// Which four count ratios feed the indicators.
//   algorithm: (a,b) (a,d) (b,c) (c,d) -- the procedure's own pair list
//   table:     (a,c) (b,d) (a,b) (c,d) -- the pair list the result tables use
enum class PairSet { algorithm, table };

const std::array<QuadrantPair, 4>& pairs_of(PairSet set);

// How a ratio is tested against the acceptance band.
//   symmetric: 1 iff min/max >= lower. Order-independent, which makes the
//              label provably invariant under mirrors for generic masks.
//   literal:   1 iff lower <= first/second <= upper with the pair order as
//              listed, the band rule applied verbatim.
enum class IndicatorMode { symmetric, literal };

// Exact nonnegative ratio bound num/den.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

struct GsaaConfig {
  PairSet pair_set = PairSet::algorithm;
  IndicatorMode mode = IndicatorMode::symmetric;
  Ratio lower{9, 10};
  Ratio upper{11, 10};
  std::uint64_t min_pixels_warning = 16;
};

enum class GsaaWarning { empty_quadrant_pair, tiny_mask, non_binary_input };
std::string_view to_string(GsaaWarning w);

struct GsaaResult {
  SymmetryClass label = SymmetryClass::asymmetric;
  QuadrantCounts counts;
  std::array<bool, 4> indicators{};  // in pair-set order
  int ones_count = 0;
  std::vector<GsaaWarning> warnings;
};

// All operations require at least one white pixel and throw Error(EmptyMask)
// otherwise. Everything below is exact integer arithmetic; no floating point
// touches the decision path.

Centroid centroid(const BinaryMask& mask);

QuadrantCounts quadrant_counts(const BinaryMask& mask);

// One bit per pair in pair-set order. A pair with both counts zero scores 0
// and records an empty_quadrant_pair warning (in literal mode the warning
// covers any zero denominator); a pair with exactly one zero scores 0.
std::array<bool, 4> quotient_indicators(const QuadrantCounts& counts, const GsaaConfig& config,
                                        std::vector<GsaaWarning>* warnings = nullptr);

// 0 ones -> asymmetric; 1-2 -> half_symmetric; 3-4 -> symmetric.
SymmetryClass label_from_ones(int ones_count);

// Decision stages from counts onward; no mask-level warnings.
GsaaResult classify_counts(const QuadrantCounts& counts, const GsaaConfig& config = {});

GsaaResult classify(const BinaryMask& mask, const GsaaConfig& config = {});

}  // namespace lesionsym
