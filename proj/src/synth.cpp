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

#include "lesionsym/synth.hpp"

#include <algorithm>

#include "lesionsym/error.hpp"
#include "lesionsym/rational.hpp"
#include "lesionsym/rng.hpp"

namespace lesionsym {

namespace {

constexpr int kRetryBudget = 1000;

int even_at_least_8(int v) { return std::max(8, v + (v & 1)); }

void check_spec(const ShapeSpec& spec) {
  if (spec.size < 8) fail(Errc::InvalidArgument, "shape size must be >= 8");
}

// ---------------------------------------------------------------------------
// Brute-force oracle. Everything below recomputes the classification from
// first principles with big integers; keep it plain and independent of the
// production implementation.
// ---------------------------------------------------------------------------

struct OraclePair {
  int first;
  int second;
};

// Quadrant order: 0=a (right-bottom), 1=b (left-bottom), 2=c (left-up),
// 3=d (right-up).
const OraclePair kOracleAlgorithmPairs[4] = {{0, 1}, {0, 3}, {1, 2}, {2, 3}};
const OraclePair kOracleTablePairs[4] = {{0, 2}, {1, 3}, {0, 1}, {2, 3}};

GsaaResult oracle_classify_impl(const BinaryMask& mask, const GsaaConfig& config) {
  BigInt sum_rows = 0, sum_cols = 0, count = 0;
  for (int r = 0; r < mask.height(); ++r) {
    for (int c = 0; c < mask.width(); ++c) {
      if (!mask.at(r, c)) continue;
      sum_rows += r;
      sum_cols += c;
      ++count;
    }
  }
  if (count == 0) fail(Errc::EmptyMask, "mask has no white pixels");

  BigInt quadrants[4] = {0, 0, 0, 0};
  for (int r = 0; r < mask.height(); ++r) {
    for (int c = 0; c < mask.width(); ++c) {
      if (!mask.at(r, c)) continue;
      const bool right = BigInt(c) * count >= sum_cols;
      const bool bottom = BigInt(r) * count >= sum_rows;
      int q = bottom ? (right ? 0 : 1) : (right ? 3 : 2);
      ++quadrants[q];
    }
  }

  GsaaResult result;
  result.counts.a = quadrants[0].convert_to<std::uint64_t>();
  result.counts.b = quadrants[1].convert_to<std::uint64_t>();
  result.counts.c = quadrants[2].convert_to<std::uint64_t>();
  result.counts.d = quadrants[3].convert_to<std::uint64_t>();

  const OraclePair* pairs =
      config.pair_set == PairSet::algorithm ? kOracleAlgorithmPairs : kOracleTablePairs;
  const BigInt lo_num = config.lower.num, lo_den = config.lower.den;
  const BigInt up_num = config.upper.num, up_den = config.upper.den;
  bool warned = false;
  for (int i = 0; i < 4; ++i) {
    const BigInt& x = quadrants[pairs[i].first];
    const BigInt& y = quadrants[pairs[i].second];
    bool bit = false;
    if (config.mode == IndicatorMode::symmetric) {
      if (x == 0 && y == 0) {
        if (!warned) result.warnings.push_back(GsaaWarning::empty_quadrant_pair);
        warned = true;
      } else {
        const BigInt& lo = x < y ? x : y;
        const BigInt& hi = x < y ? y : x;
        bit = lo * lo_den >= hi * lo_num;
      }
    } else {
      if (y == 0) {
        if (!warned) result.warnings.push_back(GsaaWarning::empty_quadrant_pair);
        warned = true;
      } else {
        bit = x * lo_den >= y * lo_num && x * up_den <= y * up_num;
      }
    }
    result.indicators[i] = bit;
    if (bit) ++result.ones_count;
  }

  if (result.ones_count == 0) {
    result.label = SymmetryClass::asymmetric;
  } else if (result.ones_count == 1 || result.ones_count == 2) {
    result.label = SymmetryClass::half_symmetric;
  } else {
    result.label = SymmetryClass::symmetric;
  }
  if (count < config.min_pixels_warning) result.warnings.push_back(GsaaWarning::tiny_mask);
  return result;
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

using i128 = __int128;

// Solid ellipse with half-pixel center ((h-1)/2, (w-1)/2) and doubled-space
// semi-axes rx, ry; exactly mirror symmetric in both axes.
void paint_centered_ellipse(BinaryMask& mask, std::int64_t rx, std::int64_t ry) {
  const int w = mask.width(), h = mask.height();
  for (int r = 0; r < h; ++r) {
    const std::int64_t dy = 2 * r - (h - 1);
    for (int c = 0; c < w; ++c) {
      const std::int64_t dx = 2 * c - (w - 1);
      if (i128(dx) * dx * (i128(ry) * ry) + i128(dy) * dy * (i128(rx) * rx) <=
          i128(rx) * rx * (i128(ry) * ry)) {
        mask.set(r, c, true);
      }
    }
  }
}

void paint_ellipse(BinaryMask& mask, int cr, int cc, int rr, int rc) {
  for (int r = std::max(0, cr - rr); r <= std::min(mask.height() - 1, cr + rr); ++r) {
    const std::int64_t dy = r - cr;
    for (int c = std::max(0, cc - rc); c <= std::min(mask.width() - 1, cc + rc); ++c) {
      const std::int64_t dx = c - cc;
      if (i128(dx) * dx * (i128(rr) * rr) + i128(dy) * dy * (i128(rc) * rc) <=
          i128(rr) * rr * (i128(rc) * rc)) {
        mask.set(r, c, true);
      }
    }
  }
}

BinaryMask gen_mirrored_blob(int size, std::uint64_t seed) {
  const int dim = even_at_least_8(size);
  const int qw = dim / 2, qh = dim / 2;
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    BinaryMask mask(dim, dim);
    bool any = false;
    for (int r = 0; r < qh; ++r) {
      for (int c = 0; c < qw; ++c) {
        if (!rng.chance(0.45)) continue;
        mask.set(r, c, true);
        mask.set(r, dim - 1 - c, true);
        mask.set(dim - 1 - r, c, true);
        mask.set(dim - 1 - r, dim - 1 - c, true);
        any = true;
      }
    }
    if (!any) continue;
    GsaaResult check = oracle_classify_impl(mask, GsaaConfig{});
    if (check.ones_count == 4) return mask;
  }
  fail(Errc::ConstructionFailed, "mirrored_blob retry budget exhausted");
}

}  // namespace

GsaaResult oracle_classify(const BinaryMask& mask, const GsaaConfig& config) {
  return oracle_classify_impl(mask, config);
}

BinaryMask gen_symmetric(const ShapeSpec& spec) {
  check_spec(spec);
  switch (spec.kind) {
    case ShapeKind::disk: {
      const int dim = even_at_least_8(spec.size);
      BinaryMask mask(dim, dim);
      paint_centered_ellipse(mask, dim - 2, dim - 2);
      GsaaResult check = oracle_classify_impl(mask, GsaaConfig{});
      if (check.ones_count != 4) fail(Errc::ConstructionFailed, "disk construction not symmetric");
      return mask;
    }
    case ShapeKind::ellipse: {
      const int w = even_at_least_8(spec.size);
      const int h = even_at_least_8(2 * spec.size / 3);
      BinaryMask mask(w, h);
      paint_centered_ellipse(mask, w - 2, h - 2);
      GsaaResult check = oracle_classify_impl(mask, GsaaConfig{});
      if (check.ones_count != 4) fail(Errc::ConstructionFailed, "ellipse construction not symmetric");
      return mask;
    }
    case ShapeKind::mirrored_blob:
      return gen_mirrored_blob(spec.size, spec.seed);
    default:
      fail(Errc::InvalidArgument, "gen_symmetric expects disk, ellipse or mirrored_blob");
  }
}

BinaryMask gen_half_symmetric(const ShapeSpec& spec, SymmetryAxis axis) {
  check_spec(spec);
  if (spec.kind != ShapeKind::one_axis_blob)
    fail(Errc::InvalidArgument, "gen_half_symmetric expects one_axis_blob");
  const int dim = even_at_least_8(spec.size);
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    Rng rng(derive_seed(spec.seed, static_cast<std::uint64_t>(attempt)));
    BinaryMask mask(dim, dim);
    bool any = false;
    if (axis == SymmetryAxis::vertical) {
      // Left mirrors right; density grows toward the bottom so the
      // bottom/top ratios leave the band.
      for (int r = 0; r < dim; ++r) {
        const double density = 0.10 + 0.80 * (r + 0.5) / dim;
        for (int c = dim / 2; c < dim; ++c) {
          if (!rng.chance(density)) continue;
          mask.set(r, c, true);
          mask.set(r, dim - 1 - c, true);
          any = true;
        }
      }
    } else {
      // Top mirrors bottom; density grows toward the right.
      for (int c = 0; c < dim; ++c) {
        const double density = 0.10 + 0.80 * (c + 0.5) / dim;
        for (int r = dim / 2; r < dim; ++r) {
          if (!rng.chance(density)) continue;
          mask.set(r, c, true);
          mask.set(dim - 1 - r, c, true);
          any = true;
        }
      }
    }
    if (!any) continue;
    GsaaResult check = oracle_classify_impl(mask, GsaaConfig{});
    if (check.ones_count == 1 || check.ones_count == 2) return mask;
  }
  fail(Errc::ConstructionFailed, "one_axis_blob retry budget exhausted");
}

BinaryMask gen_asymmetric(const ShapeSpec& spec) {
  check_spec(spec);
  if (spec.kind != ShapeKind::free_blob) fail(Errc::InvalidArgument, "gen_asymmetric expects free_blob");
  const int dim = std::max(8, spec.size);
  const GsaaConfig configs[4] = {
      {PairSet::algorithm, IndicatorMode::symmetric, {9, 10}, {11, 10}, 16},
      {PairSet::table, IndicatorMode::symmetric, {9, 10}, {11, 10}, 16},
      {PairSet::algorithm, IndicatorMode::literal, {9, 10}, {11, 10}, 16},
      {PairSet::table, IndicatorMode::literal, {9, 10}, {11, 10}, 16},
  };
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    Rng rng(derive_seed(spec.seed, static_cast<std::uint64_t>(attempt)));
    BinaryMask mask(dim, dim);
    // A few blobs of sharply different size, pulled toward different corners.
    const int blobs = 3 + static_cast<int>(rng.below(2));
    for (int b = 0; b < blobs; ++b) {
      const int margin = dim / 8;
      const int cr = margin + static_cast<int>(rng.below(static_cast<std::uint64_t>(dim - 2 * margin)));
      const int cc = margin + static_cast<int>(rng.below(static_cast<std::uint64_t>(dim - 2 * margin)));
      const int max_radius = std::max(2, dim / (3 + 3 * b));
      const int rr = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_radius)));
      const int rc = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_radius)));
      paint_ellipse(mask, cr, cc, rr, rc);
    }
    bool all_zero = true;
    for (const auto& config : configs) {
      if (oracle_classify_impl(mask, config).ones_count != 0) {
        all_zero = false;
        break;
      }
    }
    if (all_zero) return mask;
  }
  fail(Errc::ConstructionFailed, "free_blob retry budget exhausted");
}

}  // namespace lesionsym
