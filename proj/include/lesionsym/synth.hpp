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

#include "lesionsym/gsaa.hpp"
#include "lesionsym/mask.hpp"

namespace lesionsym {

// Synthetic mask construction with a known shape class. Every generator
// verifies its output with the brute-force oracle below before returning, so
// the advertised class is a contract, not a likelihood; a generator that
// cannot satisfy it within the retry budget throws Error(ConstructionFailed).

enum class ShapeKind { disk, ellipse, mirrored_blob, one_axis_blob, free_blob };

struct ShapeSpec {
  ShapeKind kind = ShapeKind::free_blob;
  int size = 64;  // >= 8
  std::uint64_t seed = 0;
};

// Axis of mirror symmetry: `vertical` means the left half mirrors the right
// half, `horizontal` means the top half mirrors the bottom half.
enum class SymmetryAxis { vertical, horizontal };

// Exact two-axis mirror symmetry (even dimensions, centroid on the seam), so
// all four quadrant counts are equal. Kinds: disk, ellipse, mirrored_blob.
BinaryMask gen_symmetric(const ShapeSpec& spec);

// Exact symmetry about the chosen axis only; mass is skewed across the other
// axis until the cross ratios leave the acceptance band. Kind: one_axis_blob.
// Oracle-verified to score 1 or 2 indicator ones under the default config.
BinaryMask gen_half_symmetric(const ShapeSpec& spec, SymmetryAxis axis);

// Random lopsided blobs rejection-sampled until the oracle reports zero
// indicator ones under both pair sets and both indicator modes.
// Kind: free_blob.
BinaryMask gen_asymmetric(const ShapeSpec& spec);

// Independent reference classifier: a full per-pixel scan with
// arbitrary-precision integer cross-multiplication for the quadrant
// assignment and the band checks. Shares only the type definitions with the
// production classifier, never its code path; the two are equivalence-tested
// against each other.
GsaaResult oracle_classify(const BinaryMask& mask, const GsaaConfig& config = {});

}  // namespace lesionsym
