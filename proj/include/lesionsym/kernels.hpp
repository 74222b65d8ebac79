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

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace lesionsym::kernels {

// Inner-loop primitives behind the mask scans and the SVM vector math.
// Every entry has a portable scalar reference implementation; SIMD variants
// (AVX2 on x86-64, NEON on aarch64) are selected at runtime and are
// equivalence-tested against the scalar ones.
//
// The integer kernels are exact in any evaluation order, so all backends
// return identical results. The floating-point kernels may reassociate;
// backends can differ by rounding error, but a process always runs a single
// backend, so results are reproducible run to run.
struct KernelOps {
  std::string_view name;

  // Sum of bytes. Mask pixels are 0/1, so this is the white-pixel count.
  // Bytes must be 0 or 1.
  std::uint64_t (*count_ones)(const std::uint8_t* p, std::size_t n);

  // Sum of the indices of nonzero bytes: sum_i i * p[i]. Bytes must be 0 or 1.
  std::uint64_t (*index_weighted_sum)(const std::uint8_t* p, std::size_t n);

  // dst[i] = src[n-1-i]. src and dst must not overlap.
  void (*reverse_copy)(const std::uint8_t* src, std::uint8_t* dst, std::size_t n);

  double (*dot)(const double* a, const double* b, std::size_t n);

  // y += a * x
  void (*axpy)(double a, const double* x, double* y, std::size_t n);

  // x *= a
  void (*scale)(double* x, std::size_t n, double a);
};

const KernelOps& scalar_ops();

// Backends compiled in and usable on this CPU; scalar always comes first.
std::vector<const KernelOps*> available_backends();

// Backend the library routes through. Defaults to the widest available.
const KernelOps& active_ops();

// Force a backend by name ("scalar", "avx2", "neon") or restore the default
// with "auto". Throws Error(InvalidArgument) for unknown or unavailable names.
void set_active_backend(std::string_view name);

}  // namespace lesionsym::kernels
