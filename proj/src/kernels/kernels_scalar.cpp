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

// Reference implementations. Deliberately plain loops: these define the
// semantics the SIMD backends are tested against.

#include "lesionsym/kernels.hpp"

namespace lesionsym::kernels {
namespace {

std::uint64_t count_ones_scalar(const std::uint8_t* p, std::size_t n) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += p[i];
  return total;
}

std::uint64_t index_weighted_sum_scalar(const std::uint8_t* p, std::size_t n) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (p[i]) total += i;
  }
  return total;
}

void reverse_copy_scalar(const std::uint8_t* src, std::uint8_t* dst, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = src[n - 1 - i];
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) total += a[i] * b[i];
  return total;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale_scalar(double* x, std::size_t n, double a) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

}  // namespace

const KernelOps& scalar_ops() {
  static const KernelOps ops{
      "scalar",         count_ones_scalar, index_weighted_sum_scalar,
      reverse_copy_scalar, dot_scalar,     axpy_scalar,
      scale_scalar,
  };
  return ops;
}

}  // namespace lesionsym::kernels
