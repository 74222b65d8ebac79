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

// NEON backend. Advanced SIMD is mandatory on aarch64, so no capability
// probing is needed beyond the architecture check.

#include "lesionsym/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace lesionsym::kernels {
namespace {

std::uint64_t count_ones_neon(const std::uint8_t* p, std::size_t n) {
  std::uint64_t total = 0;
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    uint8x16_t v = vld1q_u8(p + i);
    total += vaddvq_u8(v);  // 16 bytes of 0/1, sum <= 16
  }
  for (; i < n; ++i) total += p[i];
  return total;
}

std::uint64_t index_weighted_sum_neon(const std::uint8_t* p, std::size_t n) {
  const uint8x8_t ramp_lo = {0, 1, 2, 3, 4, 5, 6, 7};
  const uint8x8_t ramp_hi = {8, 9, 10, 11, 12, 13, 14, 15};
  std::uint64_t total = 0;
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    uint8x16_t v = vld1q_u8(p + i);
    std::uint64_t cnt = vaddvq_u8(v);
    uint16x8_t w = vmull_u8(vget_low_u8(v), ramp_lo);
    w = vmlal_u8(w, vget_high_u8(v), ramp_hi);
    total += static_cast<std::uint64_t>(i) * cnt + vaddvq_u16(w);
  }
  for (; i < n; ++i) {
    if (p[i]) total += i;
  }
  return total;
}

void reverse_copy_neon(const std::uint8_t* src, std::uint8_t* dst, std::size_t n) {
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    uint8x16_t v = vld1q_u8(src + n - 16 - i);
    uint8x16_t r = vrev64q_u8(v);     // reverse each 8-byte half
    r = vextq_u8(r, r, 8);            // swap halves
    vst1q_u8(dst + i, r);
  }
  for (; i < n; ++i) dst[i] = src[n - 1 - i];
}

double dot_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
  }
  double total = vaddvq_f64(acc0) + vaddvq_f64(acc1);
  for (; i < n; ++i) total += a[i] * b[i];
  return total;
}

void axpy_neon(double a, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void scale_neon(double* x, std::size_t n, double a) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(x + i, vmulq_f64(va, vld1q_f64(x + i)));
  }
  for (; i < n; ++i) x[i] *= a;
}

const KernelOps kNeonOps{
    "neon",           count_ones_neon, index_weighted_sum_neon,
    reverse_copy_neon, dot_neon,       axpy_neon,
    scale_neon,
};

}  // namespace

const KernelOps* neon_ops() { return &kNeonOps; }

}  // namespace lesionsym::kernels

#else

namespace lesionsym::kernels {
const KernelOps* neon_ops() { return nullptr; }
}  // namespace lesionsym::kernels

#endif
