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

// AVX2 backend. This translation unit is compiled with -mavx2 -mfma; it is
// only dispatched to after a cpuid check, so the rest of the library stays
// baseline-portable.

#include "lesionsym/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace lesionsym::kernels {
namespace {

inline std::uint64_t hsum_epi64(__m256i v) {
  return static_cast<std::uint64_t>(_mm256_extract_epi64(v, 0)) +
         static_cast<std::uint64_t>(_mm256_extract_epi64(v, 1)) +
         static_cast<std::uint64_t>(_mm256_extract_epi64(v, 2)) +
         static_cast<std::uint64_t>(_mm256_extract_epi64(v, 3));
}

inline std::uint32_t hsum_epi32(__m256i v) {
  __m128i s = _mm_add_epi32(_mm256_castsi256_si128(v), _mm256_extracti128_si256(v, 1));
  s = _mm_add_epi32(s, _mm_srli_si128(s, 8));
  s = _mm_add_epi32(s, _mm_srli_si128(s, 4));
  return static_cast<std::uint32_t>(_mm_cvtsi128_si32(s));
}

inline double hsum_pd(__m256d v) {
  __m128d s = _mm_add_pd(_mm256_castpd256_pd128(v), _mm256_extractf128_pd(v, 1));
  s = _mm_add_pd(s, _mm_unpackhi_pd(s, s));
  return _mm_cvtsd_f64(s);
}

std::uint64_t count_ones_avx2(const std::uint8_t* p, std::size_t n) {
  const __m256i zero = _mm256_setzero_si256();
  __m256i acc = zero;
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i));
    // bytes are 0/1, so the sum-of-absolute-differences against zero is the count
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(v, zero));
  }
  std::uint64_t total = hsum_epi64(acc);
  for (; i < n; ++i) total += p[i];
  return total;
}

std::uint64_t index_weighted_sum_avx2(const std::uint8_t* p, std::size_t n) {
  const __m256i zero = _mm256_setzero_si256();
  const __m256i ramp = _mm256_setr_epi8(0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19,
                                        20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31);
  const __m256i ones16 = _mm256_set1_epi16(1);
  std::uint64_t total = 0;
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i));
    std::uint64_t cnt = hsum_epi64(_mm256_sad_epu8(v, zero));
    // within-block weighted sum: bytes (0/1) times indices 0..31
    __m256i w16 = _mm256_maddubs_epi16(v, ramp);
    std::uint64_t w = hsum_epi32(_mm256_madd_epi16(w16, ones16));
    total += static_cast<std::uint64_t>(i) * cnt + w;
  }
  for (; i < n; ++i) {
    if (p[i]) total += i;
  }
  return total;
}

void reverse_copy_avx2(const std::uint8_t* src, std::uint8_t* dst, std::size_t n) {
  const __m256i rev = _mm256_setr_epi8(15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0, 15, 14, 13, 12,
                                       11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0);
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + n - 32 - i));
    v = _mm256_shuffle_epi8(v, rev);            // reverse inside each 128-bit lane
    v = _mm256_permute2x128_si256(v, v, 1);     // swap lanes
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), v);
  }
  for (; i < n; ++i) dst[i] = src[n - 1 - i];
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  }
  double total = hsum_pd(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) total += a[i] * b[i];
  return total;
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d r = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    _mm256_storeu_pd(y + i, r);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void scale_avx2(double* x, std::size_t n, double a) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
  }
  for (; i < n; ++i) x[i] *= a;
}

const KernelOps kAvx2Ops{
    "avx2",           count_ones_avx2, index_weighted_sum_avx2,
    reverse_copy_avx2, dot_avx2,       axpy_avx2,
    scale_avx2,
};

}  // namespace

const KernelOps* avx2_ops() {
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return &kAvx2Ops;
  return nullptr;
}

}  // namespace lesionsym::kernels

#else

namespace lesionsym::kernels {
const KernelOps* avx2_ops() { return nullptr; }
}  // namespace lesionsym::kernels

#endif
