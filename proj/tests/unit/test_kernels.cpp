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

// Equivalence tests: every compiled SIMD backend must agree with the scalar
// reference, exactly for the integer kernels and within accumulated rounding
// for the floating-point ones.

#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "lesionsym/error.hpp"
#include "lesionsym/kernels.hpp"
#include "lesionsym/rng.hpp"

using namespace lesionsym;

namespace {

// Sizes straddling the vector widths plus the empty and tiny cases.
const std::vector<std::size_t> kSizes{0, 1, 2, 7, 8, 15, 16, 17, 31, 32, 33, 63, 64, 65, 100, 255, 256, 1000};

std::vector<std::uint8_t> random_bits(Rng& rng, std::size_t n, double density) {
  std::vector<std::uint8_t> v(n);
  for (auto& b : v) b = rng.chance(density) ? 1 : 0;
  return v;
}

std::vector<double> random_doubles(Rng& rng, std::size_t n) {
  std::vector<double> v(n);
  for (auto& x : v) x = rng.unit() * 8.0 - 4.0;
  return v;
}

}  // namespace

TEST_CASE("scalar backend is always first and available") {
  auto backends = kernels::available_backends();
  REQUIRE(!backends.empty());
  CHECK(backends.front()->name == "scalar");
}

TEST_CASE("simd backends match scalar on integer kernels exactly") {
  const auto& scalar = kernels::scalar_ops();
  for (const auto* backend : kernels::available_backends()) {
    CAPTURE(backend->name);
    Rng rng(101);
    for (std::size_t n : kSizes) {
      for (double density : {0.0, 0.3, 1.0}) {
        auto bits = random_bits(rng, n, density);
        CHECK(backend->count_ones(bits.data(), n) == scalar.count_ones(bits.data(), n));
        CHECK(backend->index_weighted_sum(bits.data(), n) == scalar.index_weighted_sum(bits.data(), n));

        std::vector<std::uint8_t> got(n, 7), want(n, 7);
        backend->reverse_copy(bits.data(), got.data(), n);
        scalar.reverse_copy(bits.data(), want.data(), n);
        CHECK(got == want);
      }
    }
  }
}

TEST_CASE("reverse_copy is an involution") {
  Rng rng(77);
  for (const auto* backend : kernels::available_backends()) {
    auto bits = random_bits(rng, 333, 0.5);
    std::vector<std::uint8_t> once(bits.size()), twice(bits.size());
    backend->reverse_copy(bits.data(), once.data(), bits.size());
    backend->reverse_copy(once.data(), twice.data(), bits.size());
    CHECK(twice == bits);
  }
}

TEST_CASE("simd backends match scalar on float kernels within rounding") {
  const auto& scalar = kernels::scalar_ops();
  for (const auto* backend : kernels::available_backends()) {
    CAPTURE(backend->name);
    Rng rng(202);
    for (std::size_t n : kSizes) {
      auto a = random_doubles(rng, n);
      auto b = random_doubles(rng, n);
      const double tol = 1e-12 * (1.0 + static_cast<double>(n));

      CHECK(std::abs(backend->dot(a.data(), b.data(), n) - scalar.dot(a.data(), b.data(), n)) <= tol);

      auto y1 = b, y2 = b;
      backend->axpy(0.37, a.data(), y1.data(), n);
      scalar.axpy(0.37, a.data(), y2.data(), n);
      for (std::size_t i = 0; i < n; ++i) CHECK(y1[i] == doctest::Approx(y2[i]).epsilon(1e-14));

      auto x1 = a, x2 = a;
      backend->scale(x1.data(), n, 0.93);
      scalar.scale(x2.data(), n, 0.93);
      CHECK(x1 == x2);  // scale is a per-element product, no reassociation
    }
  }
}

TEST_CASE("active backend can be forced and restored") {
  kernels::set_active_backend("scalar");
  CHECK(kernels::active_ops().name == "scalar");
  kernels::set_active_backend("auto");
  CHECK(kernels::active_ops().name == kernels::available_backends().back()->name);
  CHECK_THROWS_AS(kernels::set_active_backend("gpu"), Error);
}
