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

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace lesionsym {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational. Always normalized: den > 0 and gcd(|num|, den) == 1.
// The metric suite computes on these and rounds only when rendering.
class Rational {
 public:
  Rational() = default;
  Rational(long long v) : num_(v) {}  // NOLINT: implicit by design
  Rational(BigInt num, BigInt den);

  static Rational of(long long num, long long den) { return Rational(BigInt(num), BigInt(den)); }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;  // throws Error(InvalidArgument) on zero
  Rational operator-() const;

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }
  bool operator<=(const Rational& o) const { return num_ * o.den_ <= o.num_ * den_; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  double to_double() const;

  // Fixed-point decimal with `digits` places after the point, rounded
  // half-up (away from zero for negative values), e.g. (1/3).to_decimal(2)
  // == "0.33" and (1/200).to_decimal(2) == "0.01".
  std::string to_decimal(int digits) const;

 private:
  void normalize();

  BigInt num_{0};
  BigInt den_{1};
};

}  // namespace lesionsym
