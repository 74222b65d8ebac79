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

#include "lesionsym/rational.hpp"

#include "lesionsym/error.hpp"

namespace lesionsym {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::pow;

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) fail(Errc::InvalidArgument, "rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = gcd(abs(num_), den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const { return Rational(num_ * o.num_, den_ * o.den_); }

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) fail(Errc::InvalidArgument, "rational division by zero");
  return Rational(num_ * o.den_, den_ * o.num_);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

double Rational::to_double() const { return num_.convert_to<double>() / den_.convert_to<double>(); }

std::string Rational::to_decimal(int digits) const {
  if (digits < 0) fail(Errc::InvalidArgument, "negative digit count");
  const bool negative = num_ < 0;
  BigInt scaled = abs(num_) * pow(BigInt(10), static_cast<unsigned>(digits));
  BigInt q = scaled / den_;
  BigInt r = scaled % den_;
  if (2 * r >= den_) ++q;  // half rounds away from zero

  std::string body = q.str();
  if (digits > 0) {
    if (static_cast<int>(body.size()) <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
  }
  return negative && q != 0 ? "-" + body : body;
}

}  // namespace lesionsym
