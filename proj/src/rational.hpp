// Copyright 2026 The rescal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RESCAL_RATIONAL_HPP_
#define RESCAL_RATIONAL_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace rescal {

// Arbitrary-precision natural number, little-endian base 2^32 limbs.
// Substitution coefficients grow factorially, so fixed-width integers are
// not an option for the sum aggregation.
class Nat {
 public:
  Nat() = default;
  Nat(uint64_t v);  // NOLINT(runtime/explicit): numeric literals are handy
  static Nat from_decimal(const std::string& s);

  bool is_zero() const { return limbs_.empty(); }
  bool is_one() const { return limbs_.size() == 1 && limbs_[0] == 1; }
  bool fits_u64() const { return limbs_.size() <= 2; }
  uint64_t as_u64() const;  // precondition: fits_u64()

  friend Nat operator+(const Nat& a, const Nat& b);
  friend Nat operator-(const Nat& a, const Nat& b);  // precondition: a >= b
  friend Nat operator*(const Nat& a, const Nat& b);
  Nat& operator+=(const Nat& b) { return *this = *this + b; }
  Nat& operator*=(const Nat& b) { return *this = *this * b; }

  // Quotient and remainder; divisor must be nonzero.
  static void divmod(const Nat& a, const Nat& b, Nat* q, Nat* r);
  friend Nat operator/(const Nat& a, const Nat& b);
  friend Nat operator%(const Nat& a, const Nat& b);

  static Nat gcd(Nat a, Nat b);
  static Nat factorial(unsigned n);
  static Nat pow(const Nat& base, unsigned exp);

  static int cmp(const Nat& a, const Nat& b);
  friend bool operator==(const Nat& a, const Nat& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const Nat& a, const Nat& b) { return cmp(a, b) != 0; }
  friend bool operator<(const Nat& a, const Nat& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const Nat& a, const Nat& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const Nat& a, const Nat& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const Nat& a, const Nat& b) { return cmp(a, b) >= 0; }

  std::string to_string() const;  // decimal

 private:
  void trim();
  std::vector<uint32_t> limbs_;  // empty means 0
};

// Exact nonnegative rational extended with a single absorbing infinity.
// Arithmetic follows the completed half-line: q + inf = inf, 0 * inf = 0,
// q * inf = inf for q != 0.
class Coeff {
 public:
  Coeff() : num_(0), den_(1) {}
  Coeff(uint64_t n) : num_(n), den_(1) {}  // NOLINT(runtime/explicit)
  Coeff(Nat n) : num_(std::move(n)), den_(1) {}  // NOLINT(runtime/explicit)
  Coeff(Nat num, Nat den);  // reduces; den must be nonzero
  static Coeff infinity();
  // Parses "p", "p/q" or "inf".
  static Coeff parse(const std::string& s);

  bool is_zero() const { return !inf_ && num_.is_zero(); }
  bool is_one() const { return !inf_ && num_.is_one() && den_.is_one(); }
  bool is_infinite() const { return inf_; }
  const Nat& num() const { return num_; }
  const Nat& den() const { return den_; }

  friend Coeff operator+(const Coeff& a, const Coeff& b);
  friend Coeff operator*(const Coeff& a, const Coeff& b);
  Coeff& operator+=(const Coeff& b) { return *this = *this + b; }
  Coeff& operator*=(const Coeff& b) { return *this = *this * b; }
  // Division by a finite nonzero rational.
  friend Coeff operator/(const Coeff& a, const Coeff& b);

  friend bool operator==(const Coeff& a, const Coeff& b);
  friend bool operator!=(const Coeff& a, const Coeff& b) { return !(a == b); }

  std::string to_string() const;  // "p", "p/q" or "inf"

 private:
  bool inf_ = false;
  Nat num_;
  Nat den_;  // always >= 1 when finite, reduced with num_
};

}  // namespace rescal

#endif  // RESCAL_RATIONAL_HPP_
