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

#include "rational.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace rescal {

namespace {
constexpr uint64_t kBase = uint64_t{1} << 32;
}  // namespace

Nat::Nat(uint64_t v) {
  while (v != 0) {
    limbs_.push_back(static_cast<uint32_t>(v & 0xffffffffu));
    v >>= 32;
  }
}

void Nat::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

uint64_t Nat::as_u64() const {
  assert(fits_u64());
  uint64_t v = 0;
  if (limbs_.size() > 1) v = uint64_t{limbs_[1]} << 32;
  if (!limbs_.empty()) v |= limbs_[0];
  return v;
}

int Nat::cmp(const Nat& a, const Nat& b) {
  if (a.limbs_.size() != b.limbs_.size())
    return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  for (size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
  }
  return 0;
}

Nat operator+(const Nat& a, const Nat& b) {
  Nat r;
  const size_t n = std::max(a.limbs_.size(), b.limbs_.size());
  r.limbs_.resize(n, 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < n; ++i) {
    uint64_t s = carry;
    if (i < a.limbs_.size()) s += a.limbs_[i];
    if (i < b.limbs_.size()) s += b.limbs_[i];
    r.limbs_[i] = static_cast<uint32_t>(s & 0xffffffffu);
    carry = s >> 32;
  }
  if (carry) r.limbs_.push_back(static_cast<uint32_t>(carry));
  return r;
}

Nat operator-(const Nat& a, const Nat& b) {
  assert(Nat::cmp(a, b) >= 0);
  Nat r;
  r.limbs_.resize(a.limbs_.size(), 0);
  int64_t borrow = 0;
  for (size_t i = 0; i < a.limbs_.size(); ++i) {
    int64_t d = int64_t{a.limbs_[i]} - borrow -
                (i < b.limbs_.size() ? int64_t{b.limbs_[i]} : 0);
    if (d < 0) {
      d += static_cast<int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    r.limbs_[i] = static_cast<uint32_t>(d);
  }
  r.trim();
  return r;
}

Nat operator*(const Nat& a, const Nat& b) {
  if (a.is_zero() || b.is_zero()) return Nat();
  Nat r;
  r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
  for (size_t i = 0; i < a.limbs_.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < b.limbs_.size(); ++j) {
      uint64_t cur = uint64_t{a.limbs_[i]} * b.limbs_[j] +
                     r.limbs_[i + j] + carry;
      r.limbs_[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    size_t k = i + b.limbs_.size();
    while (carry) {
      uint64_t cur = r.limbs_[k] + carry;
      r.limbs_[k] = static_cast<uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++k;
    }
  }
  r.trim();
  return r;
}

// Schoolbook long division, one 32-bit quotient digit at a time with a
// 64-bit estimate refined by correction steps.
void Nat::divmod(const Nat& a, const Nat& b, Nat* q, Nat* r) {
  if (b.is_zero()) throw std::domain_error("Nat: division by zero");
  if (cmp(a, b) < 0) {
    if (q) *q = Nat();
    if (r) *r = a;
    return;
  }
  if (b.limbs_.size() == 1) {
    const uint64_t d = b.limbs_[0];
    Nat quo;
    quo.limbs_.resize(a.limbs_.size(), 0);
    uint64_t rem = 0;
    for (size_t i = a.limbs_.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | a.limbs_[i];
      quo.limbs_[i] = static_cast<uint32_t>(cur / d);
      rem = cur % d;
    }
    quo.trim();
    if (q) *q = quo;
    if (r) *r = Nat(rem);
    return;
  }
  // Multi-limb divisor: repeated shift-and-subtract over bit positions.
  // Simple and robust; operands in this engine stay small.
  Nat rem;
  Nat quo;
  const size_t total_bits = a.limbs_.size() * 32;
  quo.limbs_.assign(a.limbs_.size(), 0);
  for (size_t bit = total_bits; bit-- > 0;) {
    // rem = rem * 2 + bit of a
    uint32_t carry = (a.limbs_[bit / 32] >> (bit % 32)) & 1u;
    for (size_t i = 0; i < rem.limbs_.size(); ++i) {
      uint32_t next = rem.limbs_[i] >> 31;
      rem.limbs_[i] = (rem.limbs_[i] << 1) | carry;
      carry = next;
    }
    if (carry) rem.limbs_.push_back(carry);
    if (cmp(rem, b) >= 0) {
      rem = rem - b;
      quo.limbs_[bit / 32] |= uint32_t{1} << (bit % 32);
    }
  }
  quo.trim();
  rem.trim();
  if (q) *q = quo;
  if (r) *r = rem;
}

Nat operator/(const Nat& a, const Nat& b) {
  Nat q;
  Nat::divmod(a, b, &q, nullptr);
  return q;
}

Nat operator%(const Nat& a, const Nat& b) {
  Nat r;
  Nat::divmod(a, b, nullptr, &r);
  return r;
}

Nat Nat::gcd(Nat a, Nat b) {
  while (!b.is_zero()) {
    Nat r = a % b;
    a = b;
    b = r;
  }
  return a;
}

Nat Nat::factorial(unsigned n) {
  Nat r{1};
  for (unsigned i = 2; i <= n; ++i) r *= Nat(i);
  return r;
}

Nat Nat::pow(const Nat& base, unsigned exp) {
  Nat r{1};
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

std::string Nat::to_string() const {
  if (is_zero()) return "0";
  Nat cur = *this;
  const Nat chunk{1000000000};
  std::string out;
  while (!cur.is_zero()) {
    Nat q, r;
    divmod(cur, chunk, &q, &r);
    uint64_t digits = r.is_zero() ? 0 : r.as_u64();
    std::string part = std::to_string(digits);
    if (!q.is_zero()) part = std::string(9 - part.size(), '0') + part;
    out = part + out;
    cur = q;
  }
  return out;
}

Nat Nat::from_decimal(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Nat: empty decimal string");
  Nat r;
  for (char c : s) {
    if (c < '0' || c > '9')
      throw std::invalid_argument("Nat: bad digit in decimal string");
    r = r * Nat(10) + Nat(static_cast<uint64_t>(c - '0'));
  }
  return r;
}

Coeff::Coeff(Nat num, Nat den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("Coeff: zero denominator");
  if (num_.is_zero()) {
    den_ = Nat(1);
    return;
  }
  Nat g = Nat::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

Coeff Coeff::infinity() {
  Coeff c;
  c.inf_ = true;
  return c;
}

Coeff Coeff::parse(const std::string& s) {
  if (s == "inf") return infinity();
  auto slash = s.find('/');
  if (slash == std::string::npos) return Coeff(Nat::from_decimal(s));
  return Coeff(Nat::from_decimal(s.substr(0, slash)),
               Nat::from_decimal(s.substr(slash + 1)));
}

Coeff operator+(const Coeff& a, const Coeff& b) {
  if (a.inf_ || b.inf_) return Coeff::infinity();
  return Coeff(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Coeff operator*(const Coeff& a, const Coeff& b) {
  if (a.is_zero() || b.is_zero()) return Coeff();
  if (a.inf_ || b.inf_) return Coeff::infinity();
  return Coeff(a.num_ * b.num_, a.den_ * b.den_);
}

Coeff operator/(const Coeff& a, const Coeff& b) {
  if (b.is_zero() || b.is_infinite())
    throw std::domain_error("Coeff: division by zero or infinity");
  if (a.inf_) return Coeff::infinity();
  return Coeff(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const Coeff& a, const Coeff& b) {
  if (a.inf_ != b.inf_) return false;
  if (a.inf_) return true;
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::string Coeff::to_string() const {
  if (inf_) return "inf";
  if (den_.is_one()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

}  // namespace rescal
