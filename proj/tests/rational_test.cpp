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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "rational.hpp"

using namespace rescal;

TEST_CASE("nat arithmetic agrees with uint64 on small values") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    uint64_t a = rng() % 1000000007ull;
    uint64_t b = rng() % 1000000007ull + 1;
    CHECK((Nat(a) + Nat(b)).to_string() == std::to_string(a + b));
    CHECK((Nat(a) * Nat(b)).to_string() == std::to_string(a * b));
    CHECK((Nat(a) / Nat(b)).to_string() == std::to_string(a / b));
    CHECK((Nat(a) % Nat(b)).to_string() == std::to_string(a % b));
    CHECK(Nat::gcd(Nat(a), Nat(b)).to_string() ==
          std::to_string(std::gcd(a, b)));
  }
}

TEST_CASE("nat big values") {
  Nat f = Nat::factorial(30);
  CHECK(f.to_string() == "265252859812191058636308480000000");
  Nat p = Nat::pow(Nat(2), 100);
  CHECK(p.to_string() == "1267650600228229401496703205376");
  CHECK(p / Nat::pow(Nat(2), 50) == Nat::pow(Nat(2), 50));
  CHECK(Nat::from_decimal(f.to_string()) == f);
  CHECK(f - (f - Nat(12345)) == Nat(12345));
}

TEST_CASE("coefficients reduce and satisfy semiring identities") {
  Coeff half(Nat(1), Nat(2));
  Coeff third(Nat(1), Nat(3));
  CHECK((half + third).to_string() == "5/6");
  CHECK((half * third).to_string() == "1/6");
  CHECK(Coeff(Nat(6), Nat(4)).to_string() == "3/2");
  CHECK(Coeff::parse("7/21").to_string() == "1/3");
  CHECK(Coeff::parse("5").to_string() == "5");

  Coeff inf = Coeff::infinity();
  CHECK((inf + half).is_infinite());
  CHECK((Coeff(0) * inf).is_zero());
  CHECK((half * inf).is_infinite());
  CHECK(Coeff::parse("inf") == inf);

  // 1/|Sym| cancellation pattern: n! * (1/n!) == 1.
  for (unsigned n = 0; n <= 8; ++n) {
    Coeff c(Nat(1), Nat::factorial(n));
    CHECK((c * Coeff(Nat::factorial(n))).is_one());
  }
}
