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
#include "doctest.h"
#include "rewrite.hpp"
#include "test_support.hpp"
#include "typing.hpp"

using namespace rescal;

TEST_CASE("partitionings: counts and contents") {
  // ([], 2): the single empty assignment.
  auto p0 = enumerate_partitionings(Bag(), 2);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0][0].empty());
  CHECK(p0[0][1].empty());

  // ([y,z], 2): all four assignment functions.
  Bag yz({parse_term("y"), parse_term("z")});
  auto p1 = enumerate_partitionings(yz, 2);
  REQUIRE(p1.size() == 4);
  int full_left = 0, full_right = 0, split = 0;
  for (auto& t : p1) {
    if (t[0].size() == 2) ++full_left;
    if (t[1].size() == 2) ++full_right;
    if (t[0].size() == 1) ++split;
  }
  CHECK(full_left == 1);
  CHECK(full_right == 1);
  CHECK(split == 2);

  // ([y,y], 2): assignments on indices, not values: ([y],[y]) appears twice.
  Bag yy({parse_term("y"), parse_term("y")});
  auto p2 = enumerate_partitionings(yy, 2);
  REQUIRE(p2.size() == 4);
  int singleton_pairs = 0;
  for (auto& t : p2)
    if (t[0].size() == 1 && t[1].size() == 1) ++singleton_pairs;
  CHECK(singleton_pairs == 2);

  // k^n in general.
  Bag three({parse_term("a"), parse_term("b"), parse_term("c")});
  CHECK(enumerate_partitionings(three, 3).size() == 27);
}

TEST_CASE("substitution base cases") {
  FreshNames fresh;
  // y{[]/x} = y when y != x
  TermSum r1 = substitute_term(parse_term("y"), "x", Bag());
  CHECK(r1 == TermSum::of(parse_term("y")));
  // x{[]/x} = 0
  CHECK(substitute_term(parse_term("x"), "x", Bag()).is_zero());
  // x{[s]/x} = s
  CHECK(substitute_term(parse_term("x"), "x", Bag({parse_term("\\u:o. u")})) ==
        TermSum::of(parse_term("\\u:o. u")));
  // y{[s]/x} = 0 (resource left over)
  CHECK(substitute_term(parse_term("y"), "x", Bag({parse_term("z")})).is_zero());
}

TEST_CASE("substituting two resources into two occurrences crosses them") {
  // (\f. f [x] [x]){[y,z]/x} = \f. f [y] [z] + \f. f [z] [y]
  Term t = parse_term("\\f:o -> o -> o. f [x] [x]");
  Bag b({parse_term("y"), parse_term("z")});
  TermSum r = substitute_term(t, "x", b);
  TermSum expected;
  expected.add(parse_term("\\f:o -> o -> o. f [y] [z]"), Nat(1));
  expected.add(parse_term("\\f:o -> o -> o. f [z] [y]"), Nat(1));
  CHECK(r == expected);
}

TEST_CASE("starvation: fewer resources than occurrences gives zero") {
  Term t = parse_term("\\f:o -> o -> o. f [x] [x]");
  CHECK(substitute_term(t, "x", Bag({parse_term("y")})).is_zero());
  CHECK(substitute_term(t, "x", Bag()).is_zero());
}

TEST_CASE("substitution agrees with the occurrence-assignment oracle") {
  testing::Rng rng(77);
  Context ctx = testing::corpus_context();
  Context ctx_x = ctx.extended("x", Type::base());
  int nonzero = 0;
  for (int i = 0; i < 150; ++i) {
    Term t = testing::random_typed_term(ctx_x, parse_type("o -> o"), rng);
    // Substitute a bag of exactly the occurrence count, with fresh free
    // variables so capture cannot arise and summands stay distinguishable.
    int n = testing::count_free_occurrences(t, "x");
    if (n > 4) continue;
    std::vector<Term> elems;
    for (int j = 0; j < n; ++j)
      elems.push_back(Term::var("w" + std::to_string(j % 2)));
    Bag b(std::move(elems));
    TermSum got = substitute_term(t, "x", b);
    TermSum want = testing::oracle_substitute(t, "x", b);
    CHECK(got == want);
    if (!got.is_zero()) ++nonzero;

    // A bag of the wrong size annihilates; oracle agrees by definition.
    std::vector<Term> wrong(n + 1, Term::var("w9"));
    CHECK(substitute_term(t, "x", Bag(std::move(wrong))).is_zero());
  }
  CHECK(nonzero > 30);
}

TEST_CASE("linear occurrences times distinct resources give n! summands") {
  // x occurs 3 times linearly; |b| = 3 distinct => 3! = 6 summands.
  Term t = parse_term("\\f:o -> o -> o -> o. f [x] [x] [x]");
  Bag b({parse_term("a"), parse_term("b"), parse_term("c")});
  TermSum r = substitute_term(t, "x", b);
  CHECK(r.summand_count() == 6);
  for (const auto& [u, c] : r.entries()) CHECK(c == Nat(1));
}

TEST_CASE("reduce_step basics") {
  // (\x:o. x)[y] -> y
  auto r = reduce_step(parse_term("(\\x:o. x) [y]"));
  REQUIRE(r.has_value());
  CHECK(*r == TermSum::of(parse_term("y")));
  // Normal terms have no redex.
  CHECK(!reduce_step(parse_term("\\x:o. x")).has_value());
  CHECK(!reduce_step(parse_term("f [\\x:o. x]")).has_value());
  // (\x:o. f [x] [x])[y, z] -> f [y] [z] + f [z] [y]
  auto r2 = reduce_step(parse_term("(\\x:o. f [x] [x]) [y, z]"));
  REQUIRE(r2.has_value());
  TermSum expected;
  expected.add(parse_term("f [y] [z]"), Nat(1));
  expected.add(parse_term("f [z] [y]"), Nat(1));
  CHECK(*r2 == expected);
}

TEST_CASE("normalize basics") {
  // Normal sum: fixed point, coefficients preserved.
  TermSum s = TermSum::of(parse_term("\\x:o. x"), Nat(3));
  CHECK(normalize(s) == s);
  // (\x:o. x)[] -> 0
  CHECK(normalize(parse_term("(\\x:o. x) []")).is_zero());
  // The 3! example, end to end.
  TermSum r = normalize(
      parse_term("(\\x:o. f' [x] [x] [x]) [a, b, c]"));
  CHECK(r.summand_count() == 6);
  for (const auto& [u, c] : r.entries()) CHECK(c == Nat(1));
}

TEST_CASE("nested redexes and capture avoidance") {
  // Substituting an open term under a binder of the same name must rename.
  Term t = parse_term("(\\x:o. \\y:o. h [x] [y]) [y]");
  TermSum r = normalize(t);
  REQUIRE(r.summand_count() == 1);
  const Term& u = r.entries().begin()->first;
  // Result must be alpha-equal to \z:o. h [y] [z], NOT \y:o. h [y] [y].
  CHECK(u == parse_term("\\z:o. h [y] [z]"));
  CHECK(u != parse_term("\\z:o. h [z] [z]"));
}

TEST_CASE("confluence: two reduction orders agree on random terms") {
  auto corpus = testing::make_corpus(100, 2024);
  for (const auto& item : corpus) {
    TermSum lo = normalize(item.term, kDefaultFuel,
                           RedexOrder::LeftmostOutermost);
    TermSum ri = normalize(item.term, kDefaultFuel,
                           RedexOrder::RightmostInnermost);
    CHECK(lo == ri);
    CHECK(is_normal_sum(lo));
  }
}

TEST_CASE("normalize of every corpus summand is normal and typed") {
  auto corpus = testing::make_corpus(60, 99);
  for (const auto& item : corpus) {
    TermSum nf = normalize(item.term);
    typecheck_sum(item.ctx, nf, item.type);
    CHECK(is_normal_sum(nf));
  }
}
