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
#include "syntax.hpp"
#include "test_support.hpp"

using namespace rescal;

TEST_CASE("types parse, print and decompose as a spine") {
  Type t = parse_type("((o -> o) -> (o -> o) -> o) -> o");
  CHECK(t.to_string() == "((o -> o) -> (o -> o) -> o) -> o");
  CHECK(t.arity() == 1);
  CHECK(t.domain().arity() == 2);
  CHECK(t.atom_count() == 6);
  CHECK(parse_type("o -> o -> o") == parse_type("o -> (o -> o)"));
  CHECK(parse_type(t.to_string()) == t);
  // Unique spine decomposition.
  Type u = parse_type("o -> (o -> o) -> o");
  CHECK(u.domains().size() == 2);
  CHECK(u.domains()[0].is_base());
  CHECK(u.domains()[1] == parse_type("o -> o"));
}

TEST_CASE("identity term parses to the expected tree") {
  Term t = parse_term("\\x:o. x");
  REQUIRE(t.is_abs());
  CHECK(t.abs_binder() == "x");
  CHECK(t.abs_binder_type().is_base());
  REQUIRE(t.abs_body().is_var());
  CHECK(t.abs_body().var_name() == "x");
  CHECK(t.abs_body().var_args().empty());
}

TEST_CASE("variable application absorbs the maximal bag sequence") {
  Term t = parse_term("f [x, y] [z]");
  REQUIRE(t.is_var());
  CHECK(t.var_args().size() == 2);
  CHECK(t.var_args().items()[0].size() == 2);
  CHECK(t.var_args().items()[1].size() == 1);

  Term u = parse_term("(f [x, y]) [z]");
  REQUIRE(u.is_app());
  REQUIRE(u.app_fun().is_var());
  CHECK(u.app_fun().var_args().size() == 1);
}

TEST_CASE("the running example term parses") {
  Term t = parse_term(
      "\\f:((o->o)->(o->o)->o). f [\\x:o.x, \\x:o.x] [\\y:o. f [] []]");
  REQUIRE(t.is_abs());
  const Term& body = t.abs_body();
  REQUIRE(body.is_var());
  CHECK(body.var_name() == "f");
  CHECK(body.var_args().size() == 2);
  CHECK(body.var_args().items()[0].size() == 2);
  CHECK(body.var_args().items()[1].size() == 1);
}

TEST_CASE("judgments accept both turnstile spellings") {
  std::vector<std::pair<std::string, Type>> ctx;
  Term t = Term::var("_");
  parse_judgment("x:o |- x", &ctx, &t);
  REQUIRE(ctx.size() == 1);
  CHECK(t.var_name() == "x");
  parse_judgment("y:o ⊢ y", &ctx, &t);  // the turnstile glyph
  REQUIRE(ctx.size() == 1);
  CHECK(ctx[0].first == "y");
  CHECK(t.var_name() == "y");
  parse_judgment("\\z:o. z", &ctx, &t);  // bare term clears the context
  CHECK(ctx.empty());
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_term("x [y z"), ParseError);
  CHECK_THROWS_AS(parse_term("\\x. x"), ParseError);  // missing annotation
  CHECK_THROWS_AS(parse_term(""), ParseError);
  CHECK_THROWS_AS(parse_type("o -> "), ParseError);
  try {
    parse_term("x [y z");
  } catch (const ParseError& e) {
    CHECK(e.position == 5);
  }
}

TEST_CASE("bag equality ignores construction order") {
  Term a = parse_term("x");
  Term b = parse_term("\\u:o. u");
  Bag b1({a, b});
  Bag b2({b, a});
  CHECK(b1 == b2);
  CHECK(print_bag(b1) == print_bag(b2));
  CHECK(Bag({a, a}) != Bag({a, b}));
  CHECK(print_bag(Bag()) == "[]");
}

TEST_CASE("alpha-equivalence: binder names are irrelevant") {
  CHECK(parse_term("\\x:o. x") == parse_term("\\y:o. y"));
  CHECK(parse_term("\\x:o. \\y:o. x") != parse_term("\\x:o. \\y:o. y"));
  CHECK(parse_term("\\x:o. z") == parse_term("\\w:o. z"));
  CHECK(parse_term("\\x:o. z") != parse_term("\\x:o. w"));
  // Bags sort the same regardless of alpha-renaming of the environment.
  Term t1 = parse_term("\\x:o. \\y:o. h [x, y]");
  Term t2 = parse_term("\\y:o. \\x:o. h [y, x]");
  CHECK(t1 == t2);
}

TEST_CASE("round trip: parse . print = id on random terms") {
  testing::Rng rng(42);
  Context ctx = testing::corpus_context();
  for (int i = 0; i < 200; ++i) {
    Term t = testing::random_typed_term(ctx, parse_type("(o -> o) -> o"), rng);
    Term back = parse_term(print_term(t));
    CHECK(back == t);
  }
}

TEST_CASE("term sums form a commutative monoid") {
  testing::Rng rng(43);
  Context ctx = testing::corpus_context();
  auto randsum = [&] {
    TermSum s;
    int k = static_cast<int>(rng() % 4);
    for (int i = 0; i < k; ++i)
      s.add(testing::random_typed_term(ctx, Type::base(), rng),
            Nat(1 + rng() % 3));
    return s;
  };
  for (int i = 0; i < 100; ++i) {
    TermSum a = randsum(), b = randsum(), c = randsum();
    CHECK(sum_add(a, b) == sum_add(b, a));
    CHECK(sum_add(sum_add(a, b), c) == sum_add(a, sum_add(b, c)));
    CHECK(sum_add(a, TermSum::zero()) == a);
  }
  // (s + t) + t = s + 2t
  Term s = parse_term("u");
  Term t = parse_term("g [u]");
  TermSum st = sum_add(TermSum::of(s), TermSum::of(t));
  TermSum r = sum_add(st, TermSum::of(t));
  CHECK(r.entries().at(t) == Nat(2));
  CHECK(print_term_sum(r) == "2 * g [u] + u");
}
