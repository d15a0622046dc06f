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
#include "correspond.hpp"
#include "doctest.h"
#include "rewrite.hpp"
#include "test_support.hpp"

using namespace rescal;

TEST_CASE("identity term encodes to the two-event copycat shape") {
  Context empty;
  Term id = parse_term("\\x:o. x");
  Aug q = encode_term(empty, id);
  CHECK_NOTHROW(validate_augmentation(q));
  REQUIRE(q.size() == 2);
  // One question on the output, its answer on the argument.
  CHECK(canonicalize(q).pointed);
  int minus = -1, plus = -1;
  for (int e = 0; e < 2; ++e)
    (q.polarity(e) == Pol::Neg ? minus : plus) = e;
  REQUIRE(minus >= 0);
  REQUIRE(plus >= 0);
  CHECK(q.dparent[plus] == minus);
  // On |o -> o|: node 0 the root, node 1 the argument.
  CHECK(q.disp[minus] == Disp{Side::R, 0});
  CHECK(q.disp[plus] == Disp{Side::R, 1});
  // The lifting edge: answer statically under the question.
  CHECK(q.sparent[plus] == minus);
}

TEST_CASE("empty bag encodes to the empty augmentation") {
  Context empty;
  Aug q = encode_bag(empty, Bag(), parse_type("o -> o"));
  CHECK(q.empty());
  // And decodes back to the empty bag.
  CHECK(decode_bag(q, empty, parse_type("o -> o")).empty());
}

TEST_CASE("a nested worked example matches its hand-built augmentation") {
  // \f. f [\x.x, \x.x] [\y. f [] []] against its hand-built augmentation.
  Context empty;
  Term t = parse_term(
      "\\f:((o->o)->(o->o)->o). f [\\x:o.x, \\x:o.x] [\\y:o. f [] []]");
  Aug q = encode_term(empty, t);
  CHECK_NOTHROW(validate_augmentation(q));
  CHECK(q.size() == 8);  // 4 variable occurrences, 2 events each
  CHECK(var_occurrence_count(t) == 4);

  // Hand construction on |((o->o)->(o->o)->o)->o|; nodes in preorder:
  //   0 root-, 1 call+, 2 arg1-, 3 arg1's x+, 4 arg2-, 5 arg2's y+... wait:
  //   type tree: root o; child = result of the big argument; under it the
  //   two o->o arguments, each with one leaf.
  Arena a = Arena::of_type(parse_type("((o -> o) -> (o -> o) -> o) -> o"));
  REQUIRE(a.size() == 6);
  // Hand construction: the initial question, the call to f, the first argument
  // explored twice (each exploration answered by x), the second argument
  // explored once, answered by calling f again with unexplored arguments.
  Aug fig = empty_aug(make_iface(Arena::empty(), a));
  int q0 = fig.add(-1, -1, Disp{Side::R, 0});          // initial question
  int f1 = fig.add(q0, q0, Disp{Side::R, 1});          // call f
  int a1 = fig.add(f1, f1, Disp{Side::R, 2});          // open arg1 (copy 1)
  int x1 = fig.add(a1, a1, Disp{Side::R, 3});          // x answers
  int a2 = fig.add(f1, f1, Disp{Side::R, 2});          // open arg1 (copy 2)
  int x2 = fig.add(a2, a2, Disp{Side::R, 3});          // x answers
  int b1 = fig.add(f1, f1, Disp{Side::R, 4});          // open arg2
  fig.add(q0, b1, Disp{Side::R, 1});                   // inner call to f
  (void)x1;
  (void)x2;
  CHECK_NOTHROW(validate_augmentation(fig));
  CHECK(aug_key(fig) == aug_key(q));
  // And the bijection inverts it.
  Term back = decode_term(fig, empty, parse_type("((o->o)->(o->o)->o) -> o"));
  CHECK(back == t);
}

TEST_CASE("decode . encode = id on random normal terms") {
  testing::Rng rng(21);
  auto corpus = testing::make_corpus(120, 31415);
  int checked = 0;
  for (const auto& item : corpus) {
    TermSum nf = normalize(item.term);
    for (const auto& [u, c] : nf.entries()) {
      Aug q = encode_term(item.ctx, u);
      CHECK_NOTHROW(validate_augmentation(q));
      CHECK(canonicalize(q).pointed);
      Term back = decode_term(q, item.ctx, item.type);
      CHECK(back == u);
      // Size correspondence: two events per variable occurrence.
      CHECK(q.size() == 2 * var_occurrence_count(u));
      ++checked;
      if (checked > 150) return;
    }
  }
  CHECK(checked > 40);
}

TEST_CASE("alpha-representatives encode to the same key") {
  Context ctx = Context::parse("h:o -> o -> o");
  Term t1 = parse_term("\\x:o. \\y:o. h [x] [y]");
  Term t2 = parse_term("\\y:o. \\x:o. h [y] [x]");
  CHECK(encode_term_canonical(ctx, t1).key == encode_term_canonical(ctx, t2).key);
}

TEST_CASE("bag encodings: one initial event per element") {
  Context ctx = Context::parse("u:o");
  Bag b({parse_term("\\x:o. u"), parse_term("\\x:o. x"), parse_term("\\x:o. x")});
  Aug q = encode_bag(ctx, b, parse_type("o -> o"));
  CHECK_NOTHROW(validate_augmentation(q));
  int roots = 0;
  for (int e = 0; e < q.size(); ++e)
    if (q.dparent[e] < 0) ++roots;
  CHECK(roots == 3);
  // Round trip (as multisets).
  CHECK(decode_bag(q, ctx, parse_type("o -> o")) == b);
}

TEST_CASE("sequences round trip with component tagging") {
  Context ctx = Context::parse("u:o, g:o -> o");
  std::vector<Type> types = {parse_type("o"), parse_type("o -> o")};
  Seq s(std::vector<Bag>{Bag({parse_term("u"), parse_term("g [u]")}),
                         Bag({parse_term("\\x:o. g [x]")})});
  Aug q = encode_seq(ctx, s, types);
  CHECK_NOTHROW(validate_augmentation(q));
  CHECK(decode_seq(q, ctx, types) == s);
}

TEST_CASE("exhaustive bijection on small pointed augmentations") {
  // Both directions of the bijection over every valid pointed augmentation
  // with few events on |Gamma| |- |o|.
  Context ctx = Context::parse("f:(o -> o) -> o, u:o");
  IfacePtr iface = make_iface(Arena::of_context(ctx), Arena::atom());
  auto all = testing::enumerate_augs(iface, 8, true);
  CHECK(all.size() > 10);
  for (const auto& c : all) {
    Term t = decode_term(c.rep, ctx, Type::base());
    CHECK(is_normal(t));
    CHECK(typecheck_term(ctx, t) == Type::base());
    CHECK(encode_term_canonical(ctx, t).key == c.key);
  }
  // Injectivity on the term side over the same family: distinct keys give
  // distinct terms because decode is a function; distinct normal terms of
  // this family give distinct keys because encode inverts them above.
}

TEST_CASE("the two exhaustive enumerations agree through the bijection") {
  // Counting both sides independently: pointed augmentation classes with at
  // most 2k events must be exactly the normal terms with at most k variable
  // occurrences (each occurrence contributes a question/answer pair).
  Context ctx = Context::parse("f:(o -> o) -> o, u:o");
  IfacePtr iface = make_iface(Arena::of_context(ctx), Arena::atom());
  auto classes = testing::enumerate_augs(iface, 8, true);

  // Every element of an argument bag has at least one occurrence, so a
  // term with k occurrences has size (occurrences plus abstractions) at
  // most 2k; enumerating by size 2k and filtering by occurrences is
  // exhaustive for occurrence budget k.
  int terms = 0;
  for (const Term& t : testing::enumerate_normal_terms(ctx, Type::base(), 8)) {
    if (2 * var_occurrence_count(t) <= 8) ++terms;
  }
  CHECK(static_cast<int>(classes.size()) == terms);
  CHECK(terms > 10);
}

TEST_CASE("decode rejects malformed augmentations") {
  Context ctx = Context::parse("u:o");
  IfacePtr iface = make_iface(Arena::of_context(ctx), Arena::atom());
  // Two initial events: not pointed, not a term.
  Aug q = empty_aug(iface);
  int m1 = q.add(-1, -1, Disp{Side::R, 0});
  q.add(-1, m1, Disp{Side::L, 0});
  int m2 = q.add(-1, -1, Disp{Side::R, 0});
  q.add(-1, m2, Disp{Side::L, 0});
  CHECK_NOTHROW(validate_augmentation(q));
  CHECK_THROWS_AS(decode_term(q, ctx, Type::base()), DecodeError);
  // But it is a fine 2-element bag.
  Bag b = decode_bag(q, ctx, Type::base());
  CHECK(b.size() == 2);
}
