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
#include "interp.hpp"
#include "test_support.hpp"

using namespace rescal;

namespace {
Arena arena_of(const std::string& t) { return Arena::of_type(parse_type(t)); }
}  // namespace

TEST_CASE("normal terms interpret as their encoding with coefficient 1") {
  Context empty;
  for (const char* s :
       {"\\x:o. x", "\\f:o -> o. \\x:o. f [x]",
        "\\f:(o->o)->(o->o)->o. f [\\x:o.x, \\x:o.x] [\\y:o. f [] []]"}) {
    Term t = parse_term(s);
    Strategy sem = interpret_term(empty, t);
    REQUIRE(sem.support_size() == 1);
    CanonAug enc = encode_term_canonical(empty, t);
    CHECK(sem.at(enc.key).is_one());
  }
}

TEST_CASE("a singleton redex interprets like its contractum") {
  Context ctx = Context::parse("y:o");
  Strategy lhs = interpret_term(ctx, parse_term("(\\x:o. x) [y]"));
  Strategy rhs = interpret_term(ctx, parse_term("y"));
  CHECK(lhs == rhs);
}

TEST_CASE("the two-summand redex interprets as two classes of weight 1") {
  Context ctx = Context::parse("f:o -> o -> o, y:o, z:o");
  Term t = parse_term("(\\x:o. f [x] [x]) [y, z]");
  Strategy sem = interpret_term(ctx, t);
  REQUIRE(sem.support_size() == 2);
  CHECK(sem.at(encode_term_canonical(ctx, parse_term("f [y] [z]")).key).is_one());
  CHECK(sem.at(encode_term_canonical(ctx, parse_term("f [z] [y]")).key).is_one());
}

TEST_CASE("annihilation: empty bag against one occurrence gives zero") {
  Context ctx = Context::parse("u:o");
  CHECK(interpret_term(ctx, parse_term("(\\x:o. x) []")).is_zero());
  // Nonempty bag into a term not using the variable also vanishes.
  CHECK(interpret_term(ctx, parse_term("(\\x:o. u) [u]")).is_zero());
  // Empty bag into a term not using the variable is the term.
  CHECK(interpret_term(ctx, parse_term("(\\x:o. u) []")) ==
        interpret_term(ctx, parse_term("u")));
}

TEST_CASE("duplicate resources yield coefficient 2") {
  Context ctx = Context::parse("f:o -> o -> o, y:o");
  Term t = parse_term("(\\x:o. f [x] [x]) [y, y]");
  Strategy sem = interpret_term(ctx, t);
  REQUIRE(sem.support_size() == 1);
  CHECK(sem.at(encode_term_canonical(ctx, parse_term("f [y] [y]")).key) ==
        Coeff(2));
}

TEST_CASE("interpretations are pointed") {
  testing::Rng rng(61);
  auto corpus = testing::make_corpus(24, 777);
  for (const auto& item : corpus) {
    Strategy sem = interpret_term(item.ctx, item.term);
    StructuralKernel pid =
        StructuralKernel::pointed_identity(sem.iface()->right);
    CHECK(apply_kernel(pid, sem, Side::R) == sem);
  }
}

TEST_CASE("normal-form correspondence on a mixed corpus") {
  auto corpus = testing::make_corpus(80, 4242);
  int zeros = 0, bigger = 0;
  for (const auto& item : corpus) {
    Report r = check_normal_form_correspondence(item.ctx, item.term);
    if (!r.ok()) {
      CAPTURE(print_term(item.term));
      CAPTURE(r.mismatches[0].key);
      CAPTURE(r.mismatches[0].lhs.to_string());
      CAPTURE(r.mismatches[0].rhs.to_string());
      FAIL_CHECK("normal-form correspondence failed");
      break;
    }
    TermSum nf = normalize(item.term);
    if (nf.is_zero()) ++zeros;
    for (const auto& [u, c] : nf.entries())
      if (c > Nat(1)) {
        ++bigger;
        break;
      }
  }
  CHECK(zeros > 0);
  CHECK(bigger > 0);
}

TEST_CASE("invariance under one-step reduction") {
  auto corpus = testing::make_corpus(20, 555);
  for (const auto& item : corpus) {
    Report r = check_invariance(item.ctx, TermSum::of(item.term), item.type);
    CHECK(r.ok());
    if (!r.ok()) break;
  }
}

TEST_CASE("semantic substitution matches syntactic substitution") {
  testing::Rng rng(67);
  Context gamma = testing::corpus_context();
  const Type b = parse_type("o");
  Context delta = gamma.extended("x", b);
  int nonzero = 0;
  for (int i = 0; i < 25; ++i) {
    Term s = testing::random_typed_term(delta, parse_type("o -> o"), rng);
    int occ = testing::count_free_occurrences(s, "x");
    if (occ > 3) continue;
    // A bag of the right size, plus sometimes a deliberately wrong size.
    std::vector<Term> elems;
    for (int j = 0; j < occ; ++j)
      elems.push_back(testing::random_typed_term(gamma, b, rng));
    Bag bag(elems);

    Strategy f = interpret_term(delta, s);
    SemBag g = interpret_bag(gamma, bag, b);
    Strategy lhs = semantic_substitute(f, gamma, b, g);
    Strategy rhs = interpret_sum(gamma, substitute_term(s, "x", bag),
                                 parse_type("o -> o"));
    CHECK(lhs == rhs);
    if (!lhs.is_zero()) ++nonzero;

    // Wrong-size bag annihilates on both routes.
    std::vector<Term> extra = elems;
    extra.push_back(testing::random_typed_term(gamma, b, rng));
    Strategy lhs2 =
        semantic_substitute(f, gamma, b, interpret_bag(gamma, Bag(extra), b));
    Strategy rhs2 = interpret_sum(gamma, substitute_term(s, "x", Bag(extra)),
                                  parse_type("o -> o"));
    CHECK(lhs2 == rhs2);
  }
  CHECK(nonzero > 3);
}

TEST_CASE("substituting into a term that ignores the variable") {
  Context gamma = Context::parse("u:o");
  Context delta = gamma.extended("x", parse_type("o"));
  Term s = parse_term("u");
  Strategy f = interpret_term(delta, s);
  // Empty bag: the term itself.
  CHECK(semantic_substitute(f, gamma, parse_type("o"), {}) ==
        interpret_term(gamma, s));
  // Nonempty bag: zero.
  SemBag one = {interpret_term(gamma, parse_term("u"))};
  CHECK(semantic_substitute(f, gamma, parse_type("o"), one).is_zero());
}

TEST_CASE("pairing of projections is the identity (windowed)") {
  // <pi1, pi2> over a two-entry context equals the identity kernel.
  Context ctx = Context::parse("u:o, g:o -> o");
  StructuralKernel p1 = var_projection(ctx, 0);
  StructuralKernel p2 = var_projection(ctx, 1);
  Arena gamma = Arena::of_context(ctx);
  const int window = 4;
  Strategy pi1 = p1.materialize(window);
  Strategy pi2 = p2.materialize(window);
  Expr paired = Expr::compose(
      Expr::tensor(Expr::fin(pi1), Expr::fin(pi2)),
      Expr::kern(StructuralKernel::delta(gamma)));
  Expr id = Expr::kern(StructuralKernel::identity(gamma));
  WindowReport r = windowed_equal(paired, id, window);
  CAPTURE(r.counterexample_key);
  CAPTURE(r.lhs.to_string());
  CAPTURE(r.rhs.to_string());
  CHECK(r.equal);
}

TEST_CASE("application clause agrees with the evaluation-morphism route") {
  // ev . <|t|, Pi |b|> with a materialized ev must match the lazy
  // uncurried form used by the interpreter.
  Context ctx = Context::parse("g:o -> o, y:o");
  Arena gamma = Arena::of_context(ctx);
  for (const char* s :
       {"(\\x:o. g [x]) [y]", "(\\x:o. g [x]) []", "(\\x:o. y) [g [y]]"}) {
    Term t = parse_term(s);
    Strategy direct = interpret_term(ctx, t);

    const Term fun = t.app_fun();
    const Type fun_type = typecheck_term(ctx, fun);
    Arena spine = Arena::of_type(fun_type);
    Arena dom = Arena::of_type(fun_type.domain());
    Arena cod = Arena::of_type(fun_type.codomain());
    Strategy f = interpret_term(ctx, fun);
    Strategy product = big_product(make_iface(gamma, dom),
                                   interpret_bag(ctx, t.app_arg(),
                                                 fun_type.domain()));
    const int window = 8;
    Strategy ev(make_iface(Arena::tensor({spine, dom}), cod));
    for (const Configuration& y : enumerate_positions(spine, window)) {
      Aug cc = copycat(spine, y);
      ev.add(uncurry_aug(cc, spine, dom, cod), Coeff(Nat(1), sym_count(y)));
    }
    Strategy via_ev = compose(ev, pairing(f, product));
    CHECK(via_ev == direct);
  }
}

TEST_CASE("variable clause agrees with the evaluation-morphism route") {
  // |x <bags>| computed by head lifting must match
  // ev . <pid . var_x, pack(...)> with ev materialized at a window.
  Context ctx = Context::parse("g:o -> o, u:o");
  for (const char* s : {"g [u]", "g []", "g [g [u]]", "u"}) {
    Term t = parse_term(s);
    Strategy direct = interpret_term(ctx, t);

    const int i = ctx.index_of(t.var_name());
    const Type& head_type = ctx[i].type;
    Arena gamma = Arena::of_context(ctx);
    Arena spine = Arena::of_type(head_type);  // == of_domains => o
    Arena dom = Arena::of_domains(head_type);
    // pid . var_x, materialized.
    const int window = 8;
    Strategy varx = var_projection(ctx, i).materialize(window);
    Strategy pidvar =
        apply_kernel(StructuralKernel::pointed_identity(spine), varx, Side::R);
    // pack of the interpreted argument sequence.
    std::vector<Arena> rights;
    for (const Type& d : head_type.domains()) rights.push_back(Arena::of_type(d));
    Strategy packed =
        pack(gamma, rights, interpret_seq(ctx, t.var_args(), head_type.domains()));
    // ev = uncurry of the identity on the spine, materialized.
    Strategy ev(make_iface(Arena::tensor({spine, dom}), Arena::atom()));
    for (const Configuration& y : enumerate_positions(spine, window)) {
      Aug cc = copycat(spine, y);
      ev.add(uncurry_aug(cc, spine, dom, Arena::atom()),
             Coeff(Nat(1), sym_count(y)));
    }
    Strategy pairs = pairing(pidvar, packed);
    Strategy via_ev = compose(ev, pairs);
    CHECK(via_ev == direct);
  }
}
