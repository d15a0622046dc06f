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

#include "termgen.hpp"

namespace rescal {

namespace {

struct TermGen {
  TermRng& rng;
  const TermGenOptions& opts;
  int fresh = 0;

  double coin() { return std::uniform_real_distribution<double>(0, 1)(rng); }
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

  std::string fresh_name() { return "a" + std::to_string(fresh++); }

  Type random_small_type() {
    static const char* menu[] = {"o", "o -> o", "o -> o -> o", "(o -> o) -> o"};
    return parse_type(menu[pick(4)]);
  }

  int bag_size(int budget) {
    if (budget <= 0 || coin() < opts.empty_bag_bias) return 0;
    double r = coin();
    if (r < 0.55) return 1;
    if (r < 0.9) return 2;
    return 3;
  }

  Term gen(const Context& ctx, const Type& a, int budget) {
    if (a.is_arrow()) {
      std::string x = fresh_name();
      return Term::abs(x, a.domain(),
                       gen(ctx.extended(x, a.domain()), a.codomain(),
                           budget > 0 ? budget - 1 : 0));
    }
    // Target type o: either a redex or a fully applied variable.
    const bool can_var = ctx.size() > 0;
    const bool want_redex = budget > 2 && coin() < opts.redex_bias;
    if (!can_var || want_redex) {
      Type b = random_small_type();
      std::string y = fresh_name();
      Term body = gen(ctx.extended(y, b), Type::base(), budget / 2);
      int size = bag_size(budget);
      std::vector<Term> elems;
      for (int i = 0; i < size; ++i) {
        if (i > 0 && coin() < opts.reuse_var_bias) {
          elems.push_back(elems[pick(static_cast<int>(elems.size()))]);
        } else {
          elems.push_back(gen(ctx, b, budget / (size + 1)));
        }
      }
      return Term::app(Term::abs(y, b, body), Bag(std::move(elems)));
    }
    const Binding& x = ctx[pick(ctx.size())];
    std::vector<Bag> bags;
    for (const Type& d : x.type.domains()) {
      int size = bag_size(budget / (x.type.arity() + 1));
      std::vector<Term> elems;
      for (int i = 0; i < size; ++i) {
        if (i > 0 && coin() < opts.reuse_var_bias) {
          elems.push_back(elems[pick(static_cast<int>(elems.size()))]);
        } else {
          elems.push_back(gen(ctx, d, budget / (2 * (size + 1))));
        }
      }
      bags.emplace_back(std::move(elems));
    }
    return Term::var(x.name, Seq(std::move(bags)));
  }
};

}  // namespace

Term random_typed_term(const Context& ctx, const Type& type, TermRng& rng,
                       const TermGenOptions& opts) {
  TermGen gen{rng, opts};
  return gen.gen(ctx, type, opts.max_size);
}

Context corpus_context() {
  return Context::parse("u:o, g:o -> o, h:o -> o -> o, f:(o -> o) -> o");
}

std::vector<CorpusItem> make_corpus(int count, uint64_t seed,
                                    const TermGenOptions& opts) {
  TermRng rng(seed);
  Context ctx = corpus_context();
  std::vector<Type> types = {parse_type("o"), parse_type("o -> o"),
                             parse_type("(o -> o) -> o"),
                             parse_type("o -> o -> o")};
  std::vector<CorpusItem> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    if (i % 10 == 3) {
      // Duplicated resources: both partitionings of [w, w] over the two
      // occurrences coincide, so the normal form carries coefficient 2.
      Term w = random_typed_term(ctx, Type::base(), rng, opts);
      Term body = parse_term("h [xx] [xx]");
      Term t = Term::app(Term::abs("xx", Type::base(), body), Bag({w, w}));
      out.push_back({ctx, Type::base(), t});
      continue;
    }
    if (i % 10 == 7) {
      // Unused variable fed a nonempty bag: normalizes to the zero sum.
      Term w = random_typed_term(ctx, Type::base(), rng, opts);
      Term t = Term::app(Term::abs("xx", Type::base(), parse_term("u")),
                         Bag({w}));
      out.push_back({ctx, Type::base(), t});
      continue;
    }
    const Type& ty = types[i % types.size()];
    out.push_back({ctx, ty, random_typed_term(ctx, ty, rng, opts)});
  }
  return out;
}

}  // namespace rescal
