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

// End-to-end acceptance suite: one line per criterion, nonzero exit when
// any fails.  Tolerances are exact (all arithmetic is exact), so every
// comparison below is an equality.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>

#include "interp.hpp"
#include "laws.hpp"
#include "test_support.hpp"

using namespace rescal;
using rescal::testing::Rng;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& title,
               const std::function<bool(std::string*)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(&detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::printf("%s criterion %d: %s (%lld ms)%s%s\n", ok ? "PASS" : "FAIL",
              number, title.c_str(), static_cast<long long>(ms),
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

// 1. The two-summand substitution example.
bool substitution_example(std::string* detail) {
  Term t = parse_term("\\f:o -> o -> o. f [x] [x]");
  TermSum got = substitute_term(t, "x", Bag({parse_term("y"), parse_term("z")}));
  TermSum expected;
  expected.add(parse_term("\\f:o -> o -> o. f [y] [z]"), Nat(1));
  expected.add(parse_term("\\f:o -> o -> o. f [z] [y]"), Nat(1));
  if (got != expected) {
    *detail = "got " + print_term_sum(got);
    return false;
  }
  return true;
}

// 2. Confluence and strong normalization on 100 random typed terms.
bool confluence(std::string* detail) {
  auto corpus = make_corpus(100, 20240817);
  for (const auto& item : corpus) {
    TermSum lo = normalize(item.term, kDefaultFuel,
                           RedexOrder::LeftmostOutermost);
    TermSum ri = normalize(item.term, kDefaultFuel,
                           RedexOrder::RightmostInnermost);
    if (lo != ri) {
      *detail = "orders disagree on " + print_term(item.term);
      return false;
    }
    if (!is_normal_sum(lo)) {
      *detail = "non-normal output on " + print_term(item.term);
      return false;
    }
    typecheck_sum(item.ctx, lo, item.type);
  }
  return true;
}

// 3. The bijection, exhaustively in both directions.
bool bijection(std::string* detail) {
  // Terms -> augmentations -> terms, over all normal terms of size <= 12
  // in a small family.
  Context ctx = Context::parse("f:(o -> o) -> o, u:o");
  int term_count = 0;
  for (const char* ty : {"o", "o -> o"}) {
    Type type = parse_type(ty);
    for (const Term& t : testing::enumerate_normal_terms(ctx, type, 12)) {
      Aug q = encode_term(ctx, t);
      validate_augmentation(q);
      Term back = decode_term(q, ctx, type);
      if (back != t) {
        *detail = "decode(encode(t)) != t for " + print_term(t);
        return false;
      }
      ++term_count;
    }
  }
  // Augmentations -> terms -> augmentations, over all valid pointed
  // augmentations with <= 10 events on |Gamma| |- |o|.
  IfacePtr iface = make_iface(Arena::of_context(ctx), Arena::atom());
  auto all = testing::enumerate_augs(iface, 10, true);
  for (const auto& c : all) {
    Term t = decode_term(c.rep, ctx, Type::base());
    if (encode_term_canonical(ctx, t).key != c.key) {
      *detail = "encode(decode(q)) != q at " + c.key;
      return false;
    }
  }
  // The nested worked example maps to its hand-built augmentation.
  Context empty;
  Term t = parse_term(
      "\\f:((o->o)->(o->o)->o). f [\\x:o.x, \\x:o.x] [\\y:o. f [] []]");
  Arena a = Arena::of_type(parse_type("((o -> o) -> (o -> o) -> o) -> o"));
  Aug fig = empty_aug(make_iface(Arena::empty(), a));
  int q0 = fig.add(-1, -1, Disp{Side::R, 0});
  int f1 = fig.add(q0, q0, Disp{Side::R, 1});
  int a1 = fig.add(f1, f1, Disp{Side::R, 2});
  fig.add(a1, a1, Disp{Side::R, 3});
  int a2 = fig.add(f1, f1, Disp{Side::R, 2});
  fig.add(a2, a2, Disp{Side::R, 3});
  int b1 = fig.add(f1, f1, Disp{Side::R, 4});
  fig.add(q0, b1, Disp{Side::R, 1});
  if (encode_term_canonical(empty, t).key != aug_key(fig)) {
    *detail = "worked example does not match its hand-built augmentation";
    return false;
  }
  *detail = std::to_string(term_count) + " terms, " +
            std::to_string(all.size()) + " pointed augmentation classes";
  return true;
}

// 4. Symmetry counting three ways.
bool symmetry_counting(std::string* detail) {
  // Exactly two symmetries on the doubled question.
  Configuration qq;
  qq.add(-1, 0);
  qq.add(-1, 0);
  if (enumerate_symmetries(qq, qq).size() != 2) {
    *detail = "qq does not have exactly two symmetries";
    return false;
  }
  // Enumeration agrees with the factorial formula up to 8 events.
  Rng rng(99);
  std::vector<Arena> arenas = {
      Arena::atom(), Arena::of_type(parse_type("o -> o")),
      Arena::of_type(parse_type("(o -> o) -> o")),
      Arena::tensor({Arena::atom(), Arena::of_type(parse_type("o -> o"))})};
  for (int i = 0; i < 400; ++i) {
    const Arena& a = arenas[i % arenas.size()];
    Configuration x = testing::random_configuration(a, 8, rng);
    if (Nat(enumerate_symmetries(x, x).size()) != sym_count(x)) {
      *detail = "enumeration disagrees with the factorial formula";
      return false;
    }
  }
  // Splitting identity |Sym(x*y)| = |x*y < x,y| |Sym x| |Sym y|.
  for (int i = 0; i < 200; ++i) {
    const Arena& a = arenas[i % arenas.size()];
    Configuration x = testing::random_configuration(a, 4, rng);
    Configuration y = testing::random_configuration(a, 4, rng);
    Configuration xy = union_star(x, y);
    if (sym_count(xy) !=
        splitting_count(xy, x, y) * sym_count(x) * sym_count(y)) {
      *detail = "splitting identity fails";
      return false;
    }
  }
  return true;
}

// 5. Deadlock-freedom across 10^4 interactions, with edge classification.
bool deadlock_freedom(std::string* detail) {
  Rng rng(20260808);
  struct Pool {
    IfacePtr ab, bc;
    std::vector<Aug> qs, ps;
    std::map<std::string, std::vector<int>> by_pos;
  };
  auto arena_of = [](const char* t) { return Arena::of_type(parse_type(t)); };
  std::vector<Pool> pools;
  {
    // Arena sizes up to 10 nodes across the three slots.
    struct Shape {
      const char *a, *b, *c;
    };
    for (const Shape& s : std::vector<Shape>{
             {"o", "o", "o -> o"},
             {"o -> o", "o -> o", "o"},
             {"(o -> o) -> o", "o -> o", "(o -> o) -> o"},
             {"o -> o -> o", "(o -> o) -> o", "o -> o"}}) {
      Pool pool;
      pool.ab = make_iface(arena_of(s.a), arena_of(s.b));
      pool.bc = make_iface(arena_of(s.b), arena_of(s.c));
      for (int j = 0; j < 80; ++j) {
        pool.qs.push_back(testing::random_aug(pool.ab, 7, rng));
        pool.ps.push_back(testing::random_aug(pool.bc, 7, rng));
      }
      for (size_t j = 0; j < pool.ps.size(); ++j)
        pool.by_pos[configuration_key(pool.ps[j].side_config(Side::L))]
            .push_back(static_cast<int>(j));
      pools.push_back(std::move(pool));
    }
  }
  long interactions = 0, classified = 0;
  while (interactions < 10000) {
    Pool& pool = pools[rng() % pools.size()];
    const Aug& q = pool.qs[rng() % pool.qs.size()];
    auto it = pool.by_pos.find(configuration_key(q.side_config(Side::R)));
    if (it == pool.by_pos.end()) continue;
    const Aug& p = pool.ps[it->second[rng() % it->second.size()]];
    const int nq = q.size();
    for (const auto& phi : middle_symmetries(q, p)) {
      Interaction inter = interact(q, p, phi);  // throws on any cycle
      ++interactions;
      std::vector<int> phi_inv(p.size(), -1);
      for (int e = 0; e < nq; ++e)
        if (phi[e] >= 0) phi_inv[phi[e]] = e;
      for (size_t v = 0; v < inter.nodes.size(); ++v) {
        const int m = inter.ipred[v];
        if (m < 0) continue;
        ++classified;
        bool ok;
        if (m < nq) {
          const bool crossing =
              q.polarity(m) == Pol::Pos && q.disp[m].side == Side::R;
          ok = crossing ? static_cast<int>(v) == nq + phi[m]
                        : static_cast<int>(v) < nq &&
                              q.dparent[static_cast<int>(v)] == m;
        } else {
          const int mp = m - nq;
          const bool crossing =
              p.polarity(mp) == Pol::Pos && p.disp[mp].side == Side::L;
          ok = crossing ? static_cast<int>(v) == phi_inv[mp]
                        : static_cast<int>(v) >= nq &&
                              p.dparent[static_cast<int>(v) - nq] == mp;
        }
        if (!ok) {
          *detail = "an immediate edge has none of the three shapes";
          return false;
        }
      }
      if (interactions >= 10000) break;
    }
  }
  *detail = std::to_string(interactions) + " interactions, " +
            std::to_string(classified) + " edges classified";
  return true;
}

// 6. Exact identity neutrality and associativity.
bool category_laws(std::string* detail) {
  Rng rng(31337);
  auto arena_of = [](const char* t) { return Arena::of_type(parse_type(t)); };
  IfacePtr ab = make_iface(arena_of("o"), arena_of("o -> o"));
  IfacePtr bc = make_iface(arena_of("o -> o"), arena_of("o"));
  IfacePtr cd = make_iface(arena_of("o"), arena_of("(o -> o) -> o"));
  auto rand_strategy = [&](const IfacePtr& iface) {
    Strategy s(iface);
    int k = 1 + static_cast<int>(rng() % 3);
    for (int j = 0; j < k; ++j)
      s.add(testing::random_aug(iface, 6, rng),
            Coeff(Nat(1 + rng() % 3), Nat(1 + rng() % 4)));
    return s;
  };
  for (int i = 0; i < 25; ++i) {
    Strategy s = rand_strategy(ab);
    StructuralKernel idl = StructuralKernel::identity(ab->left);
    StructuralKernel idr = StructuralKernel::identity(ab->right);
    if (apply_kernel(idr, s, Side::R) != s || apply_kernel(idl, s, Side::L) != s) {
      *detail = "identity kernel is not neutral";
      return false;
    }
  }
  for (int i = 0; i < 50; ++i) {
    Strategy f = rand_strategy(ab), g = rand_strategy(bc), h = rand_strategy(cd);
    if (compose(h, compose(g, f)) != compose(compose(h, g), f)) {
      *detail = "associativity fails";
      return false;
    }
  }
  return true;
}

// 7. Resource-category laws at window 6 over three arenas.
bool resource_category_laws(std::string* detail) {
  for (const char* ty : {"o", "o -> o", "(o -> o) -> o"}) {
    Arena a = Arena::of_type(parse_type(ty));
    for (const LawResult& r : check_all_laws(a, 6)) {
      if (!r.ok) {
        *detail = std::string(ty) + ": " + r.name + " (" + r.detail + ")";
        return false;
      }
    }
  }
  // Extra singleton/annihilation instances for the pointed-identity law.
  Context ctx;
  Type oo = parse_type("o -> o");
  std::vector<Term> two = {parse_term("\\x:o. x"), parse_term("\\x:o. x")};
  for (const LawResult& r : check_pointed_bag_laws(ctx, oo, two)) {
    if (!r.ok) {
      *detail = r.name + " (" + r.detail + ")";
      return false;
    }
  }
  return true;
}

// 8. The soundness flagship.
bool soundness_flagship(std::string* detail) {
  SoundnessSummary s = run_soundness(500, 42);
  *detail = "checked " + std::to_string(s.checked) + ", zero normal forms " +
            std::to_string(s.zero_normal_forms) + ", coefficient >= 2 in " +
            std::to_string(s.coeff_at_least_two);
  if (!s.ok()) {
    *detail += "; first failure: " + s.first_failure;
    return false;
  }
  return s.checked >= 500 && s.zero_normal_forms >= 20 &&
         s.coeff_at_least_two >= 20;
}

// 9. Semantic substitution against syntactic substitution.
bool semantic_substitution(std::string* detail) {
  Rng rng(271828);
  Context gamma = corpus_context();
  int checked = 0;
  while (checked < 100) {
    const Type b = parse_type(checked % 3 == 0 ? "o -> o" : "o");
    const Type target = parse_type(checked % 2 == 0 ? "o -> o" : "o");
    Context delta = gamma.extended("x", b);
    Term s = random_typed_term(delta, target, rng);
    int occ = testing::count_free_occurrences(s, "x");
    if (occ > 3) continue;
    int size = occ + (checked % 5 == 0 ? 1 : 0);  // sometimes mismatched
    std::vector<Term> elems;
    for (int j = 0; j < size; ++j)
      elems.push_back(random_typed_term(gamma, b, rng));
    Bag bag(elems);
    Strategy lhs = semantic_substitute(interpret_term(delta, s), gamma, b,
                                       interpret_bag(gamma, bag, b));
    Strategy rhs =
        interpret_sum(gamma, substitute_term(s, "x", bag), target);
    if (lhs != rhs) {
      *detail = "mismatch on " + print_term(s) + " with " + print_bag(bag);
      return false;
    }
    ++checked;
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "resource substitution produces the two crossed summands",
            substitution_example);
  criterion(2, "confluence and strong normalization at desk scale", confluence);
  criterion(3, "bijection between normal terms and pointed augmentations",
            bijection);
  criterion(4, "symmetry counting: enumeration, closed form, splittings",
            symmetry_counting);
  criterion(5, "deadlock-free interactions with lawful immediate causality",
            deadlock_freedom);
  criterion(6, "exact identity neutrality and associativity", category_laws);
  criterion(7, "resource-category laws at window 6", resource_category_laws);
  criterion(8, "interpretation equals encoded normal form on 500 terms",
            soundness_flagship);
  criterion(9, "semantic substitution matches syntactic substitution",
            semantic_substitution);
  if (g_failures != 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
