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

#include "interp.hpp"

#include <cassert>

#include "termgen.hpp"

namespace rescal {

Strategy unit_morphism(IfacePtr iface) {
  Strategy s(iface);
  s.add(empty_aug(s.iface()), Coeff(1));
  return s;
}

Strategy star(const Strategy& f, const Strategy& g) {
  assert(*f.iface() == *g.iface());
  const Arena& gamma = f.iface()->left;
  const Arena& b = f.iface()->right;
  Strategy t = tensor_strategy(f, g);
  t = apply_kernel(StructuralKernel::delta(gamma), t, Side::L);
  t = apply_kernel(StructuralKernel::mu(b), t, Side::R);
  // Land back on the shared interface object.
  Strategy out(f.iface());
  for (const auto& [k, e] : t.table()) {
    Aug rep = e.rep;
    rep.iface = f.iface();
    out.add(rep, e.coeff);
  }
  return out;
}

Strategy big_product(IfacePtr iface, const SemBag& fs) {
  Strategy acc = unit_morphism(std::move(iface));
  for (const Strategy& f : fs) acc = star(acc, f);
  return acc;
}

Strategy pairing(const Strategy& f, const Strategy& g) {
  assert(f.iface()->left == g.iface()->left);
  const Arena& gamma = f.iface()->left;
  Strategy t = tensor_strategy(f, g);
  return apply_kernel(StructuralKernel::delta(gamma), t, Side::L);
}

Strategy pack(const Arena& gamma, const std::vector<Arena>& rights,
              const SemSeq& seq) {
  assert(rights.size() == seq.size());
  if (seq.empty()) return eps_strategy(gamma);
  Strategy acc =
      big_product(make_iface(gamma, rights[0]), seq[0]);
  for (size_t i = 1; i < seq.size(); ++i) {
    Strategy next = big_product(make_iface(gamma, rights[i]), seq[i]);
    acc = pairing(acc, next);
  }
  return acc;
}

Strategy apply_pair_with_id(const Strategy& f, const Strategy& h,
                            const Arena& gamma, const Arena& domain) {
  // <id_Gamma, h> has one class per (position y of Gamma, class r of h):
  // the copycat over y tensored-in-place with r, its right side retagged
  // into Gamma x A, weighted h(r) / |Sym y|.  Composing with finite f only
  // needs the instances matching f's left projections.
  assert(f.iface()->left == Arena::tensor({gamma, domain}));
  assert(h.iface()->left == gamma);
  Strategy out(make_iface(gamma, f.iface()->right));
  IfacePtr pair_iface =
      make_iface(gamma, Arena::tensor({gamma, domain}));
  const int ng = gamma.size();
  for (const auto& [kf, ef] : f.table()) {
    Configuration m = ef.rep.side_config(Side::L);
    // Split the middle into its Gamma and domain components.
    auto [m_gamma, m_dom] = split_config(m, ng);
    const Configuration y = canonical_configuration(m_gamma);
    const Coeff y_weight = Coeff(Nat(1), sym_count(y));
    const std::string dom_key = configuration_key(m_dom);
    for (const auto& [kr, er] : h.table()) {
      if (configuration_key(er.rep.side_config(Side::R)) != dom_key) continue;
      // Build <id, h> at (y, r): copycat on y into component 1, r into
      // component 2.
      Aug inst = mapped_copycat(pair_iface, y, [](int n) { return n; });
      Aug r_part = er.rep;
      r_part.iface = pair_iface;
      for (Disp& d : r_part.disp)
        if (d.side == Side::R) d.node += ng;
      inst = aug_union(inst, r_part);
      const Coeff c = ef.coeff * er.coeff * y_weight;
      for (const auto& phi : middle_symmetries(inst, ef.rep))
        out.add(compose_aug(inst, ef.rep, phi), c);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Interpretation
// ---------------------------------------------------------------------------

namespace {

SemTerm interpret_rec(const Context& ctx, const Term& t, const Type& type);

SemBag interpret_bag_rec(const Context& ctx, const Bag& b, const Type& type) {
  SemBag out;
  out.reserve(b.size());
  for (const Term& e : b.items()) out.push_back(interpret_rec(ctx, e, type));
  return out;
}

SemSeq interpret_seq_rec(const Context& ctx, const Seq& s,
                         const std::vector<Type>& types) {
  SemSeq out;
  out.reserve(s.size());
  for (int i = 0; i < s.size(); ++i)
    out.push_back(interpret_bag_rec(ctx, s.items()[i], types[i]));
  return out;
}

SemTerm interpret_rec(const Context& ctx, const Term& t, const Type& type) {
  const Arena gamma = Arena::of_context(ctx);
  switch (t.kind()) {
    case Term::Kind::Abs: {
      const Context inner = ctx.extended(t.abs_binder(), t.abs_binder_type());
      const Type cod = type.codomain();
      SemTerm body = interpret_rec(inner, t.abs_body(), cod);
      // merge is the identity on context tables, so currying is all that
      // remains of the abstraction clause.
      return curry_strategy(body, gamma, Arena::of_type(t.abs_binder_type()),
                            Arena::of_type(cod));
    }
    case Term::Kind::Var: {
      const int i = ctx.index_of(t.var_name());
      assert(i >= 0);
      const Type& head_type = ctx[i].type;
      SemSeq args = interpret_seq_rec(ctx, t.var_args(), head_type.domains());
      std::vector<Arena> rights;
      for (const Type& d : head_type.domains())
        rights.push_back(Arena::of_type(d));
      Strategy packed = pack(gamma, rights, args);
      // Evaluation against the pointed variable projection lifts each
      // packed class under a fresh question/answer pair on entry i.
      Strategy out(make_iface(gamma, Arena::atom()));
      for (const auto& [k, e] : packed.table())
        out.add(lift_head_occurrence(e.rep, ctx, i), e.coeff);
      return out;
    }
    case Term::Kind::App: {
      const Type fun_type = typecheck_term(ctx, t.app_fun());
      const Arena dom = Arena::of_type(fun_type.domain());
      const Arena cod = Arena::of_type(fun_type.codomain());
      SemTerm fun = interpret_rec(ctx, t.app_fun(), fun_type);
      SemBag bag = interpret_bag_rec(ctx, t.app_arg(), fun_type.domain());
      Strategy product =
          big_product(make_iface(gamma, dom), bag);
      // ev . <f, Pi b> computed as uncurry(f) . <id, Pi b>: the evaluation
      // morphism stays a lazy uncurried identity.
      Strategy uncurried = uncurry_strategy(fun, gamma, dom, cod);
      return apply_pair_with_id(uncurried, product, gamma, dom);
    }
  }
  return Strategy();
}

}  // namespace

SemTerm interpret_term(const Context& ctx, const Term& t) {
  Type type = typecheck_term(ctx, t);
  std::vector<std::string> avoid;
  for (const Binding& b : ctx.bindings()) avoid.push_back(b.name);
  return interpret_rec(ctx, freshen_binders(t, avoid), type);
}

SemBag interpret_bag(const Context& ctx, const Bag& b, const Type& type) {
  typecheck_bag(ctx, b, type);
  SemBag out;
  for (const Term& e : b.items()) out.push_back(interpret_term(ctx, e));
  return out;
}

SemSeq interpret_seq(const Context& ctx, const Seq& s,
                     const std::vector<Type>& types) {
  typecheck_seq(ctx, s, types);
  SemSeq out;
  for (int i = 0; i < s.size(); ++i)
    out.push_back(interpret_bag(ctx, s.items()[i], types[i]));
  return out;
}

Strategy interpret_sum(const Context& ctx, const TermSum& s, const Type& type) {
  Strategy out(make_iface(Arena::of_context(ctx), Arena::of_type(type)));
  for (const auto& [t, c] : s.entries()) {
    Strategy st = interpret_term(ctx, t);
    st.scale(Coeff(c));
    out.add(st);
  }
  return out;
}

Strategy semantic_substitute(const Strategy& f, const Context& gamma,
                             const Type& substituted, const SemBag& g) {
  const Arena gamma_arena = Arena::of_context(gamma);
  const Arena dom = Arena::of_type(substituted);
  Strategy product = big_product(make_iface(gamma_arena, dom), g);
  return apply_pair_with_id(f, product, gamma_arena, dom);
}

// ---------------------------------------------------------------------------
// Harnesses
// ---------------------------------------------------------------------------

void compare_strategies(const Strategy& lhs, const Strategy& rhs,
                        const std::string& what, Report* report) {
  ++report->checked;
  auto it = lhs.table().begin();
  auto jt = rhs.table().begin();
  while (it != lhs.table().end() || jt != rhs.table().end()) {
    if (it != lhs.table().end() &&
        (jt == rhs.table().end() || it->first < jt->first)) {
      report->mismatches.push_back({it->first, it->second.coeff, Coeff(), what});
      ++it;
      continue;
    }
    if (jt != rhs.table().end() &&
        (it == lhs.table().end() || jt->first < it->first)) {
      report->mismatches.push_back({jt->first, Coeff(), jt->second.coeff, what});
      ++jt;
      continue;
    }
    if (it->second.coeff != jt->second.coeff)
      report->mismatches.push_back(
          {it->first, it->second.coeff, jt->second.coeff, what});
    ++it;
    ++jt;
  }
}

Report check_invariance(const Context& ctx, const TermSum& s, const Type& type) {
  Report report;
  typecheck_sum(ctx, s, type);
  Strategy base = interpret_sum(ctx, s, type);
  for (const auto& [t, c] : s.entries()) {
    // s = t + without
    TermSum without;
    bool removed_one = false;
    for (const auto& [u, k] : s.entries()) {
      Nat kk = k;
      if (!removed_one && u == t) {
        kk = k - Nat(1);
        removed_one = true;
      }
      without.add(u, kk);
    }
    for (const TermSum& reduct : one_step_reducts(t)) {
      TermSum next = without;
      next.add(reduct);
      Strategy after = interpret_sum(ctx, next, type);
      compare_strategies(base, after, "one-step invariance: " + print_term(t),
                         &report);
    }
  }
  return report;
}

Report check_normal_form_correspondence(const Context& ctx, const Term& t) {
  Report report;
  Type type = typecheck_term(ctx, t);
  Strategy lhs = interpret_term(ctx, t);
  TermSum nf = normalize(t);
  Strategy rhs(make_iface(Arena::of_context(ctx), Arena::of_type(type)));
  for (const auto& [u, c] : nf.entries())
    rhs.add(encode_term(ctx, u), Coeff(c));
  compare_strategies(lhs, rhs, "normal-form correspondence: " + print_term(t),
                     &report);
  return report;
}

SoundnessSummary run_soundness(int count, uint64_t seed) {
  SoundnessSummary out;
  for (const CorpusItem& item : make_corpus(count, seed)) {
    Report r = check_normal_form_correspondence(item.ctx, item.term);
    ++out.checked;
    if (!r.ok()) {
      ++out.failures;
      if (out.first_failure.empty()) out.first_failure = r.mismatches[0].detail;
      continue;
    }
    TermSum nf = normalize(item.term);
    if (nf.is_zero()) ++out.zero_normal_forms;
    for (const auto& [u, c] : nf.entries()) {
      if (c > Nat(1)) {
        ++out.coeff_at_least_two;
        break;
      }
    }
  }
  return out;
}

}  // namespace rescal
