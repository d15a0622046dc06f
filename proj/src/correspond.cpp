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

#include "correspond.hpp"

#include <algorithm>
#include <cassert>

namespace rescal {

namespace {

int context_offset(const Context& ctx, int index) {
  int off = 0;
  for (int i = 0; i < index; ++i) off += ctx[i].type.atom_count();
  return off;
}

}  // namespace

// ---------------------------------------------------------------------------
// Currying as display surgery
// ---------------------------------------------------------------------------

Disp curry_disp(const Disp& d, int gamma_size, int domain_size) {
  if (d.side == Side::L) {
    if (d.node < gamma_size) return d;
    return Disp{Side::R, 1 + (d.node - gamma_size)};
  }
  if (d.node == 0) return Disp{Side::R, 0};
  return Disp{Side::R, domain_size + d.node};
}

Disp uncurry_disp(const Disp& d, int gamma_size, int domain_size) {
  if (d.side == Side::L) return d;
  if (d.node == 0) return Disp{Side::R, 0};
  if (d.node <= domain_size) return Disp{Side::L, gamma_size + d.node - 1};
  return Disp{Side::R, d.node - domain_size};
}

namespace {

int dyn_root_of(const Aug& q, int e) {
  while (q.dparent[e] >= 0) e = q.dparent[e];
  return e;
}

}  // namespace

Aug curry_aug(const Aug& q, const Arena& gamma, const Arena& domain,
              const Arena& codomain) {
  assert(codomain.is_pointed());
  Aug out = q;
  out.iface = make_iface(gamma, Arena::arrow(domain, codomain));
  for (int e = 0; e < q.size(); ++e) {
    out.disp[e] = curry_disp(q.disp[e], gamma.size(), domain.size());
    // Events on a domain root lose static minimality: their static parent
    // becomes the initial event of their dynamic tree, the unique dynamic
    // ancestor displayed to the new arena parent.
    const Disp& d = q.disp[e];
    if (d.side == Side::L && d.node >= gamma.size() &&
        domain.is_root(d.node - gamma.size())) {
      out.sparent[e] = dyn_root_of(q, e);
    }
  }
  return out;
}

Aug uncurry_aug(const Aug& q, const Arena& gamma, const Arena& domain,
                const Arena& codomain) {
  assert(codomain.is_pointed());
  Aug out = q;
  out.iface = make_iface(Arena::tensor({gamma, domain}), codomain);
  for (int e = 0; e < q.size(); ++e) {
    out.disp[e] = uncurry_disp(q.disp[e], gamma.size(), domain.size());
    // Events moving onto a root of the domain side become static-minimal.
    const Disp& d = out.disp[e];
    if (d.side == Side::L && d.node >= gamma.size() &&
        domain.is_root(d.node - gamma.size())) {
      out.sparent[e] = -1;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Head-occurrence lifting
// ---------------------------------------------------------------------------

Aug lift_head_occurrence(const Aug& q, const Context& ctx, int index) {
  const int off = context_offset(ctx, index);
  Aug out;
  out.iface = make_iface(Arena::of_context(ctx), Arena::atom());
  const int minus = out.add(-1, -1, Disp{Side::R, 0});
  const int plus = out.add(-1, minus, Disp{Side::L, off});
  const int shift = 2;
  for (int e = 0; e < q.size(); ++e) {
    Disp d = q.disp[e];
    if (d.side == Side::R) {
      // Argument events move under the head occurrence's entry, right after
      // its root in the entry's node block.
      d = Disp{Side::L, off + 1 + d.node};
    }
    int sp = q.sparent[e];
    int dp = q.dparent[e];
    // Former static roots on the argument side now sit under the answer.
    int nsp;
    if (sp >= 0) {
      nsp = sp + shift;
    } else {
      nsp = q.disp[e].side == Side::R ? plus : -1;
    }
    const int ndp = dp >= 0 ? dp + shift : plus;
    out.add(nsp, ndp, d);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Encoding
// ---------------------------------------------------------------------------

namespace {

Aug encode_term_rec(const Context& ctx, const Term& t, const Type& type);

Aug encode_bag_rec(const Context& ctx, const Bag& b, const Type& type) {
  Aug out = empty_aug(make_iface(Arena::of_context(ctx), Arena::of_type(type)));
  for (const Term& e : b.items())
    out = aug_union(out, encode_term_rec(ctx, e, type));
  return out;
}

Aug encode_seq_rec(const Context& ctx, const Seq& s,
                   const std::vector<Type>& types) {
  assert(s.size() == static_cast<int>(types.size()));
  std::vector<Arena> parts;
  parts.reserve(types.size());
  for (const Type& a : types) parts.push_back(Arena::of_type(a));
  Aug out = empty_aug(make_iface(Arena::of_context(ctx), Arena::tensor(parts)));
  for (int i = 0; i < s.size(); ++i) {
    Aug qi = encode_bag_rec(ctx, s.items()[i], types[i]);
    const int node_off = Arena::part_offset(parts, i);
    const int shift = out.size();
    for (int e = 0; e < qi.size(); ++e) {
      Disp d = qi.disp[e];
      if (d.side == Side::R) d.node += node_off;
      out.add(qi.sparent[e] < 0 ? -1 : qi.sparent[e] + shift,
              qi.dparent[e] < 0 ? -1 : qi.dparent[e] + shift, d);
    }
  }
  return out;
}

Aug encode_term_rec(const Context& ctx, const Term& t, const Type& type) {
  switch (t.kind()) {
    case Term::Kind::Abs: {
      assert(type.is_arrow());
      const Context inner = ctx.extended(t.abs_binder(), t.abs_binder_type());
      Aug body = encode_term_rec(inner, t.abs_body(), type.codomain());
      return curry_aug(body, Arena::of_context(ctx),
                       Arena::of_type(t.abs_binder_type()),
                       Arena::of_type(type.codomain()));
    }
    case Term::Kind::Var: {
      const int i = ctx.index_of(t.var_name());
      assert(i >= 0);
      Aug args = encode_seq_rec(ctx, t.var_args(), ctx[i].type.domains());
      return lift_head_occurrence(args, ctx, i);
    }
    case Term::Kind::App:
      throw std::invalid_argument("encode requires a normal term");
  }
  throw std::invalid_argument("malformed term");
}

}  // namespace

Aug encode_term(const Context& ctx, const Term& t) {
  Type type = typecheck_term(ctx, t);
  if (!is_normal(t))
    throw std::invalid_argument("encode requires a normal term");
  std::vector<std::string> avoid;
  for (const Binding& b : ctx.bindings()) avoid.push_back(b.name);
  Term fresh = freshen_binders(t, avoid);
  return encode_term_rec(ctx, fresh, type);
}

Aug encode_bag(const Context& ctx, const Bag& b, const Type& type) {
  typecheck_bag(ctx, b, type);
  std::vector<std::string> avoid;
  for (const Binding& bd : ctx.bindings()) avoid.push_back(bd.name);
  Aug out = empty_aug(make_iface(Arena::of_context(ctx), Arena::of_type(type)));
  for (const Term& e : b.items())
    out = aug_union(out, encode_term_rec(ctx, freshen_binders(e, avoid), type));
  return out;
}

Aug encode_seq(const Context& ctx, const Seq& s, const std::vector<Type>& types) {
  typecheck_seq(ctx, s, types);
  std::vector<Arena> parts;
  parts.reserve(types.size());
  for (const Type& a : types) parts.push_back(Arena::of_type(a));
  Aug out = empty_aug(make_iface(Arena::of_context(ctx), Arena::tensor(parts)));
  std::vector<std::string> avoid;
  for (const Binding& bd : ctx.bindings()) avoid.push_back(bd.name);
  for (int i = 0; i < s.size(); ++i) {
    Aug qi = encode_bag(ctx, s.items()[i], types[i]);
    const int node_off = Arena::part_offset(parts, i);
    const int shift = out.size();
    for (int e = 0; e < qi.size(); ++e) {
      Disp d = qi.disp[e];
      if (d.side == Side::R) d.node += node_off;
      out.add(qi.sparent[e] < 0 ? -1 : qi.sparent[e] + shift,
              qi.dparent[e] < 0 ? -1 : qi.dparent[e] + shift, d);
    }
  }
  return out;
}

CanonAug encode_term_canonical(const Context& ctx, const Term& t) {
  return canonicalize(encode_term(ctx, t));
}

// ---------------------------------------------------------------------------
// Decoding
// ---------------------------------------------------------------------------

namespace {

struct Decoder {
  FreshNames fresh;

  Term term(const Aug& q, const Context& ctx, const Type& type) {
    if (type.is_arrow()) {
      // Peel one abstraction: uncurry and extend the context.
      const std::string binder = fresh.next();
      const Type& dom = type.domain();
      const Type cod = type.codomain();
      Aug inner = uncurry_aug(q, Arena::of_context(ctx), Arena::of_type(dom),
                              Arena::of_type(cod));
      Context inner_ctx = ctx.extended(binder, dom);
      inner.iface = make_iface(Arena::of_context(inner_ctx), Arena::of_type(cod));
      return Term::abs(binder, dom, term(inner, inner_ctx, cod));
    }
    // Base type: the unique initial question is answered by the head
    // occurrence of some context entry.
    std::vector<int> roots;
    for (int e = 0; e < q.size(); ++e)
      if (q.dparent[e] < 0) roots.push_back(e);
    if (roots.size() != 1)
      throw DecodeError("term augmentation must be pointed, found " +
                        std::to_string(roots.size()) + " initial events");
    const int minus = roots[0];
    if (q.disp[minus] != Disp{Side::R, 0})
      throw DecodeError("initial event must display to the output");
    std::vector<int> answers;
    for (int e = 0; e < q.size(); ++e)
      if (q.dparent[e] == minus) answers.push_back(e);
    if (answers.size() != 1)
      throw DecodeError("initial event must have exactly one successor");
    const int plus = answers[0];
    if (q.disp[plus].side != Side::L)
      throw DecodeError("head answer must display to the context");
    // Identify the context entry whose root is the answer's display.
    int index = -1;
    int off = 0;
    for (int i = 0; i < ctx.size(); ++i) {
      if (q.disp[plus].node == off) {
        index = i;
        break;
      }
      off += ctx[i].type.atom_count();
    }
    if (index < 0)
      throw DecodeError("head answer does not display to an entry root");
    if (q.sparent[plus] >= 0)
      throw DecodeError("head answer must be static-minimal");

    // Strip the two initial events and pull the arguments back out of the
    // entry's node block.  The argument events are exactly the strict
    // static descendants of the head answer; other events displaying into
    // the same entry belong to nested occurrences of the variable and stay
    // on the context side.
    const Type& head_type = ctx[index].type;
    const int block = off + 1;
    const int block_size = head_type.atom_count() - 1;
    std::vector<bool> under_plus(q.size(), false);
    for (int e = 0; e < q.size(); ++e) {
      for (int a = q.sparent[e]; a >= 0; a = q.sparent[a]) {
        if (a == plus) {
          under_plus[e] = true;
          break;
        }
      }
    }
    Aug args;
    std::vector<Arena> parts;
    for (const Type& d : head_type.domains()) parts.push_back(Arena::of_type(d));
    args.iface = make_iface(Arena::of_context(ctx), Arena::tensor(parts));
    std::vector<int> new_id(q.size(), -1);
    for (int e = 0; e < q.size(); ++e) {
      if (e == minus || e == plus) continue;
      Disp d = q.disp[e];
      if (d.side == Side::R)
        throw DecodeError("only the initial event may display to the output");
      if (under_plus[e]) {
        if (d.node < block || d.node >= block + block_size)
          throw DecodeError("argument event outside the entry's block");
        d = Disp{Side::R, d.node - block};
      }
      new_id[e] = args.size();
      args.add(-2, -2, d);  // parents wired below
    }
    for (int e = 0; e < q.size(); ++e) {
      if (new_id[e] < 0) continue;
      int sp = q.sparent[e];
      int dp = q.dparent[e];
      args.sparent[new_id[e]] = (sp == plus || sp < 0) ? -1 : new_id[sp];
      args.dparent[new_id[e]] = (dp == plus || dp < 0) ? -1 : new_id[dp];
      if ((sp >= 0 && sp != plus && new_id[sp] < 0) ||
          (dp >= 0 && dp != plus && new_id[dp] < 0))
        throw DecodeError("argument event depends on a stripped event");
    }
    Seq s = seq(args, ctx, head_type.domains());
    return Term::var(ctx[index].name, s);
  }

  Seq seq(const Aug& q, const Context& ctx, const std::vector<Type>& types) {
    std::vector<Arena> parts;
    parts.reserve(types.size());
    for (const Type& a : types) parts.push_back(Arena::of_type(a));
    // Partition events by the tensor component under their dynamic root.
    std::vector<int> comp_of(q.size(), -1);
    std::vector<int> root_of(q.size(), -1);
    for (int e = 0; e < q.size(); ++e) {
      int r = e;
      while (q.dparent[r] >= 0) r = q.dparent[r];
      root_of[e] = r;
    }
    for (int e = 0; e < q.size(); ++e) {
      const int r = root_of[e];
      if (q.disp[r].side != Side::R)
        throw DecodeError("initial events must display to the output side");
      int node = q.disp[r].node;
      int comp = -1, off = 0;
      for (size_t i = 0; i < parts.size(); ++i) {
        if (node >= off && node < off + parts[i].size()) {
          comp = static_cast<int>(i);
          break;
        }
        off += parts[i].size();
      }
      if (comp < 0) throw DecodeError("initial event outside the components");
      comp_of[e] = comp;
    }
    std::vector<Bag> bags;
    for (size_t i = 0; i < parts.size(); ++i) {
      Aug qi;
      qi.iface = make_iface(q.iface->left, parts[i]);
      const int node_off = Arena::part_offset(parts, static_cast<int>(i));
      std::vector<int> new_id(q.size(), -1);
      for (int e = 0; e < q.size(); ++e) {
        if (comp_of[e] != static_cast<int>(i)) continue;
        Disp d = q.disp[e];
        if (d.side == Side::R) {
          if (d.node < node_off || d.node >= node_off + parts[i].size())
            throw DecodeError("event crosses components");
          d.node -= node_off;
        }
        new_id[e] = qi.size();
        qi.add(-2, -2, d);
      }
      for (int e = 0; e < q.size(); ++e) {
        if (new_id[e] < 0) continue;
        qi.sparent[new_id[e]] =
            q.sparent[e] < 0 ? -1 : new_id[q.sparent[e]];
        qi.dparent[new_id[e]] =
            q.dparent[e] < 0 ? -1 : new_id[q.dparent[e]];
        if ((q.sparent[e] >= 0 && new_id[q.sparent[e]] < 0) ||
            (q.dparent[e] >= 0 && new_id[q.dparent[e]] < 0))
          throw DecodeError("event depends on another component");
      }
      bags.push_back(bag(qi, ctx, types[i]));
    }
    return Seq(std::move(bags));
  }

  Bag bag(const Aug& q, const Context& ctx, const Type& type) {
    // Each dynamic tree is one pointed element.
    std::vector<int> root_of(q.size(), -1);
    std::vector<int> roots;
    for (int e = 0; e < q.size(); ++e) {
      int r = e;
      while (q.dparent[r] >= 0) r = q.dparent[r];
      root_of[e] = r;
      if (q.dparent[e] < 0) roots.push_back(e);
    }
    std::vector<Term> items;
    for (int r : roots) {
      Aug qe;
      qe.iface = q.iface;
      std::vector<int> new_id(q.size(), -1);
      for (int e = 0; e < q.size(); ++e) {
        if (root_of[e] != r) continue;
        new_id[e] = qe.size();
        qe.add(-2, -2, q.disp[e]);
      }
      for (int e = 0; e < q.size(); ++e) {
        if (new_id[e] < 0) continue;
        qe.sparent[new_id[e]] =
            q.sparent[e] < 0 ? -1 : new_id[q.sparent[e]];
        qe.dparent[new_id[e]] =
            q.dparent[e] < 0 ? -1 : new_id[q.dparent[e]];
        if (q.sparent[e] >= 0 && new_id[q.sparent[e]] < 0)
          throw DecodeError("static parent in a different element");
      }
      items.push_back(term(qe, ctx, type));
    }
    return Bag(std::move(items));
  }
};

}  // namespace

Term decode_term(const Aug& q, const Context& ctx, const Type& type) {
  Decoder d;
  for (const Binding& b : ctx.bindings()) d.fresh.reserve(b.name);
  return d.term(q, ctx, type);
}

Bag decode_bag(const Aug& q, const Context& ctx, const Type& type) {
  Decoder d;
  for (const Binding& b : ctx.bindings()) d.fresh.reserve(b.name);
  return d.bag(q, ctx, type);
}

Seq decode_seq(const Aug& q, const Context& ctx, const std::vector<Type>& types) {
  Decoder d;
  for (const Binding& b : ctx.bindings()) d.fresh.reserve(b.name);
  return d.seq(q, ctx, types);
}

int var_occurrence_count(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      int n = 1;
      for (const Bag& b : t.var_args().items())
        for (const Term& e : b.items()) n += var_occurrence_count(e);
      return n;
    }
    case Term::Kind::Abs:
      return var_occurrence_count(t.abs_body());
    case Term::Kind::App: {
      int n = var_occurrence_count(t.app_fun());
      for (const Term& e : t.app_arg().items()) n += var_occurrence_count(e);
      return n;
    }
  }
  return 0;
}

}  // namespace rescal
