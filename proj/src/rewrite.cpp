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

#include "rewrite.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

#include "typing.hpp"

namespace rescal {

std::vector<std::vector<Bag>> enumerate_partitionings(const Bag& b, int k) {
  assert(k >= 1);
  const int n = b.size();
  std::vector<std::vector<Bag>> out;
  std::vector<int> assign(n, 0);
  for (;;) {
    std::vector<std::vector<Term>> blocks(k);
    for (int i = 0; i < n; ++i) blocks[assign[i]].push_back(b.items()[i]);
    std::vector<Bag> tuple;
    tuple.reserve(k);
    for (auto& blk : blocks) tuple.emplace_back(std::move(blk));
    out.push_back(std::move(tuple));
    // next assignment function, odometer style
    int i = 0;
    while (i < n && assign[i] == k - 1) assign[i++] = 0;
    if (i == n) break;
    ++assign[i];
  }
  return out;
}

std::string FreshNames::next() {
  for (;;) {
    std::string candidate = "v" + std::to_string(counter_++);
    if (std::find(taken_.begin(), taken_.end(), candidate) == taken_.end())
      return candidate;
  }
}

void FreshNames::reserve(const std::string& name) {
  if (std::find(taken_.begin(), taken_.end(), name) == taken_.end())
    taken_.push_back(name);
}

namespace {

void collect_all_names(const Term& t, FreshNames* fresh) {
  switch (t.kind()) {
    case Term::Kind::Var:
      fresh->reserve(t.var_name());
      for (const Bag& b : t.var_args().items())
        for (const Term& e : b.items()) collect_all_names(e, fresh);
      break;
    case Term::Kind::Abs:
      fresh->reserve(t.abs_binder());
      collect_all_names(t.abs_body(), fresh);
      break;
    case Term::Kind::App:
      collect_all_names(t.app_fun(), fresh);
      for (const Term& e : t.app_arg().items()) collect_all_names(e, fresh);
      break;
  }
}

}  // namespace

void FreshNames::reserve_from(const Term& t) { collect_all_names(t, this); }

namespace {

// --- multilinear helpers ---------------------------------------------------

// Cartesian expansion of a vector of term sums into a BagSum.
BagSum expand_bag(const std::vector<TermSum>& element_sums) {
  BagSum acc = BagSum::of(Bag());
  for (const TermSum& es : element_sums) {
    if (es.is_zero()) return BagSum();
    BagSum next;
    for (const auto& [bag, cb] : acc.entries()) {
      for (const auto& [t, ct] : es.entries()) {
        std::vector<Term> items = bag.items();
        items.push_back(t);
        next.add(Bag(std::move(items)), cb * ct);
      }
    }
    acc = std::move(next);
  }
  return acc;
}

SeqSum expand_seq(const std::vector<BagSum>& item_sums) {
  SeqSum acc = SeqSum::of(Seq());
  for (const BagSum& is : item_sums) {
    if (is.is_zero()) return SeqSum();
    SeqSum next;
    for (const auto& [seq, cs] : acc.entries()) {
      for (const auto& [bag, cb] : is.entries()) {
        std::vector<Bag> items = seq.items();
        items.push_back(bag);
        next.add(Seq(std::move(items)), cs * cb);
      }
    }
    acc = std::move(next);
  }
  return acc;
}

TermSum map_abs(const std::string& binder, const Type& type, const TermSum& s) {
  TermSum out;
  for (const auto& [t, c] : s.entries()) out.add(Term::abs(binder, type, t), c);
  return out;
}

TermSum map_app(const TermSum& funs, const BagSum& args) {
  TermSum out;
  for (const auto& [f, cf] : funs.entries())
    for (const auto& [b, cb] : args.entries())
      out.add(Term::app(f, b), cf * cb);
  return out;
}

TermSum map_var(const std::string& name, const SeqSum& args) {
  TermSum out;
  for (const auto& [s, c] : args.entries()) out.add(Term::var(name, s), c);
  return out;
}

TermSum map_apply_sequence(const Term& head, const SeqSum& args) {
  TermSum out;
  for (const auto& [s, c] : args.entries()) out.add(apply_sequence(head, s), c);
  return out;
}

}  // namespace

TermSum substitute_term(const Term& t, const std::string& x, const Bag& b,
                        FreshNames& fresh) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      if (t.var_name() != x) {
        // The variable itself consumes nothing; the whole bag goes to the
        // argument sequence (zero when the sequence cannot absorb it).
        return map_var(t.var_name(), substitute_seq(t.var_args(), x, b, fresh));
      }
      // Head occurrence: one element replaces the head, the rest is
      // distributed over the argument sequence.  Assignments are indexed by
      // element position, so equal elements contribute separately.
      TermSum out;
      for (int j = 0; j < b.size(); ++j) {
        const Term& head = b.items()[j];
        std::vector<Term> rest;
        rest.reserve(b.size() - 1);
        for (int i = 0; i < b.size(); ++i)
          if (i != j) rest.push_back(b.items()[i]);
        SeqSum args = substitute_seq(t.var_args(), x, Bag(std::move(rest)), fresh);
        out.add(map_apply_sequence(head, args));
      }
      return out;
    }
    case Term::Kind::Abs: {
      std::string binder = t.abs_binder();
      Term body = t.abs_body();
      bool capture = false;
      if (binder == x) capture = true;
      for (const Term& e : b.items())
        if (is_free_in(binder, e)) capture = true;
      if (capture) {
        std::string z = fresh.next();
        body = rename_free(body, binder, z);
        binder = z;
      }
      return map_abs(binder, t.abs_binder_type(),
                     substitute_term(body, x, b, fresh));
    }
    case Term::Kind::App: {
      TermSum out;
      for (const auto& split : enumerate_partitionings(b, 2)) {
        TermSum funs = substitute_term(t.app_fun(), x, split[0], fresh);
        if (funs.is_zero()) continue;
        BagSum args = substitute_bag(t.app_arg(), x, split[1], fresh);
        out.add(map_app(funs, args));
      }
      return out;
    }
  }
  return TermSum();
}

BagSum substitute_bag(const Bag& target, const std::string& x, const Bag& b,
                      FreshNames& fresh) {
  const int n = target.size();
  if (n == 0) return b.empty() ? BagSum::of(Bag()) : BagSum();
  BagSum out;
  for (const auto& split : enumerate_partitionings(b, n)) {
    std::vector<TermSum> element_sums;
    element_sums.reserve(n);
    bool dead = false;
    for (int i = 0; i < n && !dead; ++i) {
      element_sums.push_back(substitute_term(target.items()[i], x, split[i], fresh));
      if (element_sums.back().is_zero()) dead = true;
    }
    if (!dead) out.add(expand_bag(element_sums));
  }
  return out;
}

SeqSum substitute_seq(const Seq& target, const std::string& x, const Bag& b,
                      FreshNames& fresh) {
  const int n = target.size();
  if (n == 0) return b.empty() ? SeqSum::of(Seq()) : SeqSum();
  SeqSum out;
  for (const auto& split : enumerate_partitionings(b, n)) {
    std::vector<BagSum> item_sums;
    item_sums.reserve(n);
    bool dead = false;
    for (int i = 0; i < n && !dead; ++i) {
      item_sums.push_back(substitute_bag(target.items()[i], x, split[i], fresh));
      if (item_sums.back().is_zero()) dead = true;
    }
    if (!dead) out.add(expand_seq(item_sums));
  }
  return out;
}

TermSum substitute_term(const Term& t, const std::string& x, const Bag& b) {
  FreshNames fresh;
  fresh.reserve_from(t);
  for (const Term& e : b.items()) fresh.reserve_from(e);
  return substitute_term(t, x, b, fresh);
}

namespace {

Term freshen_rec(const Term& t, FreshNames& fresh) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      std::vector<Bag> bags;
      bags.reserve(t.var_args().size());
      for (const Bag& b : t.var_args().items()) {
        std::vector<Term> items;
        items.reserve(b.size());
        for (const Term& e : b.items()) items.push_back(freshen_rec(e, fresh));
        bags.emplace_back(std::move(items));
      }
      return Term::var(t.var_name(), Seq(std::move(bags)));
    }
    case Term::Kind::Abs: {
      std::string z = fresh.next();
      Term body = rename_free(t.abs_body(), t.abs_binder(), z);
      return Term::abs(z, t.abs_binder_type(), freshen_rec(body, fresh));
    }
    case Term::Kind::App: {
      Term fun = freshen_rec(t.app_fun(), fresh);
      std::vector<Term> items;
      items.reserve(t.app_arg().size());
      for (const Term& e : t.app_arg().items())
        items.push_back(freshen_rec(e, fresh));
      return Term::app(std::move(fun), Bag(std::move(items)));
    }
  }
  return t;
}

}  // namespace

Term freshen_binders(const Term& t, const std::vector<std::string>& avoid) {
  FreshNames fresh;
  fresh.reserve_from(t);
  for (const std::string& a : avoid) fresh.reserve(a);
  return freshen_rec(t, fresh);
}

// ---------------------------------------------------------------------------
// Reduction
// ---------------------------------------------------------------------------

namespace {

TermSum contract(const Term& redex, FreshNames& fresh) {
  assert(redex.is_app() && redex.app_fun().is_abs());
  const Term& lam = redex.app_fun();
  return substitute_term(lam.abs_body(), lam.abs_binder(), redex.app_arg(), fresh);
}

std::optional<TermSum> step(const Term& t, RedexOrder order, FreshNames& fresh);

// Steps one element of b, returning the element's reducts and its index.
std::optional<std::pair<TermSum, int>> step_bag(const Bag& b, RedexOrder order,
                                                FreshNames& fresh) {
  const int n = b.size();
  for (int k = 0; k < n; ++k) {
    int i = order == RedexOrder::LeftmostOutermost ? k : n - 1 - k;
    if (auto r = step(b.items()[i], order, fresh))
      return std::make_pair(std::move(*r), i);
  }
  return std::nullopt;
}

std::optional<TermSum> step(const Term& t, RedexOrder order, FreshNames& fresh) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      const auto& bags = t.var_args().items();
      const int n = static_cast<int>(bags.size());
      for (int bi = 0; bi < n; ++bi) {
        int i = order == RedexOrder::LeftmostOutermost ? bi : n - 1 - bi;
        if (auto r = step_bag(bags[i], order, fresh)) {
          TermSum out;
          for (const auto& [e, c] : r->first.entries()) {
            std::vector<Bag> new_bags = bags;
            std::vector<Term> items = bags[i].items();
            items[r->second] = e;
            new_bags[i] = Bag(std::move(items));
            out.add(Term::var(t.var_name(), Seq(std::move(new_bags))), c);
          }
          return out;
        }
      }
      return std::nullopt;
    }
    case Term::Kind::Abs: {
      if (auto r = step(t.abs_body(), order, fresh))
        return map_abs(t.abs_binder(), t.abs_binder_type(), *r);
      return std::nullopt;
    }
    case Term::Kind::App: {
      const bool is_redex = t.app_fun().is_abs();
      if (order == RedexOrder::LeftmostOutermost) {
        if (is_redex) return contract(t, fresh);
        if (auto r = step(t.app_fun(), order, fresh))
          return map_app(*r, BagSum::of(t.app_arg()));
      }
      {
        const auto& items = t.app_arg().items();
        const int n = static_cast<int>(items.size());
        for (int k = 0; k < n; ++k) {
          int i = order == RedexOrder::LeftmostOutermost ? k : n - 1 - k;
          if (auto r = step(items[i], order, fresh)) {
            TermSum out;
            for (const auto& [e, c] : r->entries()) {
              std::vector<Term> new_items = items;
              new_items[i] = e;
              out.add(Term::app(t.app_fun(), Bag(std::move(new_items))), c);
            }
            return out;
          }
        }
      }
      if (order == RedexOrder::RightmostInnermost) {
        if (auto r = step(t.app_fun(), order, fresh))
          return map_app(*r, BagSum::of(t.app_arg()));
        if (is_redex) return contract(t, fresh);
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<TermSum> reduce_step(const Term& t, RedexOrder order) {
  FreshNames fresh;
  fresh.reserve_from(t);
  return step(t, order, fresh);
}

std::vector<TermSum> one_step_reducts(const Term& t) {
  std::vector<TermSum> out;
  // Enumerate redex positions by contracting with a traversal that rebuilds
  // the surrounding context around each choice.
  struct Walker {
    std::vector<TermSum>* out;
    FreshNames* fresh;
    void walk(const Term& t, const std::function<Term(const Term&)>& wrap) {
      switch (t.kind()) {
        case Term::Kind::Var: {
          const auto& bags = t.var_args().items();
          for (size_t i = 0; i < bags.size(); ++i) {
            for (int j = 0; j < bags[i].size(); ++j) {
              walk(bags[i].items()[j], [&, i, j](const Term& e) {
                std::vector<Bag> nb = bags;
                std::vector<Term> items = bags[i].items();
                items[j] = e;
                nb[i] = Bag(std::move(items));
                return wrap(Term::var(t.var_name(), Seq(std::move(nb))));
              });
            }
          }
          break;
        }
        case Term::Kind::Abs: {
          walk(t.abs_body(), [&](const Term& e) {
            return wrap(Term::abs(t.abs_binder(), t.abs_binder_type(), e));
          });
          break;
        }
        case Term::Kind::App: {
          if (t.app_fun().is_abs()) {
            TermSum contracted = contract(t, *fresh);
            TermSum wrapped;
            for (const auto& [e, c] : contracted.entries()) wrapped.add(wrap(e), c);
            out->push_back(std::move(wrapped));
          }
          walk(t.app_fun(), [&](const Term& e) {
            return wrap(Term::app(e, t.app_arg()));
          });
          const auto& items = t.app_arg().items();
          for (size_t j = 0; j < items.size(); ++j) {
            walk(items[j], [&, j](const Term& e) {
              std::vector<Term> ni = items;
              ni[j] = e;
              return wrap(Term::app(t.app_fun(), Bag(std::move(ni))));
            });
          }
          break;
        }
      }
    }
  };
  FreshNames fresh;
  fresh.reserve_from(t);
  Walker w{&out, &fresh};
  w.walk(t, [](const Term& e) { return e; });
  return out;
}

TermSum normalize(const TermSum& s, uint64_t fuel, RedexOrder order) {
  TermSum work = s;
  TermSum done;
  while (!work.is_zero()) {
    // Pop one summand.
    auto it = work.entries().begin();
    Term t = it->first;
    Nat c = it->second;
    {
      TermSum rest;
      bool skipped = false;
      for (const auto& [u, k] : work.entries()) {
        if (!skipped && u == t) {
          skipped = true;
          continue;
        }
        rest.add(u, k);
      }
      work = std::move(rest);
    }
    if (is_normal(t)) {
      done.add(t, c);
      continue;
    }
    if (fuel == 0) throw FuelExhausted();
    --fuel;
    auto r = reduce_step(t, order);
    assert(r.has_value());
    TermSum scaled = *r;
    scaled.scale(c);
    work.add(scaled);
  }
  return done;
}

TermSum normalize(const Term& t, uint64_t fuel, RedexOrder order) {
  return normalize(TermSum::of(t), fuel, order);
}

}  // namespace rescal
