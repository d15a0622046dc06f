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

#include "arena.hpp"

#include <cassert>
#include <stdexcept>

namespace rescal {

Arena::Arena() = default;

Arena Arena::empty() { return Arena(); }

Arena Arena::atom() {
  Arena a;
  a.parent_.push_back(-1);
  a.pol_.push_back(Pol::Neg);
  a.children_.emplace_back();
  a.roots_.push_back(0);
  return a;
}

// Copies the subtree of `other` rooted at other_root into *this under
// new_parent (-1 for a new root), flipping polarities when requested.
void Arena::add_tree(const Arena& other, int other_root, int new_parent,
                     bool flipped) {
  int id = size();
  parent_.push_back(new_parent);
  pol_.push_back(flipped ? flip(other.pol_[other_root]) : other.pol_[other_root]);
  children_.emplace_back();
  if (new_parent < 0) {
    roots_.push_back(id);
  } else {
    children_[new_parent].push_back(id);
  }
  for (int c : other.children_[other_root]) add_tree(other, c, id, flipped);
}

Arena Arena::tensor(const std::vector<Arena>& parts) {
  Arena out;
  for (const Arena& p : parts)
    for (int r : p.roots_) out.add_tree(p, r, -1, false);
  out.check_invariants();
  return out;
}

Arena Arena::dual(const Arena& a) {
  Arena out;
  for (int r : a.roots_) out.add_tree(a, r, -1, true);
  out.check_invariants();
  return out;
}

Arena Arena::hom(const Arena& a, const Arena& b) {
  return tensor({dual(a), b});
}

Arena Arena::arrow(const Arena& domain, const Arena& codomain) {
  if (codomain.is_empty()) return Arena();
  if (!codomain.is_pointed()) {
    // Tensor of pointwise arrows over the codomain's roots.
    std::vector<Arena> parts;
    for (int r : codomain.roots_) {
      Arena comp;
      comp.add_tree(codomain, r, -1, false);
      parts.push_back(arrow(domain, comp));
    }
    return tensor(parts);
  }
  Arena out;
  const int cr = codomain.roots_[0];
  out.parent_.push_back(-1);
  out.pol_.push_back(codomain.pol_[cr]);
  out.children_.emplace_back();
  out.roots_.push_back(0);
  for (int r : domain.roots_) out.add_tree(domain, r, 0, true);
  for (int c : codomain.children_[cr]) out.add_tree(codomain, c, 0, false);
  out.check_invariants();
  return out;
}

Arena Arena::of_type(const Type& t) {
  if (t.is_base()) return atom();
  return arrow(of_type(t.domain()), of_type(t.codomain()));
}

Arena Arena::of_context(const Context& ctx) {
  std::vector<Arena> parts;
  parts.reserve(ctx.size());
  for (const Binding& b : ctx.bindings()) parts.push_back(of_type(b.type));
  return tensor(parts);
}

Arena Arena::of_domains(const Type& t) {
  std::vector<Arena> parts;
  parts.reserve(t.domains().size());
  for (const Type& d : t.domains()) parts.push_back(of_type(d));
  return tensor(parts);
}

int Arena::depth(int node) const {
  int d = 0;
  while (parent_[node] >= 0) {
    node = parent_[node];
    ++d;
  }
  return d;
}

std::vector<int> Arena::address(int node) const {
  std::vector<int> rev;
  while (parent_[node] >= 0) {
    const auto& sibs = children_[parent_[node]];
    for (size_t i = 0; i < sibs.size(); ++i) {
      if (sibs[i] == node) {
        rev.push_back(static_cast<int>(i));
        break;
      }
    }
    node = parent_[node];
  }
  for (size_t i = 0; i < roots_.size(); ++i) {
    if (roots_[i] == node) {
      rev.push_back(static_cast<int>(i));
      break;
    }
  }
  return std::vector<int>(rev.rbegin(), rev.rend());
}

int Arena::node_at(const std::vector<int>& address) const {
  if (address.empty()) return -1;
  if (address[0] < 0 || address[0] >= static_cast<int>(roots_.size())) return -1;
  int node = roots_[address[0]];
  for (size_t i = 1; i < address.size(); ++i) {
    const auto& cs = children_[node];
    if (address[i] < 0 || address[i] >= static_cast<int>(cs.size())) return -1;
    node = cs[address[i]];
  }
  return node;
}

int Arena::part_offset(const std::vector<Arena>& parts, int i) {
  int off = 0;
  for (int k = 0; k < i; ++k) off += parts[k].size();
  return off;
}

void Arena::check_invariants() const {
  // Alternation; negativity holds for everything except duals, whose roots
  // flip by construction.
  for (int n = 0; n < size(); ++n) {
    if (parent_[n] >= 0) {
      assert(parent_[n] < size());
      assert(pol_[n] == flip(pol_[parent_[n]]));
    }
  }
}

namespace {

void describe_tree(const Arena& a, int node, std::string* out) {
  *out += pol_char(a.polarity(node));
  const auto& cs = a.children(node);
  if (!cs.empty()) {
    *out += "(";
    for (size_t i = 0; i < cs.size(); ++i) {
      if (i) *out += " ";
      describe_tree(a, cs[i], out);
    }
    *out += ")";
  }
}

}  // namespace

std::string Arena::to_string() const {
  if (is_empty()) return "1";
  std::string out;
  for (size_t i = 0; i < roots_.size(); ++i) {
    if (i) out += " x ";
    describe_tree(*this, roots_[i], &out);
  }
  return out;
}

std::string arena_to_dot(const Arena& a, const std::string& name) {
  std::string out = "digraph \"" + name + "\" {\n  rankdir=BT;\n";
  for (int n = 0; n < a.size(); ++n) {
    out += "  n" + std::to_string(n) + " [label=\"q" +
           std::string(1, pol_char(a.polarity(n))) + "\"];\n";
  }
  for (int n = 0; n < a.size(); ++n) {
    if (a.parent(n) >= 0) {
      out += "  n" + std::to_string(n) + " -> n" + std::to_string(a.parent(n)) +
             " [style=dotted, arrowhead=none];\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace rescal
