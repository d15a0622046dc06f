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

// Arenas: finite polarized forests interpreting types and contexts.
//
// Moves are stored in a preorder node table determined by the construction,
// so structurally equal constructions produce identical tables and node ids
// double as stable addresses.  The tensor is table concatenation, which
// makes it strictly associative with a strict unit; the arrow grafts the
// (re-polarized) domain forest under the codomain root.  With this layout
// the arena of a type B1 -> ... -> Bn -> o coincides with the arena of
// (B1 x ... x Bn) => o, and the arena of a context is the concatenation of
// the arenas of its entries.

#ifndef RESCAL_ARENA_HPP_
#define RESCAL_ARENA_HPP_

#include <memory>
#include <string>
#include <vector>

#include "typing.hpp"

namespace rescal {

enum class Pol : int8_t { Neg = -1, Pos = 1 };
inline Pol flip(Pol p) { return p == Pol::Neg ? Pol::Pos : Pol::Neg; }
inline char pol_char(Pol p) { return p == Pol::Neg ? '-' : '+'; }

// A finite negative arena (all roots negative, polarities alternating).
class Arena {
 public:
  Arena();  // empty arena

  static Arena empty();
  static Arena atom();  // the single negative move of the base type
  static Arena tensor(const std::vector<Arena>& parts);
  // Every polarity reversed.  The result is generally not negative; it
  // only appears inside hom arenas.
  static Arena dual(const Arena& a);
  // The hom arena dual(a) x b, the ambient game for strategies from a to
  // b.  Interface keeps the two sides apart; this flat form exists for
  // callers that want a single forest.
  static Arena hom(const Arena& a, const Arena& b);
  // Domain moves flipped and grafted under the codomain root; requires a
  // pointed codomain.  (The general form over a non-pointed codomain is the
  // tensor of pointwise arrows.)
  static Arena arrow(const Arena& domain, const Arena& codomain);
  static Arena of_type(const Type& t);
  static Arena of_context(const Context& ctx);
  // Tensor of the domain arenas of a type's spine (the arena a variable's
  // argument sequence lives on).
  static Arena of_domains(const Type& t);

  int size() const { return static_cast<int>(parent_.size()); }
  bool is_empty() const { return parent_.empty(); }
  int parent(int node) const { return parent_[node]; }
  Pol polarity(int node) const { return pol_[node]; }
  const std::vector<int>& children(int node) const { return children_[node]; }
  const std::vector<int>& roots() const { return roots_; }
  bool is_root(int node) const { return parent_[node] < 0; }
  bool is_pointed() const { return roots_.size() == 1; }
  int depth(int node) const;

  // Construction-stable address: root index followed by child indices.
  std::vector<int> address(int node) const;
  int node_at(const std::vector<int>& address) const;  // -1 if absent

  friend bool operator==(const Arena& a, const Arena& b) {
    return a.parent_ == b.parent_ && a.pol_ == b.pol_;
  }
  friend bool operator!=(const Arena& a, const Arena& b) { return !(a == b); }

  // Node id offset of the i-th part inside a tensor-of-parts layout, given
  // the part sizes in order.
  static int part_offset(const std::vector<Arena>& parts, int i);

  std::string to_string() const;  // compact structural description

 private:
  void add_tree(const Arena& other, int other_root, int new_parent, bool flipped);
  void check_invariants() const;

  std::vector<int> parent_;               // -1 for roots
  std::vector<Pol> pol_;
  std::vector<std::vector<int>> children_;
  std::vector<int> roots_;
};

// The hom arena A |- B, the ambient interface of a strategy from A to B.
// Events display to one side; polarities on the left are reversed.
struct Interface {
  Arena left;
  Arena right;

  friend bool operator==(const Interface& a, const Interface& b) {
    return a.left == b.left && a.right == b.right;
  }
  friend bool operator!=(const Interface& a, const Interface& b) {
    return !(a == b);
  }
  std::string to_string() const {
    return left.to_string() + " |- " + right.to_string();
  }
};

enum class Side : int8_t { L = 0, R = 1 };

struct Disp {
  Side side;
  int node;
  friend bool operator==(const Disp& a, const Disp& b) {
    return a.side == b.side && a.node == b.node;
  }
  friend bool operator!=(const Disp& a, const Disp& b) { return !(a == b); }
  friend bool operator<(const Disp& a, const Disp& b) {
    if (a.side != b.side) return a.side < b.side;
    return a.node < b.node;
  }
};

inline const Arena& side_arena(const Interface& i, Side s) {
  return s == Side::L ? i.left : i.right;
}
inline Pol disp_polarity(const Interface& i, const Disp& d) {
  Pol p = side_arena(i, d.side).polarity(d.node);
  return d.side == Side::L ? flip(p) : p;
}

// DOT rendering of an arena forest (dotted parent edges, polarity labels).
std::string arena_to_dot(const Arena& a, const std::string& name);

}  // namespace rescal

#endif  // RESCAL_ARENA_HPP_
