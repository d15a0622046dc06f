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

// Configurations, symmetries, positions and augmentations.
//
// A configuration is a finite forest of events displayed into an arena,
// where each branch of the arena may be explored several times.  An
// augmentation enriches the configuration (its static order) with a second
// forest, the dynamic order, subject to the validity conditions below.
// Both are compared up to display-preserving isomorphism via canonical
// forms: forests admit linear-time canonical codes, so no general graph
// isomorphism machinery is involved.

#ifndef RESCAL_CAUSAL_HPP_
#define RESCAL_CAUSAL_HPP_

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "arena.hpp"
#include "rational.hpp"

namespace rescal {

using IfacePtr = std::shared_ptr<const Interface>;
IfacePtr make_iface(Arena left, Arena right);

// ---------------------------------------------------------------------------
// Configurations on a single arena
// ---------------------------------------------------------------------------

struct Configuration {
  std::vector<int> parent;   // static forest, -1 for roots
  std::vector<int> display;  // arena node per event

  int size() const { return static_cast<int>(parent.size()); }
  bool empty() const { return parent.empty(); }
  int add(int parent_event, int arena_node);
  std::vector<int> roots() const;
  std::vector<std::vector<int>> children() const;
};

struct ValidityError : std::runtime_error {
  ValidityError(std::string condition, std::vector<int> witnesses,
                const std::string& detail)
      : std::runtime_error(condition + ": " + detail),
        condition(std::move(condition)),
        witnesses(std::move(witnesses)) {}
  std::string condition;
  std::vector<int> witnesses;
};

// Checks forest shape, minimality-respecting and causality-preserving.
void validate_configuration(const Arena& arena, const Configuration& x);

// Canonical code: complete invariant for display-preserving isomorphism.
std::string configuration_key(const Configuration& x);
// Deterministic representative with events renumbered in canonical order.
Configuration canonical_configuration(const Configuration& x);

// A symmetry class of configurations.
struct Position {
  std::string key;
  Configuration rep;
};
Position position_of(const Configuration& x);

// All display-preserving order-isomorphisms x = y (event maps); empty iff
// the positions differ.  Enumeration groups canonically-equal sibling
// subtrees and takes products of per-group bijections.
std::vector<std::vector<int>> enumerate_symmetries(const Configuration& x,
                                                   const Configuration& y);

// |Sym(x)| by the closed form: product over sibling groups of equal
// canonical code of (multiplicity)!.
Nat sym_count(const Configuration& x);

// Disjoint union of two configurations on the same arena.
Configuration union_star(const Configuration& x, const Configuration& y);
// Configuration x |- y on the flat hom arena hom(a, b).
Configuration hom_pair(const Arena& a, const Arena& b, const Configuration& x,
                       const Configuration& y);
// Configuration on tensor(parts) from per-part configurations; node ids are
// shifted by the part offsets.
Configuration tensor_config(const std::vector<Arena>& arenas,
                            const std::vector<Configuration>& parts);

// All ways to split x into two disjoint sets of its trees (by tree index
// mask); used for instantiating comultiplication and for the splitting
// count |x < y, z|.
std::vector<std::pair<Configuration, Configuration>> tree_splittings(
    const Configuration& x);
// Number of splittings of x into (a tree-set isomorphic to y, one
// isomorphic to z).
Nat splitting_count(const Configuration& x, const Configuration& y,
                    const Configuration& z);

// ---------------------------------------------------------------------------
// Augmentations on a hom interface
// ---------------------------------------------------------------------------

struct Aug {
  IfacePtr iface;
  std::vector<int> sparent;  // static forest (desequentialization)
  std::vector<int> dparent;  // dynamic forest
  std::vector<Disp> disp;

  int size() const { return static_cast<int>(disp.size()); }
  bool empty() const { return disp.empty(); }
  Pol polarity(int e) const { return disp_polarity(*iface, disp[e]); }
  int add(int static_parent, int dyn_parent, Disp d);

  // Events displayed to one side, as a configuration on that side's arena;
  // event_map maps the configuration's events back to aug events.
  Configuration side_config(Side s, std::vector<int>* event_map = nullptr) const;
};

Aug empty_aug(IfacePtr iface);

// Checks, in order: static/dynamic forest shape, configuration conditions
// on the desequentialization, then rule-abiding, courteous, deterministic,
// +-covered, negative.  Throws ValidityError naming the first failure.
void validate_augmentation(const Aug& q);

// Canonical isomorphism class of an augmentation: the key is a complete
// invariant, the representative has events renumbered canonically.  The
// static parent is recorded relative to the dynamic ancestor chain (as a
// depth offset), which rule-abidingness makes well defined.
struct CanonAug {
  std::string key;
  Aug rep;
  bool pointed = false;  // exactly one dynamic-minimal event
};
CanonAug canonicalize(const Aug& q);
std::string aug_key(const Aug& q);

// Copycat augmentation on x |- x: each negative event immediately precedes
// its mirror image.
Aug copycat(const Arena& a, const Configuration& x);

// Disjoint union of augmentations on the same interface (bag of augs).
Aug aug_union(const Aug& a, const Aug& b);

// DOT rendering: static edges dotted, dynamic edges solid.
std::string aug_to_dot(const Aug& q, const std::string& name);

}  // namespace rescal

#endif  // RESCAL_CAUSAL_HPP_
