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

// Interpretation of (not necessarily normal) typed expressions as
// strategies, and the soundness harnesses.
//
// Abstractions curry the body's interpretation; a fully applied variable
// lifts the packed interpretation of its arguments under a fresh
// question/answer pair on its context entry (the computed form of
// evaluating against the pointed variable projection); an application
// uncurries the function's interpretation and feeds it the bag product
// paired with the identity, which keeps every step finite: the evaluation
// morphism is never materialized.  Bags and sequences are interpreted as
// actual bags and sequences of strategies at the meta level.

#ifndef RESCAL_INTERP_HPP_
#define RESCAL_INTERP_HPP_

#include <string>
#include <vector>

#include "rewrite.hpp"
#include "strategy.hpp"

namespace rescal {

// SemTerm: a pointed strategy on |Gamma| |- |A|.
using SemTerm = Strategy;
using SemBag = std::vector<Strategy>;   // meta-level multiset
using SemSeq = std::vector<SemBag>;     // meta-level list

// ---------------------------------------------------------------------------
// Combinators
// ---------------------------------------------------------------------------

// The empty bag 1 = eta_B . eps_Gamma: the empty class with coefficient 1.
Strategy unit_morphism(IfacePtr iface);

// f * g = mu_B . (f x g) . delta_A.
Strategy star(const Strategy& f, const Strategy& g);

// Pi of a bag of morphisms (unit for the empty bag).
Strategy big_product(IfacePtr iface, const SemBag& fs);

// <f, g> = (f x g) . delta_Gamma.
Strategy pairing(const Strategy& f, const Strategy& g);

// pack of a sequence: <Pi fs_1, ..., Pi fs_n>, landing on the tensor of the
// given right-hand arenas; eps_Gamma for the empty sequence.
Strategy pack(const Arena& gamma, const std::vector<Arena>& rights,
              const SemSeq& seq);

// f . <id_Gamma, h>, evaluated exactly: f finite on |Gamma| x A |- B, h
// finite on |Gamma| |- A.  The pairing with the identity is instantiated
// lazily at the positions f's support actually uses.
Strategy apply_pair_with_id(const Strategy& f, const Strategy& h,
                            const Arena& gamma, const Arena& domain);

// ---------------------------------------------------------------------------
// Interpretation
// ---------------------------------------------------------------------------

SemTerm interpret_term(const Context& ctx, const Term& t);
SemBag interpret_bag(const Context& ctx, const Bag& b, const Type& type);
SemSeq interpret_seq(const Context& ctx, const Seq& s,
                     const std::vector<Type>& types);
Strategy interpret_sum(const Context& ctx, const TermSum& s, const Type& type);

// Semantic substitution: f . merge . <id, Pi g> for f interpreted over
// Gamma, x:B and g a semantic bag over Gamma at B (merge is the identity on
// tables).  The last context entry is the substituted variable.
Strategy semantic_substitute(const Strategy& f, const Context& gamma,
                             const Type& substituted, const SemBag& g);

// ---------------------------------------------------------------------------
// Cross-validation harnesses
// ---------------------------------------------------------------------------

struct Mismatch {
  std::string key;
  Coeff lhs, rhs;
  std::string detail;
};

struct Report {
  std::vector<Mismatch> mismatches;
  int checked = 0;
  bool ok() const { return mismatches.empty(); }
};

void compare_strategies(const Strategy& lhs, const Strategy& rhs,
                        const std::string& what, Report* report);

// |s| equals |s'| for every one-step reduct s' of every summand.
Report check_invariance(const Context& ctx, const TermSum& s, const Type& type);

// |t| equals the sum of encodings of its normal form, coefficients and all.
Report check_normal_form_correspondence(const Context& ctx, const Term& t);

// Seeded corpus run of the normal-form correspondence.
struct SoundnessSummary {
  int checked = 0;
  int failures = 0;
  int zero_normal_forms = 0;
  int coeff_at_least_two = 0;
  std::string first_failure;
  bool ok() const { return failures == 0; }
};
SoundnessSummary run_soundness(int count, uint64_t seed);

}  // namespace rescal

#endif  // RESCAL_INTERP_HPP_
