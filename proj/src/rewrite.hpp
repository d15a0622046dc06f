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

// Resource substitution and reduction.
//
// Substituting a bag into a term distributes the bag's elements across the
// occurrences of the variable in all possible ways, summing the results;
// a mismatch between resources offered and consumed yields the zero sum.

#ifndef RESCAL_REWRITE_HPP_
#define RESCAL_REWRITE_HPP_

#include <optional>
#include <stdexcept>
#include <vector>

#include "syntax.hpp"

namespace rescal {

// All k^|b| ways of assigning each element of b (by index) to one of k
// blocks, as block tuples.  Sums over this list do not depend on the
// element enumeration order.
std::vector<std::vector<Bag>> enumerate_partitionings(const Bag& b, int k);

// Deterministic generator of names unseen in any input expression.
class FreshNames {
 public:
  FreshNames() = default;
  std::string next();
  // Marks every name occurring in t (free or bound) as taken.
  void reserve_from(const Term& t);
  void reserve(const std::string& name);

 private:
  std::vector<std::string> taken_;
  int counter_ = 0;
};

TermSum substitute_term(const Term& t, const std::string& x, const Bag& b,
                        FreshNames& fresh);
BagSum substitute_bag(const Bag& target, const std::string& x, const Bag& b,
                      FreshNames& fresh);
SeqSum substitute_seq(const Seq& target, const std::string& x, const Bag& b,
                      FreshNames& fresh);

// Convenience wrappers seeding the fresh-name pool from the inputs.
TermSum substitute_term(const Term& t, const std::string& x, const Bag& b);

// Renames binders so that all binders are pairwise distinct and disjoint
// from both free variables and `avoid`.
Term freshen_binders(const Term& t, const std::vector<std::string>& avoid);

enum class RedexOrder { LeftmostOutermost, RightmostInnermost };

// Contracts one redex chosen by `order`; nullopt when t is normal.
std::optional<TermSum> reduce_step(const Term& t,
                                   RedexOrder order = RedexOrder::LeftmostOutermost);

// Every way of contracting a single redex of t (one sum per redex position).
std::vector<TermSum> one_step_reducts(const Term& t);

struct FuelExhausted : std::runtime_error {
  FuelExhausted() : std::runtime_error("normalization fuel exhausted") {}
};

inline constexpr uint64_t kDefaultFuel = 1000000;

// Fixed point of reduce_step extended linearly to sums.  Typed input always
// terminates; the fuel bound turns an engine bug into an error instead of a
// hang.
TermSum normalize(const TermSum& s, uint64_t fuel = kDefaultFuel,
                  RedexOrder order = RedexOrder::LeftmostOutermost);
TermSum normalize(const Term& t, uint64_t fuel = kDefaultFuel,
                  RedexOrder order = RedexOrder::LeftmostOutermost);

}  // namespace rescal

#endif  // RESCAL_REWRITE_HPP_
