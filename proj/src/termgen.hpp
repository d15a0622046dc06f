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

// Seeded type-directed random term generation, biased toward duplicated
// variables and empty bags so that partition combinatorics and
// annihilation both get exercised.

#ifndef RESCAL_TERMGEN_HPP_
#define RESCAL_TERMGEN_HPP_

#include <random>
#include <vector>

#include "typing.hpp"

namespace rescal {

using TermRng = std::mt19937_64;

struct TermGenOptions {
  int max_size = 14;
  double redex_bias = 0.45;      // probability of introducing a redex at o
  double empty_bag_bias = 0.35;  // probability of an empty bag
  double reuse_var_bias = 0.5;   // probability of duplicating bag elements
};

// A random term of the given type, well typed in ctx, with binder names
// disjoint from the context.
Term random_typed_term(const Context& ctx, const Type& type, TermRng& rng,
                       const TermGenOptions& opts = {});

struct CorpusItem {
  Context ctx;
  Type type;
  Term term;
};

// The standard corpus over {o, o -> o, (o -> o) -> o, o -> o -> o} in a
// fixed context, salted with terms whose normal forms carry coefficients
// of at least two and terms normalizing to the zero sum.
std::vector<CorpusItem> make_corpus(int count, uint64_t seed,
                                    const TermGenOptions& opts = {});
Context corpus_context();

}  // namespace rescal

#endif  // RESCAL_TERMGEN_HPP_
