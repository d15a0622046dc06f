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

// Equational law checks for the category of strategies: (co)monoid,
// bialgebra and pointed-identity laws compared under a finite window, and
// the bag-compatibility laws checked exactly on interpreted instances.

#ifndef RESCAL_LAWS_HPP_
#define RESCAL_LAWS_HPP_

#include <string>
#include <vector>

#include "interp.hpp"

namespace rescal {

struct LawResult {
  std::string name;
  bool ok;
  std::string detail;  // counterexample description when !ok
};

// Monoid, comonoid, bialgebra (including the distributivity of
// comultiplication over multiplication) and pointed-identity laws over one
// arena, compared on all classes within the window.
std::vector<LawResult> check_structural_laws(const Arena& a, int window);

// Compatibility of bags of pointed morphisms with comultiplication and the
// counit, and the singleton-extraction law of the pointed identity, on the
// bag of interpretations of the given normal terms.  Exact comparisons.
std::vector<LawResult> check_pointed_bag_laws(const Context& ctx,
                                              const Type& type,
                                              const std::vector<Term>& terms);

// Dual compatibility for bags of co-pointed morphisms (built from copycats
// over pointed positions of a).
std::vector<LawResult> check_copointed_bag_laws(const Arena& a, int max_events);

// Everything above with default instances, as run by the CLI.
std::vector<LawResult> check_all_laws(const Arena& a, int window);

}  // namespace rescal

#endif  // RESCAL_LAWS_HPP_
