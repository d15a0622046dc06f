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

// The bijection between normal expressions and augmentations.
//
// A normal term over Gamma at type A encodes as a pointed augmentation on
// the interface |Gamma| |- |A|; bags encode as disjoint unions of pointed
// encodings and sequences as component-tagged unions.  Each variable
// occurrence contributes a question/answer pair of events: the answer
// displays to the head of the occurrence's context entry, and the
// occurrence's arguments re-display underneath it.  Decoding inverts each
// step, peeling abstractions along the type's spine and reading the head
// variable off the unique successor of the initial event.

#ifndef RESCAL_CORRESPOND_HPP_
#define RESCAL_CORRESPOND_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "causal.hpp"
#include "rewrite.hpp"
#include "typing.hpp"

namespace rescal {

struct DecodeError : std::runtime_error {
  explicit DecodeError(const std::string& message)
      : std::runtime_error(message) {}
};

// Encoding of normal, well-typed expressions.  Binders are freshened
// internally, so any alpha-representative yields the same canonical key.
Aug encode_term(const Context& ctx, const Term& t);
Aug encode_bag(const Context& ctx, const Bag& b, const Type& type);
Aug encode_seq(const Context& ctx, const Seq& s, const std::vector<Type>& types);

CanonAug encode_term_canonical(const Context& ctx, const Term& t);

// Decoding of valid augmentations on |Gamma| |- |A| (pointed for terms).
// Throws DecodeError when the augmentation violates a structural
// expectation of the bijection (impossible for encode outputs).
Term decode_term(const Aug& q, const Context& ctx, const Type& type);
Bag decode_bag(const Aug& q, const Context& ctx, const Type& type);
Seq decode_seq(const Aug& q, const Context& ctx, const std::vector<Type>& types);

// Display-map surgery shared with the strategy layer.
//
// Currying |Gamma x A| |- |B|  ->  |Gamma| |- |A => B|: pure re-addressing,
// no event changes.  gamma_size/domain_size are node counts of |Gamma| and
// |A|; the codomain must be pointed.
Disp curry_disp(const Disp& d, int gamma_size, int domain_size);
Disp uncurry_disp(const Disp& d, int gamma_size, int domain_size);
Aug curry_aug(const Aug& q, const Arena& gamma, const Arena& domain,
              const Arena& codomain);
Aug uncurry_aug(const Aug& q, const Arena& gamma, const Arena& domain,
                const Arena& codomain);

// The lifting of q on |Gamma| |- X_i (X_i the tensor of the domains of the
// i-th context entry) to a pointed augmentation on |Gamma| |- o: prefixes a
// fresh question/answer pair and re-displays the right side under entry i.
Aug lift_head_occurrence(const Aug& q, const Context& ctx, int index);

// Number of variable-occurrence nodes in a term (each contributes two
// events to the encoding).
int var_occurrence_count(const Term& t);

}  // namespace rescal

#endif  // RESCAL_CORRESPOND_HPP_
