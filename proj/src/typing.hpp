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

// Typing judgments for the eta-long resource calculus.
//
// Terms synthesize their type; bags are checked against an expected type
// (an empty bag checks at any type, so it has no principal type).  The var
// judgment requires a variable to be applied to exactly as many bags as
// its declared type has domains, producing the base type.

#ifndef RESCAL_TYPING_HPP_
#define RESCAL_TYPING_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "syntax.hpp"

namespace rescal {

struct Binding {
  std::string name;
  Type type;
};

// An ordered typing context with distinct names.  Order is significant:
// the arena of a context is the tensor of its entries, indexed by position.
class Context {
 public:
  Context() = default;
  explicit Context(std::vector<Binding> bindings);
  static Context parse(const std::string& text);

  int size() const { return static_cast<int>(bindings_.size()); }
  bool empty() const { return bindings_.empty(); }
  const std::vector<Binding>& bindings() const { return bindings_; }
  const Binding& operator[](int i) const { return bindings_[i]; }
  // Index of the rightmost binding of `name`, or -1.
  int index_of(const std::string& name) const;
  Context extended(const std::string& name, const Type& type) const;

  std::string to_string() const;

 private:
  std::vector<Binding> bindings_;
};

enum class TypeErrorKind {
  UnboundVariable,
  ArityMismatch,
  DomainMismatch,
  NotEtaLong,
  HeterogeneousBag,
};

struct TypeError : std::runtime_error {
  TypeError(TypeErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind(kind) {}
  TypeErrorKind kind;
};

const char* type_error_kind_name(TypeErrorKind kind);

// Synthesizes the type of t in ctx, or throws TypeError.
Type typecheck_term(const Context& ctx, const Term& t);

// Checks every element of b against `expected`; the empty bag checks at any
// type.  Throws TypeError on failure.
void typecheck_bag(const Context& ctx, const Bag& b, const Type& expected);

// Synthesizes the common element type of a nonempty bag; nullopt for the
// empty bag (which has no principal type).
std::optional<Type> synth_bag(const Context& ctx, const Bag& b);

// Checks a sequence item-wise against a list of expected types.
void typecheck_seq(const Context& ctx, const Seq& s,
                   const std::vector<Type>& expected);

// Checks every summand of s at type a.
void typecheck_sum(const Context& ctx, const TermSum& s, const Type& a);

// True iff t contains no application node; for well-typed t this is
// equivalent to t having a derivation avoiding the application rule.
bool is_normal(const Term& t);
bool is_normal_sum(const TermSum& s);

}  // namespace rescal

#endif  // RESCAL_TYPING_HPP_
