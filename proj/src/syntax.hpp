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

// Abstract syntax of the simply-typed eta-long resource calculus.
//
// Application arguments are finite multisets (bags) of terms; variables
// carry the full sequence of argument bags they are applied to.  Terms are
// immutable shared trees; all equality and ordering is alpha-aware (binder
// names never influence comparisons) and bag equality is order-insensitive.

#ifndef RESCAL_SYNTAX_HPP_
#define RESCAL_SYNTAX_HPP_

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace rescal {

// ---------------------------------------------------------------------------
// Simple types
// ---------------------------------------------------------------------------

// A simple type over the single atom `o`, stored in spine form: the list of
// domains of the unique decomposition A1 -> ... -> An -> o.
class Type {
 public:
  Type() : node_(base_node()) {}  // the atom o
  static Type base() { return Type(); }
  static Type arrow(const Type& domain, const Type& codomain);
  static Type from_domains(std::vector<Type> domains);

  bool is_base() const { return node_->domains.empty(); }
  bool is_arrow() const { return !node_->domains.empty(); }
  // Number of domains in the spine (the arity of a variable of this type).
  int arity() const { return static_cast<int>(node_->domains.size()); }
  const std::vector<Type>& domains() const { return node_->domains; }
  const Type& domain() const;    // head domain; precondition: is_arrow()
  Type codomain() const;         // spine with head domain removed

  static int cmp(const Type& a, const Type& b);
  friend bool operator==(const Type& a, const Type& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const Type& a, const Type& b) { return cmp(a, b) != 0; }
  friend bool operator<(const Type& a, const Type& b) { return cmp(a, b) < 0; }

  // Number of occurrences of the atom o.
  int atom_count() const;

  std::string to_string() const;

 private:
  struct Node {
    std::vector<Type> domains;
  };
  explicit Type(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static std::shared_ptr<const Node> base_node();
  std::shared_ptr<const Node> node_;
};

// ---------------------------------------------------------------------------
// Terms, bags, sequences
// ---------------------------------------------------------------------------

class Term;

// A finite multiset of terms.  Element storage order is construction order
// and carries no meaning; all comparisons and printing sort canonically.
class Bag {
 public:
  Bag() = default;
  explicit Bag(std::vector<Term> items) : items_(std::move(items)) {}
  int size() const { return static_cast<int>(items_.size()); }
  bool empty() const { return items_.empty(); }
  const std::vector<Term>& items() const { return items_; }

 private:
  std::vector<Term> items_;
};

// A finite list of bags; order matters.
class Seq {
 public:
  Seq() = default;
  explicit Seq(std::vector<Bag> items) : items_(std::move(items)) {}
  int size() const { return static_cast<int>(items_.size()); }
  bool empty() const { return items_.empty(); }
  const std::vector<Bag>& items() const { return items_; }

 private:
  std::vector<Bag> items_;
};

class Term {
 public:
  enum class Kind { Var, Abs, App };

  // x applied to a (possibly empty) sequence of bags.
  static Term var(std::string name, Seq args = Seq());
  static Term abs(std::string binder, Type binder_type, Term body);
  static Term app(Term fun, Bag arg);

  Kind kind() const { return node_->kind; }
  bool is_var() const { return kind() == Kind::Var; }
  bool is_abs() const { return kind() == Kind::Abs; }
  bool is_app() const { return kind() == Kind::App; }

  const std::string& var_name() const { return node_->name; }
  const Seq& var_args() const { return node_->args; }
  const std::string& abs_binder() const { return node_->name; }
  const Type& abs_binder_type() const { return node_->binder_type; }
  const Term& abs_body() const { return *node_->body; }
  const Term& app_fun() const { return *node_->body; }
  const Bag& app_arg() const { return node_->arg; }

  bool valid() const { return node_ != nullptr; }

 private:
  struct Node {
    Kind kind;
    std::string name;           // Var name / Abs binder
    Seq args;                   // Var
    Type binder_type;           // Abs
    std::shared_ptr<Term> body; // Abs body / App fun
    Bag arg;                    // App
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Alpha-aware total order on terms: bound variables compare by binding
// depth, free variables by name, bags as canonically sorted multisets.
int term_cmp(const Term& a, const Term& b);
int bag_cmp(const Bag& a, const Bag& b);
int seq_cmp(const Seq& a, const Seq& b);

inline bool operator==(const Term& a, const Term& b) { return term_cmp(a, b) == 0; }
inline bool operator!=(const Term& a, const Term& b) { return term_cmp(a, b) != 0; }
inline bool operator==(const Bag& a, const Bag& b) { return bag_cmp(a, b) == 0; }
inline bool operator!=(const Bag& a, const Bag& b) { return bag_cmp(a, b) != 0; }
inline bool operator==(const Seq& a, const Seq& b) { return seq_cmp(a, b) == 0; }
inline bool operator!=(const Seq& a, const Seq& b) { return seq_cmp(a, b) != 0; }

struct TermLess {
  bool operator()(const Term& a, const Term& b) const { return term_cmp(a, b) < 0; }
};
struct BagLess {
  bool operator()(const Bag& a, const Bag& b) const { return bag_cmp(a, b) < 0; }
};
struct SeqLess {
  bool operator()(const Seq& a, const Seq& b) const { return seq_cmp(a, b) < 0; }
};

// Variable-headed application chain: t applied to each bag of the sequence.
// Collapses into the Var node when t is a variable.
Term apply_sequence(const Term& t, const Seq& args);

std::vector<std::string> free_vars(const Term& t);
bool is_free_in(const std::string& name, const Term& t);
// Capture-avoiding renaming of a free variable.
Term rename_free(const Term& t, const std::string& from, const std::string& to);

// ---------------------------------------------------------------------------
// Formal sums with natural coefficients (free N-module over expressions)
// ---------------------------------------------------------------------------

template <typename T, typename Less>
class Sum {
 public:
  using Map = std::map<T, Nat, Less>;

  Sum() = default;
  static Sum zero() { return Sum(); }
  static Sum of(const T& value, Nat coeff = Nat(1)) {
    Sum s;
    s.add(value, std::move(coeff));
    return s;
  }

  void add(const T& value, const Nat& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = entries_.try_emplace(value, coeff);
    if (!inserted) it->second += coeff;
  }
  void add(const Sum& other) {
    for (const auto& [v, c] : other.entries_) add(v, c);
  }
  void scale(const Nat& k) {
    if (k.is_zero()) {
      entries_.clear();
      return;
    }
    for (auto& [v, c] : entries_) c = c * k;
  }

  bool is_zero() const { return entries_.empty(); }
  size_t summand_count() const { return entries_.size(); }
  const Map& entries() const { return entries_; }

  friend Sum operator+(const Sum& a, const Sum& b) {
    Sum r = a;
    r.add(b);
    return r;
  }
  friend bool operator==(const Sum& a, const Sum& b) {
    if (a.entries_.size() != b.entries_.size()) return false;
    auto it = a.entries_.begin();
    auto jt = b.entries_.begin();
    for (; it != a.entries_.end(); ++it, ++jt) {
      if (Less()(it->first, jt->first) || Less()(jt->first, it->first))
        return false;
      if (it->second != jt->second) return false;
    }
    return true;
  }
  friend bool operator!=(const Sum& a, const Sum& b) { return !(a == b); }

 private:
  Map entries_;
};

using TermSum = Sum<Term, TermLess>;
using BagSum = Sum<Bag, BagLess>;
using SeqSum = Sum<Seq, SeqLess>;

inline TermSum sum_add(const TermSum& a, const TermSum& b) { return a + b; }

// ---------------------------------------------------------------------------
// Printing and parsing
// ---------------------------------------------------------------------------

std::string print_term(const Term& t);
std::string print_bag(const Bag& b);
std::string print_term_sum(const TermSum& s);

struct ParseError : std::runtime_error {
  ParseError(size_t position, const std::string& message)
      : std::runtime_error("parse error at " + std::to_string(position) +
                           ": " + message),
        position(position) {}
  size_t position;
};

Type parse_type(const std::string& text);
// Comma-separated list of types; empty input gives the empty list.
std::vector<Type> parse_type_list(const std::string& text);
Term parse_term(const std::string& text);
// "x:T, y:T" -> ordered bindings; empty string gives the empty context.
std::vector<std::pair<std::string, Type>> parse_context(const std::string& text);
// Accepts "ctx |- term", "ctx ⊢ term" or a bare term.
void parse_judgment(const std::string& text,
                    std::vector<std::pair<std::string, Type>>* ctx, Term* term);

}  // namespace rescal

#endif  // RESCAL_SYNTAX_HPP_
