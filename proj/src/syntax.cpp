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

#include "syntax.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace rescal {

// ---------------------------------------------------------------------------
// Types
// ---------------------------------------------------------------------------

std::shared_ptr<const Type::Node> Type::base_node() {
  static const auto node = std::make_shared<const Node>();
  return node;
}

Type Type::arrow(const Type& domain, const Type& codomain) {
  auto node = std::make_shared<Node>();
  node->domains.reserve(1 + codomain.node_->domains.size());
  node->domains.push_back(domain);
  for (const Type& d : codomain.node_->domains) node->domains.push_back(d);
  return Type(std::move(node));
}

Type Type::from_domains(std::vector<Type> domains) {
  if (domains.empty()) return base();
  auto node = std::make_shared<Node>();
  node->domains = std::move(domains);
  return Type(std::move(node));
}

const Type& Type::domain() const {
  assert(is_arrow());
  return node_->domains.front();
}

Type Type::codomain() const {
  assert(is_arrow());
  return from_domains(std::vector<Type>(node_->domains.begin() + 1,
                                        node_->domains.end()));
}

int Type::cmp(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return 0;
  const auto& da = a.node_->domains;
  const auto& db = b.node_->domains;
  if (da.size() != db.size()) return da.size() < db.size() ? -1 : 1;
  for (size_t i = 0; i < da.size(); ++i) {
    if (int c = cmp(da[i], db[i])) return c;
  }
  return 0;
}

int Type::atom_count() const {
  int n = 1;
  for (const Type& d : node_->domains) n += d.atom_count();
  return n;
}

std::string Type::to_string() const {
  if (is_base()) return "o";
  std::string out;
  for (const Type& d : node_->domains) {
    if (d.is_arrow()) {
      out += "(" + d.to_string() + ") -> ";
    } else {
      out += "o -> ";
    }
  }
  return out + "o";
}

// ---------------------------------------------------------------------------
// Term constructors
// ---------------------------------------------------------------------------

Term Term::var(std::string name, Seq args) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Var;
  node->name = std::move(name);
  node->args = std::move(args);
  return Term(std::move(node));
}

Term Term::abs(std::string binder, Type binder_type, Term body) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Abs;
  node->name = std::move(binder);
  node->binder_type = std::move(binder_type);
  node->body = std::make_shared<Term>(std::move(body));
  return Term(std::move(node));
}

Term Term::app(Term fun, Bag arg) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::App;
  node->body = std::make_shared<Term>(std::move(fun));
  node->arg = std::move(arg);
  return Term(std::move(node));
}

Term apply_sequence(const Term& t, const Seq& args) {
  if (args.empty()) return t;
  if (t.is_var()) {
    std::vector<Bag> bags = t.var_args().items();
    for (const Bag& b : args.items()) bags.push_back(b);
    return Term::var(t.var_name(), Seq(std::move(bags)));
  }
  Term cur = t;
  for (const Bag& b : args.items()) cur = Term::app(cur, b);
  return cur;
}

// ---------------------------------------------------------------------------
// Alpha-aware comparison
// ---------------------------------------------------------------------------

namespace {

// Stack of binder names; a variable resolves to the depth of its innermost
// binding, or to its name when free.
using Scope = std::vector<const std::string*>;

int resolve(const Scope& env, const std::string& name) {
  for (size_t i = env.size(); i-- > 0;) {
    if (*env[i] == name) return static_cast<int>(i);
  }
  return -1;
}

int cmp_term(const Term& a, const Term& b, Scope& ea, Scope& eb);

int cmp_bag(const Bag& a, const Bag& b, Scope& ea, Scope& eb) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  // Sort both sides canonically within their own scope, then compare
  // pointwise across scopes.
  auto sorted = [](const Bag& bag, Scope& env) {
    std::vector<int> idx(bag.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int i, int j) {
      return cmp_term(bag.items()[i], bag.items()[j], env, env) < 0;
    });
    return idx;
  };
  std::vector<int> ia = sorted(a, ea);
  std::vector<int> ib = sorted(b, eb);
  for (int k = 0; k < a.size(); ++k) {
    if (int c = cmp_term(a.items()[ia[k]], b.items()[ib[k]], ea, eb)) return c;
  }
  return 0;
}

int cmp_seq(const Seq& a, const Seq& b, Scope& ea, Scope& eb) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (int i = 0; i < a.size(); ++i) {
    if (int c = cmp_bag(a.items()[i], b.items()[i], ea, eb)) return c;
  }
  return 0;
}

int cmp_term(const Term& a, const Term& b, Scope& ea, Scope& eb) {
  if (a.kind() != b.kind())
    return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
  switch (a.kind()) {
    case Term::Kind::Var: {
      const int da = resolve(ea, a.var_name());
      const int db = resolve(eb, b.var_name());
      if ((da >= 0) != (db >= 0)) return da >= 0 ? -1 : 1;  // bound < free
      if (da >= 0) {
        if (da != db) return da < db ? -1 : 1;
      } else {
        if (int c = a.var_name().compare(b.var_name())) return c < 0 ? -1 : 1;
      }
      return cmp_seq(a.var_args(), b.var_args(), ea, eb);
    }
    case Term::Kind::Abs: {
      if (int c = Type::cmp(a.abs_binder_type(), b.abs_binder_type())) return c;
      ea.push_back(&a.abs_binder());
      eb.push_back(&b.abs_binder());
      int c = cmp_term(a.abs_body(), b.abs_body(), ea, eb);
      ea.pop_back();
      eb.pop_back();
      return c;
    }
    case Term::Kind::App: {
      if (int c = cmp_term(a.app_fun(), b.app_fun(), ea, eb)) return c;
      return cmp_bag(a.app_arg(), b.app_arg(), ea, eb);
    }
  }
  return 0;
}

}  // namespace

int term_cmp(const Term& a, const Term& b) {
  Scope ea, eb;
  return cmp_term(a, b, ea, eb);
}

int bag_cmp(const Bag& a, const Bag& b) {
  Scope ea, eb;
  return cmp_bag(a, b, ea, eb);
}

int seq_cmp(const Seq& a, const Seq& b) {
  Scope ea, eb;
  return cmp_seq(a, b, ea, eb);
}

// ---------------------------------------------------------------------------
// Free variables and renaming
// ---------------------------------------------------------------------------

namespace {

void collect_free(const Term& t, Scope& env, std::vector<std::string>* out) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      if (resolve(env, t.var_name()) < 0) out->push_back(t.var_name());
      for (const Bag& b : t.var_args().items())
        for (const Term& e : b.items()) collect_free(e, env, out);
      break;
    }
    case Term::Kind::Abs: {
      env.push_back(&t.abs_binder());
      collect_free(t.abs_body(), env, out);
      env.pop_back();
      break;
    }
    case Term::Kind::App: {
      collect_free(t.app_fun(), env, out);
      for (const Term& e : t.app_arg().items()) collect_free(e, env, out);
      break;
    }
  }
}

}  // namespace

std::vector<std::string> free_vars(const Term& t) {
  std::vector<std::string> out;
  Scope env;
  collect_free(t, env, &out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_free_in(const std::string& name, const Term& t) {
  for (const std::string& v : free_vars(t))
    if (v == name) return true;
  return false;
}

Term rename_free(const Term& t, const std::string& from, const std::string& to) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      std::vector<Bag> bags;
      bags.reserve(t.var_args().size());
      for (const Bag& b : t.var_args().items()) {
        std::vector<Term> items;
        items.reserve(b.size());
        for (const Term& e : b.items()) items.push_back(rename_free(e, from, to));
        bags.emplace_back(std::move(items));
      }
      const std::string& name = t.var_name() == from ? to : t.var_name();
      return Term::var(name, Seq(std::move(bags)));
    }
    case Term::Kind::Abs: {
      if (t.abs_binder() == from) return t;  // shadowed
      return Term::abs(t.abs_binder(), t.abs_binder_type(),
                       rename_free(t.abs_body(), from, to));
    }
    case Term::Kind::App: {
      std::vector<Term> items;
      items.reserve(t.app_arg().size());
      for (const Term& e : t.app_arg().items())
        items.push_back(rename_free(e, from, to));
      return Term::app(rename_free(t.app_fun(), from, to), Bag(std::move(items)));
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

namespace {

void print_term_rec(const Term& t, Scope& env, std::string* out);

void print_bag_rec(const Bag& b, Scope& env, std::string* out) {
  *out += "[";
  std::vector<int> idx(b.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int i, int j) {
    return cmp_term(b.items()[i], b.items()[j], env, env) < 0;
  });
  for (size_t k = 0; k < idx.size(); ++k) {
    if (k) *out += ", ";
    print_term_rec(b.items()[idx[k]], env, out);
  }
  *out += "]";
}

void print_term_rec(const Term& t, Scope& env, std::string* out) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      *out += t.var_name();
      for (const Bag& b : t.var_args().items()) {
        *out += " ";
        print_bag_rec(b, env, out);
      }
      break;
    }
    case Term::Kind::Abs: {
      *out += "\\" + t.abs_binder() + ":" + t.abs_binder_type().to_string() + ". ";
      env.push_back(&t.abs_binder());
      print_term_rec(t.abs_body(), env, out);
      env.pop_back();
      break;
    }
    case Term::Kind::App: {
      // Parenthesize the head unless it is itself an application chain;
      // a bare variable head must be wrapped so the argument bags are not
      // reabsorbed into the variable's sequence when reparsing.
      const bool parens = !t.app_fun().is_app();
      if (parens) *out += "(";
      print_term_rec(t.app_fun(), env, out);
      if (parens) *out += ")";
      *out += " ";
      print_bag_rec(t.app_arg(), env, out);
      break;
    }
  }
}

}  // namespace

std::string print_term(const Term& t) {
  std::string out;
  Scope env;
  print_term_rec(t, env, &out);
  return out;
}

std::string print_bag(const Bag& b) {
  std::string out;
  Scope env;
  print_bag_rec(b, env, &out);
  return out;
}

std::string print_term_sum(const TermSum& s) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : s.entries()) {
    if (!first) out += " + ";
    first = false;
    if (!c.is_one()) out += c.to_string() + " * ";
    out += print_term(t);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

enum class Tok {
  Ident, Lambda, Colon, Dot, Comma, LBracket, RBracket, LParen, RParen,
  Arrow, Turnstile, End
};

struct Token {
  Tok kind;
  std::string text;
  size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  auto is_ident_start = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  auto is_ident = [&](char c) {
    return is_ident_start(c) || (c >= '0' && c <= '9') || c == '\'';
  };
  while (i < s.size()) {
    char c = s[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    size_t start = i;
    if (is_ident_start(c)) {
      size_t j = i;
      while (j < s.size() && is_ident(s[j])) ++j;
      out.push_back({Tok::Ident, s.substr(i, j - i), start});
      i = j;
      continue;
    }
    switch (c) {
      case '\\': out.push_back({Tok::Lambda, "\\", start}); ++i; continue;
      case ':': out.push_back({Tok::Colon, ":", start}); ++i; continue;
      case '.': out.push_back({Tok::Dot, ".", start}); ++i; continue;
      case ',': out.push_back({Tok::Comma, ",", start}); ++i; continue;
      case '[': out.push_back({Tok::LBracket, "[", start}); ++i; continue;
      case ']': out.push_back({Tok::RBracket, "]", start}); ++i; continue;
      case '(': out.push_back({Tok::LParen, "(", start}); ++i; continue;
      case ')': out.push_back({Tok::RParen, ")", start}); ++i; continue;
      default: break;
    }
    if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      out.push_back({Tok::Arrow, "->", start});
      i += 2;
      continue;
    }
    if (c == '|' && i + 1 < s.size() && s[i + 1] == '-') {
      out.push_back({Tok::Turnstile, "|-", start});
      i += 2;
      continue;
    }
    // UTF-8 turnstile
    if (static_cast<unsigned char>(c) == 0xE2 && i + 2 < s.size() &&
        static_cast<unsigned char>(s[i + 1]) == 0x8A &&
        static_cast<unsigned char>(s[i + 2]) == 0xA2) {
      out.push_back({Tok::Turnstile, "|-", start});
      i += 3;
      continue;
    }
    throw ParseError(start, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_++]; }
  bool at(Tok k) const { return peek().kind == k; }
  Token expect(Tok k, const std::string& what) {
    if (!at(k)) throw ParseError(peek().pos, "expected " + what);
    return next();
  }

  Type type() {
    Type left = type_atom();
    if (at(Tok::Arrow)) {
      next();
      return Type::arrow(left, type());
    }
    return left;
  }

  Type type_atom() {
    if (at(Tok::LParen)) {
      next();
      Type t = type();
      expect(Tok::RParen, "')'");
      return t;
    }
    Token id = expect(Tok::Ident, "a type");
    if (id.text != "o")
      throw ParseError(id.pos, "unknown type '" + id.text + "' (expected 'o')");
    return Type::base();
  }

  Term term() {
    if (at(Tok::Lambda)) {
      next();
      Token id = expect(Tok::Ident, "a binder name");
      expect(Tok::Colon, "':' with a binder type annotation");
      Type t = type();
      expect(Tok::Dot, "'.'");
      return Term::abs(id.text, t, term());
    }
    if (at(Tok::Ident)) {
      Token id = next();
      std::vector<Bag> bags;
      while (at(Tok::LBracket)) bags.push_back(bag());
      return Term::var(id.text, Seq(std::move(bags)));
    }
    if (at(Tok::LParen)) {
      next();
      Term head = term();
      expect(Tok::RParen, "')'");
      while (at(Tok::LBracket)) head = Term::app(head, bag());
      return head;
    }
    throw ParseError(peek().pos, "expected a term");
  }

  Bag bag() {
    expect(Tok::LBracket, "'['");
    std::vector<Term> items;
    if (!at(Tok::RBracket)) {
      items.push_back(term());
      while (at(Tok::Comma)) {
        next();
        items.push_back(term());
      }
    }
    expect(Tok::RBracket, "']'");
    return Bag(std::move(items));
  }

  std::vector<std::pair<std::string, Type>> context() {
    std::vector<std::pair<std::string, Type>> out;
    if (at(Tok::End) || at(Tok::Turnstile)) return out;
    for (;;) {
      Token id = expect(Tok::Ident, "a variable name");
      expect(Tok::Colon, "':'");
      out.emplace_back(id.text, type());
      if (!at(Tok::Comma)) break;
      next();
    }
    return out;
  }

  void done() const {
    if (!at(Tok::End)) throw ParseError(peek().pos, "trailing input");
  }

  bool has_turnstile() const {
    for (const Token& t : toks_)
      if (t.kind == Tok::Turnstile) return true;
    return false;
  }

  void skip_turnstile() { expect(Tok::Turnstile, "'|-'"); }

 private:
  std::vector<Token> toks_;
  size_t pos_ = 0;
};

}  // namespace

Type parse_type(const std::string& text) {
  Parser p(text);
  Type t = p.type();
  p.done();
  return t;
}

std::vector<Type> parse_type_list(const std::string& text) {
  Parser p(text);
  std::vector<Type> out;
  if (p.at(Tok::End)) return out;
  out.push_back(p.type());
  while (p.at(Tok::Comma)) {
    p.next();
    out.push_back(p.type());
  }
  p.done();
  return out;
}

Term parse_term(const std::string& text) {
  Parser p(text);
  Term t = p.term();
  p.done();
  return t;
}

std::vector<std::pair<std::string, Type>> parse_context(const std::string& text) {
  Parser p(text);
  auto ctx = p.context();
  p.done();
  return ctx;
}

void parse_judgment(const std::string& text,
                    std::vector<std::pair<std::string, Type>>* ctx, Term* term) {
  Parser p(text);
  if (p.has_turnstile()) {
    *ctx = p.context();
    p.skip_turnstile();
  } else {
    ctx->clear();
  }
  *term = p.term();
  p.done();
}

}  // namespace rescal
