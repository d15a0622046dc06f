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

#include "typing.hpp"

#include <set>

namespace rescal {

namespace {

// Scoped environment for checking: unlike Context it tolerates shadowing,
// with the rightmost binding winning.
using Env = std::vector<Binding>;

const Type* lookup(const Env& env, const std::string& name) {
  for (size_t i = env.size(); i-- > 0;) {
    if (env[i].name == name) return &env[i].type;
  }
  return nullptr;
}

Type check_term(Env& env, const Term& t);

std::optional<Type> check_bag_synth(Env& env, const Bag& b) {
  std::optional<Type> common;
  for (const Term& e : b.items()) {
    Type a = check_term(env, e);
    if (!common) {
      common = a;
    } else if (*common != a) {
      throw TypeError(TypeErrorKind::HeterogeneousBag,
                      "bag mixes elements of types " + common->to_string() +
                          " and " + a.to_string());
    }
  }
  return common;
}

void check_bag_against(Env& env, const Bag& b, const Type& expected) {
  std::optional<Type> common = check_bag_synth(env, b);
  if (common && *common != expected)
    throw TypeError(TypeErrorKind::DomainMismatch,
                    "bag has type " + common->to_string() + ", expected " +
                        expected.to_string());
}

void check_seq_against(Env& env, const Seq& s, const std::vector<Type>& expected) {
  if (s.size() != static_cast<int>(expected.size()))
    throw TypeError(TypeErrorKind::ArityMismatch,
                    "sequence of length " + std::to_string(s.size()) +
                        " against " + std::to_string(expected.size()) +
                        " types");
  for (int i = 0; i < s.size(); ++i)
    check_bag_against(env, s.items()[i], expected[i]);
}

Type check_term(Env& env, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      const Type* a = lookup(env, t.var_name());
      if (a == nullptr)
        throw TypeError(TypeErrorKind::UnboundVariable,
                        "unbound variable '" + t.var_name() + "'");
      const int arity = a->arity();
      const int applied = t.var_args().size();
      if (applied < arity)
        throw TypeError(TypeErrorKind::NotEtaLong,
                        "variable '" + t.var_name() + "' of type " +
                            a->to_string() + " applied to " +
                            std::to_string(applied) + " of " +
                            std::to_string(arity) + " argument bags");
      if (applied > arity)
        throw TypeError(TypeErrorKind::ArityMismatch,
                        "variable '" + t.var_name() + "' of type " +
                            a->to_string() + " applied to " +
                            std::to_string(applied) + " argument bags");
      check_seq_against(env, t.var_args(), a->domains());
      return Type::base();
    }
    case Term::Kind::Abs: {
      env.push_back({t.abs_binder(), t.abs_binder_type()});
      Type body = check_term(env, t.abs_body());
      env.pop_back();
      return Type::arrow(t.abs_binder_type(), body);
    }
    case Term::Kind::App: {
      Type fun = check_term(env, t.app_fun());
      if (!fun.is_arrow())
        throw TypeError(TypeErrorKind::ArityMismatch,
                        "application of a term of base type");
      check_bag_against(env, t.app_arg(), fun.domain());
      return fun.codomain();
    }
  }
  throw TypeError(TypeErrorKind::DomainMismatch, "malformed term");
}

}  // namespace

Context::Context(std::vector<Binding> bindings) : bindings_(std::move(bindings)) {
  std::set<std::string> seen;
  for (const Binding& b : bindings_) {
    if (!seen.insert(b.name).second)
      throw std::invalid_argument("duplicate context variable: " + b.name);
  }
}

Context Context::parse(const std::string& text) {
  std::vector<Binding> bs;
  for (auto& [name, type] : parse_context(text)) bs.push_back({name, type});
  return Context(std::move(bs));
}

int Context::index_of(const std::string& name) const {
  for (int i = size(); i-- > 0;) {
    if (bindings_[i].name == name) return i;
  }
  return -1;
}

Context Context::extended(const std::string& name, const Type& type) const {
  std::vector<Binding> bs = bindings_;
  bs.push_back({name, type});
  return Context(std::move(bs));
}

std::string Context::to_string() const {
  std::string out;
  for (int i = 0; i < size(); ++i) {
    if (i) out += ", ";
    out += bindings_[i].name + ":" + bindings_[i].type.to_string();
  }
  return out;
}

const char* type_error_kind_name(TypeErrorKind kind) {
  switch (kind) {
    case TypeErrorKind::UnboundVariable: return "UnboundVariable";
    case TypeErrorKind::ArityMismatch: return "ArityMismatch";
    case TypeErrorKind::DomainMismatch: return "DomainMismatch";
    case TypeErrorKind::NotEtaLong: return "NotEtaLong";
    case TypeErrorKind::HeterogeneousBag: return "HeterogeneousBag";
  }
  return "TypeError";
}

Type typecheck_term(const Context& ctx, const Term& t) {
  Env env = ctx.bindings();
  return check_term(env, t);
}

void typecheck_bag(const Context& ctx, const Bag& b, const Type& expected) {
  Env env = ctx.bindings();
  check_bag_against(env, b, expected);
}

std::optional<Type> synth_bag(const Context& ctx, const Bag& b) {
  Env env = ctx.bindings();
  return check_bag_synth(env, b);
}

void typecheck_seq(const Context& ctx, const Seq& s,
                   const std::vector<Type>& expected) {
  Env env = ctx.bindings();
  check_seq_against(env, s, expected);
}

void typecheck_sum(const Context& ctx, const TermSum& s, const Type& a) {
  for (const auto& [t, c] : s.entries()) {
    Type got = typecheck_term(ctx, t);
    if (got != a)
      throw TypeError(TypeErrorKind::DomainMismatch,
                      "summand has type " + got.to_string() + ", expected " +
                          a.to_string());
  }
}

namespace {

bool has_app(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var:
      for (const Bag& b : t.var_args().items())
        for (const Term& e : b.items())
          if (has_app(e)) return true;
      return false;
    case Term::Kind::Abs:
      return has_app(t.abs_body());
    case Term::Kind::App:
      return true;
  }
  return false;
}

}  // namespace

bool is_normal(const Term& t) { return !has_app(t); }

bool is_normal_sum(const TermSum& s) {
  for (const auto& [t, c] : s.entries())
    if (!is_normal(t)) return false;
  return true;
}

}  // namespace rescal
