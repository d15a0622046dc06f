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

#include "rescal/rescal.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "correspond.hpp"
#include "interp.hpp"
#include "json_io.hpp"
#include "laws.hpp"
#include "rewrite.hpp"
#include "strategy.hpp"
#include "termgen.hpp"

using namespace rescal;

struct rescal_term {
  Context ctx;
  Term term;
  Type type;
};

struct rescal_strategy {
  Strategy strategy;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_error(char** error, const std::string& message) {
  if (error != nullptr) *error = dup_string(message);
}

// Maps C++ failures onto status codes; `fn` does the work.
template <typename Fn>
rescal_status guarded(char** error, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    set_error(error, e.what());
    return RESCAL_ERR_PARSE;
  } catch (const TypeError& e) {
    set_error(error, std::string(type_error_kind_name(e.kind)) + ": " +
                         e.what());
    return RESCAL_ERR_TYPE;
  } catch (const JsonError& e) {
    set_error(error, e.what());
    return RESCAL_ERR_INVALID;
  } catch (const ValidityError& e) {
    set_error(error, e.what());
    return RESCAL_ERR_INVALID;
  } catch (const DecodeError& e) {
    set_error(error, e.what());
    return RESCAL_ERR_INVALID;
  } catch (const std::invalid_argument& e) {
    set_error(error, e.what());
    return RESCAL_ERR_INVALID;
  } catch (const std::exception& e) {
    set_error(error, e.what());
    return RESCAL_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* rescal_version(void) { return "rescal 1.0.0"; }

void rescal_string_free(char* s) { std::free(s); }

rescal_status rescal_term_parse(const char* input, rescal_term** out,
                                char** error) {
  if (input == nullptr || out == nullptr) {
    set_error(error, "null argument");
    return RESCAL_ERR_INVALID;
  }
  return guarded(error, [&] {
    std::vector<std::pair<std::string, Type>> raw;
    Term term = Term::var("_");
    parse_judgment(input, &raw, &term);
    std::vector<Binding> bindings;
    for (auto& [name, type] : raw) bindings.push_back({name, type});
    Context ctx{std::move(bindings)};
    Type type = typecheck_term(ctx, term);
    *out = new rescal_term{std::move(ctx), std::move(term), std::move(type)};
    return RESCAL_OK;
  });
}

void rescal_term_free(rescal_term* t) { delete t; }

rescal_status rescal_term_print(const rescal_term* t, char** out) {
  if (t == nullptr || out == nullptr) return RESCAL_ERR_INVALID;
  std::string ctx = t->ctx.to_string();
  *out = dup_string(ctx.empty() ? print_term(t->term)
                                : ctx + " |- " + print_term(t->term));
  return RESCAL_OK;
}

rescal_status rescal_term_type(const rescal_term* t, char** out) {
  if (t == nullptr || out == nullptr) return RESCAL_ERR_INVALID;
  *out = dup_string(t->type.to_string());
  return RESCAL_OK;
}

rescal_status rescal_term_normalize(const rescal_term* t, uint64_t fuel,
                                    char** out, char** error) {
  if (t == nullptr || out == nullptr) return RESCAL_ERR_INVALID;
  return guarded(error, [&] {
    TermSum nf = normalize(t->term, fuel == 0 ? kDefaultFuel : fuel);
    *out = dup_string(print_term_sum(nf));
    return RESCAL_OK;
  });
}

rescal_status rescal_term_encode(const rescal_term* t, char** aug_json,
                                 char** error) {
  if (t == nullptr || aug_json == nullptr) return RESCAL_ERR_INVALID;
  return guarded(error, [&] {
    if (!is_normal(t->term)) {
      set_error(error, "encode requires a normal term (normalize first)");
      return RESCAL_ERR_INVALID;
    }
    Aug q = encode_term(t->ctx, t->term);
    *aug_json = dup_string(aug_to_json(canonicalize(q).rep, &t->ctx));
    return RESCAL_OK;
  });
}

rescal_status rescal_decode(const char* aug_json, const char* judgment,
                            char** term_out, char** error) {
  if (aug_json == nullptr || term_out == nullptr) return RESCAL_ERR_INVALID;
  return guarded(error, [&] {
    Context named;
    Aug q = aug_from_json(aug_json, &named);
    // The target context and type: from the explicit judgment string when
    // given ("ctx |- type"), otherwise read off the augmentation's arena.
    Context ctx;
    Type type;
    std::string jud = judgment == nullptr ? "" : judgment;
    if (!jud.empty()) {
      auto sep = jud.find("|-");
      if (sep == std::string::npos) {
        set_error(error, "judgment must have the form \"ctx |- type\"");
        return RESCAL_ERR_INVALID;
      }
      ctx = Context::parse(jud.substr(0, sep));
      type = parse_type(jud.substr(sep + 2));
      if (Arena::of_context(ctx) != q.iface->left ||
          Arena::of_type(type) != q.iface->right) {
        set_error(error, "judgment does not match the augmentation's arena");
        return RESCAL_ERR_INVALID;
      }
    } else {
      if (Arena::of_context(named) == q.iface->left) {
        ctx = named;
      } else {
        // Synthesize entry names x0, x1, ... for an anonymous left side.
        std::string left = arena_side_to_string(q.iface->left);
        std::vector<Binding> bindings;
        int i = 0;
        if (left != "1")
          for (const Type& a : parse_type_list(left))
            bindings.push_back({"x" + std::to_string(i++), a});
        ctx = Context(std::move(bindings));
      }
      std::vector<Type> rights = parse_type_list(
          arena_side_to_string(q.iface->right));
      if (rights.size() != 1) {
        set_error(error, "term decoding needs a pointed right side");
        return RESCAL_ERR_INVALID;
      }
      type = rights[0];
    }
    Term t = decode_term(q, ctx, type);
    std::string ctx_str = ctx.to_string();
    *term_out = dup_string(ctx_str.empty() ? print_term(t)
                                           : ctx_str + " |- " + print_term(t));
    return RESCAL_OK;
  });
}

rescal_status rescal_term_interpret(const rescal_term* t,
                                    rescal_strategy** out, char** error) {
  if (t == nullptr || out == nullptr) return RESCAL_ERR_INVALID;
  return guarded(error, [&] {
    *out = new rescal_strategy{interpret_term(t->ctx, t->term)};
    return RESCAL_OK;
  });
}

rescal_status rescal_strategy_parse(const char* json, rescal_strategy** out,
                                    char** error) {
  if (json == nullptr || out == nullptr) return RESCAL_ERR_INVALID;
  return guarded(error, [&] {
    *out = new rescal_strategy{strategy_from_json(json)};
    return RESCAL_OK;
  });
}

void rescal_strategy_free(rescal_strategy* s) { delete s; }

rescal_status rescal_strategy_to_json(const rescal_strategy* s, char** out) {
  if (s == nullptr || out == nullptr) return RESCAL_ERR_INVALID;
  *out = dup_string(strategy_to_json(s->strategy));
  return RESCAL_OK;
}

rescal_status rescal_compose(const rescal_strategy* g, const rescal_strategy* f,
                             rescal_strategy** out, char** error) {
  if (g == nullptr || f == nullptr || out == nullptr) return RESCAL_ERR_INVALID;
  return guarded(error, [&] {
    if (f->strategy.iface()->right != g->strategy.iface()->left) {
      set_error(error, "interfaces do not match: f's right side must equal "
                       "g's left side");
      return RESCAL_ERR_INVALID;
    }
    *out = new rescal_strategy{compose(g->strategy, f->strategy)};
    return RESCAL_OK;
  });
}

rescal_status rescal_check_laws(const char* type, int window, char** report,
                                char** error) {
  if (type == nullptr || report == nullptr) return RESCAL_ERR_INVALID;
  return guarded(error, [&] {
    if (window < 1) {
      set_error(error, "window must be at least 1");
      return RESCAL_ERR_INVALID;
    }
    Arena a = Arena::of_type(parse_type(type));
    std::string text;
    bool all_ok = true;
    for (const LawResult& r : check_all_laws(a, window)) {
      text += (r.ok ? "pass " : "FAIL ") + r.name;
      if (!r.ok) {
        text += " (" + r.detail + ")";
        all_ok = false;
      }
      text += "\n";
    }
    *report = dup_string(text);
    return all_ok ? RESCAL_OK : RESCAL_ERR_CHECK;
  });
}

rescal_status rescal_soundness(int count, uint64_t seed, char** report,
                               char** error) {
  if (report == nullptr) return RESCAL_ERR_INVALID;
  return guarded(error, [&] {
    if (count < 1) {
      set_error(error, "count must be at least 1");
      return RESCAL_ERR_INVALID;
    }
    SoundnessSummary s = run_soundness(count, seed);
    std::string text = "{\"checked\": " + std::to_string(s.checked) +
                       ", \"failures\": " + std::to_string(s.failures) +
                       ", \"zeroNormalForms\": " +
                       std::to_string(s.zero_normal_forms) +
                       ", \"coeffAtLeastTwo\": " +
                       std::to_string(s.coeff_at_least_two) + "}";
    *report = dup_string(text);
    if (!s.ok()) {
      set_error(error, "soundness mismatch: " + s.first_failure);
      return RESCAL_ERR_CHECK;
    }
    return RESCAL_OK;
  });
}

rescal_status rescal_export_dot(const char* what, const char* input,
                                char** dot, char** error) {
  if (what == nullptr || input == nullptr || dot == nullptr)
    return RESCAL_ERR_INVALID;
  return guarded(error, [&] {
    const std::string kind = what;
    if (kind == "arena") {
      Arena a = Arena::of_type(parse_type(input));
      *dot = dup_string(arena_to_dot(a, input));
      return RESCAL_OK;
    }
    if (kind == "term") {
      std::vector<std::pair<std::string, Type>> raw;
      Term term = Term::var("_");
      parse_judgment(input, &raw, &term);
      std::vector<Binding> bindings;
      for (auto& [name, type] : raw) bindings.push_back({name, type});
      Context ctx{std::move(bindings)};
      typecheck_term(ctx, term);
      if (!is_normal(term)) {
        set_error(error, "export of a term needs a normal term");
        return RESCAL_ERR_INVALID;
      }
      Aug q = canonicalize(encode_term(ctx, term)).rep;
      *dot = dup_string(aug_to_dot(q, input));
      return RESCAL_OK;
    }
    set_error(error, "what must be \"arena\" or \"term\"");
    return RESCAL_ERR_INVALID;
  });
}

}  // extern "C"
