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

// Command-line front end over the shared-library C interface.
//
// Exit codes: 0 on success and on passing checks, 1 when a check finds a
// mismatch, 2 on usage, parse or type errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rescal/rescal.h"

namespace {

struct OwnedString {
  char* value = nullptr;
  ~OwnedString() { rescal_string_free(value); }
  std::string str() const { return value == nullptr ? "" : value; }
};

int exit_code(rescal_status status) {
  if (status == RESCAL_OK) return 0;
  if (status == RESCAL_ERR_CHECK) return 1;
  return 2;
}

int report_failure(rescal_status status, const OwnedString& error) {
  if (error.value != nullptr) std::cerr << "error: " << error.value << "\n";
  return exit_code(status);
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string with_context(const std::string& term, const std::string& ctx) {
  return ctx.empty() ? term : ctx + " |- " + term;
}

void emit(const std::string& body, bool json, const char* key) {
  if (!json) {
    std::cout << body << "\n";
    return;
  }
  // Minimal JSON string escaping for text payloads.
  std::string escaped;
  for (char c : body) {
    switch (c) {
      case '"': escaped += "\\\""; break;
      case '\\': escaped += "\\\\"; break;
      case '\n': escaped += "\\n"; break;
      default: escaped += c;
    }
  }
  std::cout << "{\"" << key << "\": \"" << escaped << "\"}\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rescal: resource-calculus normalization and causal game "
               "semantics"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  std::string input, ctx, judgment;
  uint64_t fuel = 0;
  int window = 6;
  std::vector<std::string> arenas;
  int corpus = 500;
  uint64_t seed = 42;
  std::string what, g_path, f_path;

  auto* parse_cmd =
      app.add_subcommand("parse", "parse and reprint a term canonically");
  parse_cmd->add_option("term", input, "term or \"ctx |- term\"")->required();

  auto* type_cmd = app.add_subcommand("typecheck", "synthesize a term's type");
  type_cmd->add_option("term", input)->required();
  type_cmd->add_option("--ctx", ctx, "typing context, e.g. \"x:o, f:o -> o\"");

  auto* norm_cmd = app.add_subcommand("normalize", "normal form as a sum");
  norm_cmd->add_option("term", input)->required();
  norm_cmd->add_option("--ctx", ctx);
  norm_cmd->add_option("--fuel", fuel, "reduction step budget");

  auto* enc_cmd =
      app.add_subcommand("encode", "normal term to augmentation JSON");
  enc_cmd->add_option("term", input)->required();
  enc_cmd->add_option("--ctx", ctx);

  auto* dec_cmd =
      app.add_subcommand("decode", "augmentation JSON back to a normal term");
  dec_cmd->add_option("file", input, "JSON file, or - for stdin")->required();
  dec_cmd->add_option("--judgment", judgment, "target \"ctx |- type\"");

  auto* int_cmd =
      app.add_subcommand("interpret", "interpret a term as a strategy (JSON)");
  int_cmd->add_option("term", input)->required();
  int_cmd->add_option("--ctx", ctx);

  auto* comp_cmd = app.add_subcommand("compose", "compose strategies: g . f");
  comp_cmd->add_option("g", g_path, "JSON file for the outer strategy")
      ->required();
  comp_cmd->add_option("f", f_path, "JSON file for the inner strategy")
      ->required();

  auto* laws_cmd =
      app.add_subcommand("check-laws", "categorical law suite at a window");
  laws_cmd->add_option("--window", window, "class size bound (default 6)");
  laws_cmd->add_option("--arena", arenas,
                       "arena type, repeatable (default o and o -> o)");

  auto* sound_cmd = app.add_subcommand(
      "soundness", "interpretation equals encoded normal form on a corpus");
  sound_cmd->add_option("--corpus", corpus, "number of terms (default 500)");
  sound_cmd->add_option("--seed", seed, "generator seed (default 42)");

  auto* dot_cmd = app.add_subcommand("export-dot", "DOT rendering");
  dot_cmd->add_option("what", what, "arena | term")->required();
  dot_cmd->add_option("input", input, "type, or term/judgment")->required();

  CLI11_PARSE(app, argc, argv);

  if (parse_cmd->parsed() || type_cmd->parsed() || norm_cmd->parsed() ||
      enc_cmd->parsed() || int_cmd->parsed()) {
    rescal_term* term = nullptr;
    OwnedString error;
    rescal_status st =
        rescal_term_parse(with_context(input, ctx).c_str(), &term, &error.value);
    if (st != RESCAL_OK) return report_failure(st, error);

    if (parse_cmd->parsed()) {
      OwnedString out;
      rescal_term_print(term, &out.value);
      emit(out.str(), json, "term");
    } else if (type_cmd->parsed()) {
      OwnedString out;
      rescal_term_type(term, &out.value);
      emit(out.str(), json, "type");
    } else if (norm_cmd->parsed()) {
      OwnedString out, err;
      st = rescal_term_normalize(term, fuel, &out.value, &err.value);
      if (st != RESCAL_OK) {
        rescal_term_free(term);
        return report_failure(st, err);
      }
      emit(out.str(), json, "normalForm");
    } else if (enc_cmd->parsed()) {
      OwnedString out, err;
      st = rescal_term_encode(term, &out.value, &err.value);
      if (st != RESCAL_OK) {
        rescal_term_free(term);
        return report_failure(st, err);
      }
      std::cout << out.str() << "\n";
    } else {
      rescal_strategy* s = nullptr;
      OwnedString err;
      st = rescal_term_interpret(term, &s, &err.value);
      if (st != RESCAL_OK) {
        rescal_term_free(term);
        return report_failure(st, err);
      }
      OwnedString out;
      rescal_strategy_to_json(s, &out.value);
      std::cout << out.str() << "\n";
      rescal_strategy_free(s);
    }
    rescal_term_free(term);
    return 0;
  }

  if (dec_cmd->parsed()) {
    OwnedString out, error;
    std::string doc = read_input(input);
    rescal_status st = rescal_decode(
        doc.c_str(), judgment.empty() ? nullptr : judgment.c_str(), &out.value,
        &error.value);
    if (st != RESCAL_OK) return report_failure(st, error);
    emit(out.str(), json, "term");
    return 0;
  }

  if (comp_cmd->parsed()) {
    OwnedString error;
    rescal_strategy* g = nullptr;
    rescal_strategy* f = nullptr;
    rescal_status st =
        rescal_strategy_parse(read_input(g_path).c_str(), &g, &error.value);
    if (st != RESCAL_OK) return report_failure(st, error);
    st = rescal_strategy_parse(read_input(f_path).c_str(), &f, &error.value);
    if (st != RESCAL_OK) {
      rescal_strategy_free(g);
      return report_failure(st, error);
    }
    rescal_strategy* out = nullptr;
    st = rescal_compose(g, f, &out, &error.value);
    rescal_strategy_free(g);
    rescal_strategy_free(f);
    if (st != RESCAL_OK) return report_failure(st, error);
    OwnedString text;
    rescal_strategy_to_json(out, &text.value);
    std::cout << text.str() << "\n";
    rescal_strategy_free(out);
    return 0;
  }

  if (laws_cmd->parsed()) {
    if (arenas.empty()) arenas = {"o", "o -> o"};
    bool failed = false;
    for (const std::string& a : arenas) {
      OwnedString report, error;
      rescal_status st =
          rescal_check_laws(a.c_str(), window, &report.value, &error.value);
      if (st != RESCAL_OK && st != RESCAL_ERR_CHECK)
        return report_failure(st, error);
      std::cout << "# arena " << a << ", window " << window << "\n"
                << report.str();
      if (st == RESCAL_ERR_CHECK) failed = true;
    }
    return failed ? 1 : 0;
  }

  if (sound_cmd->parsed()) {
    OwnedString report, error;
    rescal_status st =
        rescal_soundness(corpus, seed, &report.value, &error.value);
    std::cout << report.str() << "\n";
    if (st == RESCAL_ERR_CHECK) {
      if (error.value != nullptr) std::cerr << "error: " << error.value << "\n";
      return 1;
    }
    if (st != RESCAL_OK) return report_failure(st, error);
    return 0;
  }

  if (dot_cmd->parsed()) {
    OwnedString out, error;
    rescal_status st =
        rescal_export_dot(what.c_str(), input.c_str(), &out.value, &error.value);
    if (st != RESCAL_OK) return report_failure(st, error);
    std::cout << out.str();
    return 0;
  }

  return 2;
}
