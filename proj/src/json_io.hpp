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

// JSON wire formats.
//
// Augmentation: {"arena": "<left> |- <right>", "events": [{"id": 0,
//   "display": ["R", 0, 1, ...], "staticParent": id|null,
//   "dynParent": id|null}]}
// where the left side is a named context ("x:o, f:o -> o"), a comma list of
// types, or "1" for the empty arena, and a display is the side marker
// followed by the node's tree path (root index, then child indices).
//
// Strategy: {"interface": {"left": "...", "right": "..."},
//   "entries": [{"augmentation": {...}, "coefficient": "p/q" | "inf"}]}

#ifndef RESCAL_JSON_IO_HPP_
#define RESCAL_JSON_IO_HPP_

#include <string>

#include "strategy.hpp"

namespace rescal {

struct JsonError : std::runtime_error {
  explicit JsonError(const std::string& message)
      : std::runtime_error(message) {}
};

// Arena side serialization: "x:o, y:o -> o" (context form when names are
// given), "o, o -> o" (anonymous tensor of types), or "1".
std::string arena_side_to_string(const Arena& a, const Context* named = nullptr);
Arena parse_arena_side(const std::string& text);

std::string aug_to_json(const Aug& q, const Context* named_left = nullptr);
// When the left side was serialized in context form, named_left_out (if
// given) receives the parsed context.
Aug aug_from_json(const std::string& json, Context* named_left_out = nullptr);

std::string strategy_to_json(const Strategy& s, const Context* named_left = nullptr);
Strategy strategy_from_json(const std::string& json);

}  // namespace rescal

#endif  // RESCAL_JSON_IO_HPP_
