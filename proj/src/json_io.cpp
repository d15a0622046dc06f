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

#include "json_io.hpp"

#include <json.hpp>

namespace rescal {

using nlohmann::json;

namespace {

// Reads the type of a pointed sub-arena back off its tree: the domains are
// the children subtrees in order.
Type type_of_tree(const Arena& a, int root) {
  std::vector<Type> domains;
  for (int c : a.children(root)) domains.push_back(type_of_tree(a, c));
  return Type::from_domains(std::move(domains));
}

std::vector<Type> arena_to_types(const Arena& a) {
  std::vector<Type> out;
  for (int r : a.roots()) out.push_back(type_of_tree(a, r));
  return out;
}

json disp_to_json(const Interface& iface, const Disp& d) {
  const Arena& a = side_arena(iface, d.side);
  json out = json::array();
  out.push_back(d.side == Side::L ? "L" : "R");
  for (int step : a.address(d.node)) out.push_back(step);
  return out;
}

Disp disp_from_json(const Interface& iface, const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_string())
    throw JsonError("display must be a side marker followed by a path");
  Side side;
  const std::string marker = j[0].get<std::string>();
  if (marker == "L") {
    side = Side::L;
  } else if (marker == "R") {
    side = Side::R;
  } else {
    throw JsonError("display side must be \"L\" or \"R\"");
  }
  std::vector<int> path;
  for (size_t i = 1; i < j.size(); ++i) path.push_back(j[i].get<int>());
  int node = side_arena(iface, side).node_at(path);
  if (node < 0) throw JsonError("display path is not a node of the arena");
  return Disp{side, node};
}

json aug_to_json_obj(const Aug& q, const Context* named_left) {
  json events = json::array();
  for (int e = 0; e < q.size(); ++e) {
    json ev;
    ev["id"] = e;
    ev["display"] = disp_to_json(*q.iface, q.disp[e]);
    ev["staticParent"] =
        q.sparent[e] < 0 ? json(nullptr) : json(q.sparent[e]);
    ev["dynParent"] = q.dparent[e] < 0 ? json(nullptr) : json(q.dparent[e]);
    events.push_back(std::move(ev));
  }
  json out;
  out["arena"] = arena_side_to_string(q.iface->left, named_left) + " |- " +
                 arena_side_to_string(q.iface->right);
  out["events"] = std::move(events);
  return out;
}

Aug aug_from_json_obj(const json& j, IfacePtr iface_hint) {
  if (!j.is_object() || !j.contains("events"))
    throw JsonError("augmentation object must carry \"events\"");
  IfacePtr iface = std::move(iface_hint);
  if (!iface) {
    if (!j.contains("arena") || !j["arena"].is_string())
      throw JsonError("augmentation object must carry an \"arena\" string");
    const std::string arena = j["arena"].get<std::string>();
    auto sep = arena.find("|-");
    if (sep == std::string::npos)
      throw JsonError("arena string must have the form \"left |- right\"");
    iface = make_iface(parse_arena_side(arena.substr(0, sep)),
                       parse_arena_side(arena.substr(sep + 2)));
  }
  const json& events = j["events"];
  if (!events.is_array()) throw JsonError("\"events\" must be an array");
  const int n = static_cast<int>(events.size());
  Aug q = empty_aug(iface);
  q.sparent.assign(n, -1);
  q.dparent.assign(n, -1);
  q.disp.assign(n, Disp{Side::R, 0});
  std::vector<bool> seen(n, false);
  for (const json& ev : events) {
    if (!ev.contains("id") || !ev["id"].is_number_integer())
      throw JsonError("event must carry an integer \"id\"");
    const int id = ev["id"].get<int>();
    if (id < 0 || id >= n || seen[id])
      throw JsonError("event ids must be 0..n-1 without repetition");
    seen[id] = true;
    q.disp[id] = disp_from_json(*iface, ev.at("display"));
    auto parent = [&](const char* field) -> int {
      if (!ev.contains(field) || ev[field].is_null()) return -1;
      const int p = ev[field].get<int>();
      if (p < 0 || p >= n) throw JsonError(std::string(field) + " out of range");
      return p;
    };
    q.sparent[id] = parent("staticParent");
    q.dparent[id] = parent("dynParent");
  }
  validate_augmentation(q);
  return q;
}

}  // namespace

std::string arena_side_to_string(const Arena& a, const Context* named) {
  if (a.is_empty()) return "1";
  if (named != nullptr && Arena::of_context(*named) == a)
    return named->to_string();
  std::vector<Type> types = arena_to_types(a);
  std::string out;
  for (size_t i = 0; i < types.size(); ++i) {
    if (i) out += ", ";
    out += types[i].to_string();
  }
  return out;
}

Arena parse_arena_side(const std::string& text) {
  // Trim whitespace; "1" is the empty arena.
  size_t b = text.find_first_not_of(" \t\n");
  size_t e = text.find_last_not_of(" \t\n");
  if (b == std::string::npos) return Arena::empty();
  std::string s = text.substr(b, e - b + 1);
  if (s == "1") return Arena::empty();
  try {
    if (s.find(':') != std::string::npos)
      return Arena::of_context(Context::parse(s));
    std::vector<Arena> parts;
    for (const Type& t : parse_type_list(s)) parts.push_back(Arena::of_type(t));
    return Arena::tensor(parts);
  } catch (const ParseError& err) {
    throw JsonError(std::string("bad arena: ") + err.what());
  }
}

std::string aug_to_json(const Aug& q, const Context* named_left) {
  return aug_to_json_obj(q, named_left).dump(2);
}

Aug aug_from_json(const std::string& text, Context* named_left_out) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw JsonError(std::string("bad JSON: ") + e.what());
  }
  try {
    if (named_left_out != nullptr && j.is_object() && j.contains("arena") &&
        j["arena"].is_string()) {
      const std::string arena = j["arena"].get<std::string>();
      auto sep = arena.find("|-");
      if (sep != std::string::npos) {
        std::string left = arena.substr(0, sep);
        if (left.find(':') != std::string::npos)
          *named_left_out = Context::parse(left);
      }
    }
    return aug_from_json_obj(j, nullptr);
  } catch (const json::exception& e) {
    throw JsonError(std::string("bad augmentation document: ") + e.what());
  }
}

std::string strategy_to_json(const Strategy& s, const Context* named_left) {
  json out;
  out["interface"] = {
      {"left", arena_side_to_string(s.iface()->left, named_left)},
      {"right", arena_side_to_string(s.iface()->right)}};
  json entries = json::array();
  for (const auto& [k, e] : s.table()) {
    json entry;
    entry["augmentation"] = aug_to_json_obj(e.rep, named_left);
    entry["coefficient"] = e.coeff.to_string();
    entries.push_back(std::move(entry));
  }
  out["entries"] = std::move(entries);
  return out.dump(2);
}

Strategy strategy_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw JsonError(std::string("bad JSON: ") + e.what());
  }
  try {
    if (!j.is_object() || !j.contains("interface") || !j.contains("entries"))
      throw JsonError(
          "strategy object must carry \"interface\" and \"entries\"");
    const json& iface_obj = j["interface"];
    if (!iface_obj.contains("left") || !iface_obj.contains("right"))
      throw JsonError("interface must carry \"left\" and \"right\"");
    IfacePtr iface =
        make_iface(parse_arena_side(iface_obj["left"].get<std::string>()),
                   parse_arena_side(iface_obj["right"].get<std::string>()));
    Strategy out(iface);
    for (const json& entry : j["entries"]) {
      if (!entry.contains("augmentation") || !entry.contains("coefficient"))
        throw JsonError(
            "entry must carry \"augmentation\" and \"coefficient\"");
      Aug q = aug_from_json_obj(entry["augmentation"], iface);
      Coeff c;
      try {
        c = Coeff::parse(entry["coefficient"].get<std::string>());
      } catch (const std::exception& e) {
        throw JsonError(std::string("bad coefficient: ") + e.what());
      }
      out.add(q, c);
    }
    return out;
  } catch (const json::exception& e) {
    throw JsonError(std::string("bad strategy document: ") + e.what());
  }
}

}  // namespace rescal
