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

#include "causal.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <numeric>

namespace rescal {

IfacePtr make_iface(Arena left, Arena right) {
  return std::make_shared<const Interface>(
      Interface{std::move(left), std::move(right)});
}

// ---------------------------------------------------------------------------
// Configurations
// ---------------------------------------------------------------------------

int Configuration::add(int parent_event, int arena_node) {
  parent.push_back(parent_event);
  display.push_back(arena_node);
  return size() - 1;
}

std::vector<int> Configuration::roots() const {
  std::vector<int> out;
  for (int e = 0; e < size(); ++e)
    if (parent[e] < 0) out.push_back(e);
  return out;
}

std::vector<std::vector<int>> Configuration::children() const {
  std::vector<std::vector<int>> out(size());
  for (int e = 0; e < size(); ++e)
    if (parent[e] >= 0) out[parent[e]].push_back(e);
  return out;
}

namespace {

// Events ordered parents before children (by depth, then index).
std::vector<int> parents_first(const std::vector<int>& parent) {
  const int n = static_cast<int>(parent.size());
  std::vector<int> depth(n, 0);
  for (int pass = 0; pass < n; ++pass) {
    bool changed = false;
    for (int e = 0; e < n; ++e) {
      if (parent[e] >= 0 && depth[e] != depth[parent[e]] + 1) {
        depth[e] = depth[parent[e]] + 1;
        changed = true;
      }
    }
    if (!changed) break;
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return depth[a] < depth[b]; });
  return order;
}

// Checks that `parent` is a forest: valid indices and no cycles.
void check_forest(const std::vector<int>& parent, const char* condition) {
  const int n = static_cast<int>(parent.size());
  for (int e = 0; e < n; ++e) {
    if (parent[e] >= n || parent[e] == e)
      throw ValidityError(condition, {e}, "bad parent index");
    int slow = e, fast = e;
    // Floyd cycle check along the parent chain.
    while (fast >= 0) {
      fast = parent[fast];
      if (fast < 0) break;
      fast = parent[fast];
      slow = parent[slow];
      if (fast == slow && fast >= 0)
        throw ValidityError(condition, {e}, "parent chain has a cycle");
    }
  }
}

}  // namespace

void validate_configuration(const Arena& arena, const Configuration& x) {
  check_forest(x.parent, "forest");
  for (int e = 0; e < x.size(); ++e) {
    if (x.display[e] < 0 || x.display[e] >= arena.size())
      throw ValidityError("display", {e}, "event displays outside the arena");
  }
  for (int e = 0; e < x.size(); ++e) {
    const bool root = x.parent[e] < 0;
    if (root != arena.is_root(x.display[e]))
      throw ValidityError("minimality-respecting", {e},
                          "event is minimal iff its display is minimal");
    if (!root && arena.parent(x.display[e]) != x.display[x.parent[e]])
      throw ValidityError("causality-preserving", {e, x.parent[e]},
                          "immediate causality must display to immediate "
                          "arena causality");
  }
}

namespace {

// Canonical code of each event's subtree in a labeled forest: the label
// string plus the sorted codes of the children.
std::vector<std::string> subtree_codes(const std::vector<std::vector<int>>& kids,
                                       const std::vector<std::string>& labels) {
  const int n = static_cast<int>(labels.size());
  std::vector<std::string> code(n);
  // Process by decreasing depth so children are coded before parents.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> depth(n, 0);
  // kids is a forest; compute depths by repeated relaxation (small n).
  for (int pass = 0; pass < n; ++pass) {
    bool changed = false;
    for (int e = 0; e < n; ++e) {
      for (int c : kids[e]) {
        if (depth[c] != depth[e] + 1) {
          depth[c] = depth[e] + 1;
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return depth[a] > depth[b]; });
  for (int e : order) {
    std::vector<std::string> cs;
    cs.reserve(kids[e].size());
    for (int c : kids[e]) cs.push_back(code[c]);
    std::sort(cs.begin(), cs.end());
    std::string s = "(" + labels[e];
    for (const std::string& c : cs) s += c;
    s += ")";
    code[e] = std::move(s);
  }
  return code;
}

std::vector<std::string> config_labels(const Configuration& x) {
  std::vector<std::string> labels(x.size());
  for (int e = 0; e < x.size(); ++e)
    labels[e] = std::to_string(x.display[e]) + ":";
  return labels;
}

std::string forest_key(const std::vector<int>& roots,
                       const std::vector<std::string>& code) {
  std::vector<std::string> rs;
  rs.reserve(roots.size());
  for (int r : roots) rs.push_back(code[r]);
  std::sort(rs.begin(), rs.end());
  std::string out;
  for (const std::string& s : rs) out += s;
  return out;
}

}  // namespace

std::string configuration_key(const Configuration& x) {
  auto code = subtree_codes(x.children(), config_labels(x));
  return forest_key(x.roots(), code);
}

namespace {

// DFS in canonical order (children sorted by code), assigning new ids.
void canonical_dfs(int e, const std::vector<std::vector<int>>& kids,
                   const std::vector<std::string>& code, std::vector<int>* order) {
  order->push_back(e);
  std::vector<int> cs = kids[e];
  std::sort(cs.begin(), cs.end(),
            [&](int a, int b) { return code[a] < code[b]; });
  for (int c : cs) canonical_dfs(c, kids, code, order);
}

std::vector<int> canonical_order(const std::vector<int>& roots,
                                 const std::vector<std::vector<int>>& kids,
                                 const std::vector<std::string>& code) {
  std::vector<int> rs = roots;
  std::sort(rs.begin(), rs.end(),
            [&](int a, int b) { return code[a] < code[b]; });
  std::vector<int> order;
  for (int r : rs) canonical_dfs(r, kids, code, &order);
  return order;
}

}  // namespace

Configuration canonical_configuration(const Configuration& x) {
  auto code = subtree_codes(x.children(), config_labels(x));
  auto order = canonical_order(x.roots(), x.children(), code);
  std::vector<int> new_id(x.size());
  for (int i = 0; i < x.size(); ++i) new_id[order[i]] = i;
  Configuration out;
  out.parent.resize(x.size());
  out.display.resize(x.size());
  for (int e = 0; e < x.size(); ++e) {
    out.parent[new_id[e]] = x.parent[e] < 0 ? -1 : new_id[x.parent[e]];
    out.display[new_id[e]] = x.display[e];
  }
  return out;
}

Position position_of(const Configuration& x) {
  return Position{configuration_key(x), canonical_configuration(x)};
}

namespace {

// Enumerates all bijections between two same-sized sibling lists that match
// equal codes, recursing into subtrees; appends complete event maps.
void match_forests(const std::vector<int>& as, const std::vector<int>& bs,
                   const std::vector<std::vector<int>>& kids_a,
                   const std::vector<std::vector<int>>& kids_b,
                   const std::vector<std::string>& code_a,
                   const std::vector<std::string>& code_b,
                   std::vector<int>& map, bool& dead,
                   const std::function<void()>& cont) {
  if (dead) return;
  if (as.size() != bs.size()) {
    dead = true;
    return;
  }
  if (as.empty()) {
    cont();
    return;
  }
  // Group by canonical code.
  std::map<std::string, std::vector<int>> ga, gb;
  for (int a : as) ga[code_a[a]].push_back(a);
  for (int b : bs) gb[code_b[b]].push_back(b);
  if (ga.size() != gb.size()) return;
  for (auto ita = ga.begin(), itb = gb.begin(); ita != ga.end(); ++ita, ++itb) {
    if (ita->first != itb->first || ita->second.size() != itb->second.size())
      return;
  }
  // Enumerate per-group permutations as one nested product.
  std::vector<std::pair<std::vector<int>, std::vector<int>>> groups;
  for (auto& [k, v] : ga) groups.emplace_back(v, gb[k]);

  std::function<void(size_t)> per_group = [&](size_t gi) {
    if (gi == groups.size()) {
      cont();
      return;
    }
    auto& [av, bv] = groups[gi];
    std::vector<int> perm(av.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      // Bind this group's pairs, then recursively match their children.
      std::function<void(size_t)> per_pair = [&](size_t pi) {
        if (pi == av.size()) {
          per_group(gi + 1);
          return;
        }
        int a = av[pi], b = bv[perm[pi]];
        map[a] = b;
        match_forests(kids_a[a], kids_b[b], kids_a, kids_b, code_a, code_b,
                      map, dead, [&] { per_pair(pi + 1); });
        map[a] = -1;
      };
      per_pair(0);
    } while (std::next_permutation(perm.begin(), perm.end()));
  };
  per_group(0);
}

}  // namespace

std::vector<std::vector<int>> enumerate_symmetries(const Configuration& x,
                                                   const Configuration& y) {
  std::vector<std::vector<int>> out;
  if (x.size() != y.size()) return out;
  auto kids_x = x.children();
  auto kids_y = y.children();
  auto code_x = subtree_codes(kids_x, config_labels(x));
  auto code_y = subtree_codes(kids_y, config_labels(y));
  std::vector<int> map(x.size(), -1);
  bool dead = false;
  match_forests(x.roots(), y.roots(), kids_x, kids_y, code_x, code_y, map, dead,
                [&] { out.push_back(map); });
  return out;
}

namespace {

Nat aut_of_forest(const std::vector<int>& roots,
                  const std::vector<std::vector<int>>& kids,
                  const std::vector<std::string>& code) {
  // Product over code groups of multiplicity!, times the automorphisms of
  // each subtree's children forest.
  std::map<std::string, int> mult;
  Nat result{1};
  for (int r : roots) mult[code[r]] += 1;
  for (auto& [k, m] : mult) result *= Nat::factorial(static_cast<unsigned>(m));
  for (int r : roots) result *= aut_of_forest(kids[r], kids, code);
  return result;
}

}  // namespace

Nat sym_count(const Configuration& x) {
  auto kids = x.children();
  auto code = subtree_codes(kids, config_labels(x));
  return aut_of_forest(x.roots(), kids, code);
}

Configuration union_star(const Configuration& x, const Configuration& y) {
  Configuration out = x;
  const int off = x.size();
  for (int e = 0; e < y.size(); ++e) {
    out.parent.push_back(y.parent[e] < 0 ? -1 : y.parent[e] + off);
    out.display.push_back(y.display[e]);
  }
  return out;
}

Configuration hom_pair(const Arena& a, const Arena& b, const Configuration& x,
                       const Configuration& y) {
  Configuration out = x;
  const int event_off = x.size();
  for (int e = 0; e < y.size(); ++e) {
    assert(y.display[e] < b.size());
    out.parent.push_back(y.parent[e] < 0 ? -1 : y.parent[e] + event_off);
    out.display.push_back(y.display[e] + a.size());
  }
  return out;
}

Configuration tensor_config(const std::vector<Arena>& arenas,
                            const std::vector<Configuration>& parts) {
  assert(arenas.size() == parts.size());
  Configuration out;
  int event_off = 0;
  int node_off = 0;
  for (size_t i = 0; i < parts.size(); ++i) {
    for (int e = 0; e < parts[i].size(); ++e) {
      out.parent.push_back(parts[i].parent[e] < 0 ? -1
                                                  : parts[i].parent[e] + event_off);
      out.display.push_back(parts[i].display[e] + node_off);
    }
    event_off += parts[i].size();
    node_off += arenas[i].size();
  }
  return out;
}

std::vector<std::pair<Configuration, Configuration>> tree_splittings(
    const Configuration& x) {
  // Assign each tree (root) to one of two sides; events follow their root.
  std::vector<int> roots = x.roots();
  const int t = static_cast<int>(roots.size());
  std::vector<int> tree_of(x.size(), -1);
  for (int e = 0; e < x.size(); ++e) {
    int r = e;
    while (x.parent[r] >= 0) r = x.parent[r];
    for (int i = 0; i < t; ++i)
      if (roots[i] == r) tree_of[e] = i;
  }
  std::vector<std::pair<Configuration, Configuration>> out;
  const std::vector<int> order = parents_first(x.parent);
  for (uint32_t mask = 0; mask < (uint32_t{1} << t); ++mask) {
    Configuration a, b;
    std::vector<int> new_id(x.size(), -1);
    for (int e : order) {
      const bool in_a = (mask >> tree_of[e]) & 1;
      Configuration& dst = in_a ? a : b;
      new_id[e] = dst.add(x.parent[e] < 0 ? -1 : new_id[x.parent[e]],
                          x.display[e]);
    }
    out.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

Nat splitting_count(const Configuration& x, const Configuration& y,
                    const Configuration& z) {
  const std::string ky = configuration_key(y);
  const std::string kz = configuration_key(z);
  Nat n{0};
  for (const auto& [a, b] : tree_splittings(x)) {
    if (configuration_key(a) == ky && configuration_key(b) == kz) n += Nat(1);
  }
  return n;
}

// ---------------------------------------------------------------------------
// Augmentations
// ---------------------------------------------------------------------------

Aug empty_aug(IfacePtr iface) {
  Aug q;
  q.iface = std::move(iface);
  return q;
}

int Aug::add(int static_parent, int dyn_parent, Disp d) {
  sparent.push_back(static_parent);
  dparent.push_back(dyn_parent);
  disp.push_back(d);
  return size() - 1;
}

Configuration Aug::side_config(Side s, std::vector<int>* event_map) const {
  Configuration out;
  std::vector<int> new_id(size(), -1);
  // Static parents stay on one side, so the restriction is closed; assign
  // ids in event order, then wire parents.
  for (int e = 0; e < size(); ++e) {
    if (disp[e].side != s) continue;
    new_id[e] = out.add(-1, disp[e].node);
    if (event_map) event_map->push_back(e);
  }
  for (int e = 0; e < size(); ++e) {
    if (new_id[e] < 0 || sparent[e] < 0) continue;
    out.parent[new_id[e]] = new_id[sparent[e]];
  }
  return out;
}

namespace {

bool is_dyn_ancestor(const Aug& q, int anc, int e) {
  for (int cur = q.dparent[e]; cur >= 0; cur = q.dparent[cur])
    if (cur == anc) return true;
  return false;
}

}  // namespace

void validate_augmentation(const Aug& q) {
  check_forest(q.sparent, "static-forest");
  check_forest(q.dparent, "dynamic-forest");
  // Desequentialization is a configuration on the hom arena.
  for (int e = 0; e < q.size(); ++e) {
    const Arena& a = side_arena(*q.iface, q.disp[e].side);
    if (q.disp[e].node < 0 || q.disp[e].node >= a.size())
      throw ValidityError("display", {e}, "event displays outside the arena");
    const bool root = q.sparent[e] < 0;
    if (root != a.is_root(q.disp[e].node))
      throw ValidityError("minimality-respecting", {e},
                          "static-minimal iff displayed to an arena root");
    if (!root) {
      if (q.disp[q.sparent[e]].side != q.disp[e].side ||
          a.parent(q.disp[e].node) != q.disp[q.sparent[e]].node)
        throw ValidityError("causality-preserving", {e, q.sparent[e]},
                            "static parent must display to the arena parent");
    }
  }
  // rule-abiding: the static order is contained in the dynamic order; for
  // forests this says every static parent is a dynamic ancestor.
  for (int e = 0; e < q.size(); ++e) {
    if (q.sparent[e] >= 0 && !is_dyn_ancestor(q, q.sparent[e], e))
      throw ValidityError("rule-abiding", {e, q.sparent[e]},
                          "static parent is not a dynamic ancestor");
  }
  // courteous: immediate dynamic edges from a positive or into a negative
  // event are immediate static edges.
  for (int e = 0; e < q.size(); ++e) {
    int d = q.dparent[e];
    if (d < 0) continue;
    if (q.polarity(d) == Pol::Pos || q.polarity(e) == Pol::Neg) {
      if (q.sparent[e] != d)
        throw ValidityError("courteous", {d, e},
                            "dynamic edge from + or into - must be static");
    }
  }
  // deterministic: a negative event has at most one positive immediate
  // dynamic successor.
  {
    std::vector<int> pos_succ(q.size(), -1);
    for (int e = 0; e < q.size(); ++e) {
      int d = q.dparent[e];
      if (d < 0 || q.polarity(e) != Pol::Pos) continue;
      if (q.polarity(d) == Pol::Neg) {
        if (pos_succ[d] >= 0)
          throw ValidityError("deterministic", {d, pos_succ[d], e},
                              "negative event with two positive successors");
        pos_succ[d] = e;
      }
    }
  }
  // +-covered: dynamic-maximal events are positive.
  {
    std::vector<bool> has_child(q.size(), false);
    for (int e = 0; e < q.size(); ++e)
      if (q.dparent[e] >= 0) has_child[q.dparent[e]] = true;
    for (int e = 0; e < q.size(); ++e)
      if (!has_child[e] && q.polarity(e) != Pol::Pos)
        throw ValidityError("+-covered", {e}, "maximal event is negative");
  }
  // negative: dynamic-minimal events are negative.
  for (int e = 0; e < q.size(); ++e)
    if (q.dparent[e] < 0 && q.polarity(e) != Pol::Neg)
      throw ValidityError("negative", {e}, "minimal event is positive");
}

namespace {

std::vector<int> dyn_depths(const Aug& q) {
  std::vector<int> depth(q.size(), 0);
  for (int pass = 0; pass < q.size(); ++pass) {
    bool changed = false;
    for (int e = 0; e < q.size(); ++e) {
      if (q.dparent[e] >= 0 && depth[e] != depth[q.dparent[e]] + 1) {
        depth[e] = depth[q.dparent[e]] + 1;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return depth;
}

std::vector<std::vector<int>> dyn_children(const Aug& q) {
  std::vector<std::vector<int>> out(q.size());
  for (int e = 0; e < q.size(); ++e)
    if (q.dparent[e] >= 0) out[q.dparent[e]].push_back(e);
  return out;
}

std::vector<int> dyn_roots(const Aug& q) {
  std::vector<int> out;
  for (int e = 0; e < q.size(); ++e)
    if (q.dparent[e] < 0) out.push_back(e);
  return out;
}

// Event label: display side and node, plus the static parent encoded as a
// dynamic-depth offset (0 when the event is a static root).  Rule-abiding
// puts the static parent on the dynamic ancestor chain, so the offset
// pins it down exactly.
std::vector<std::string> aug_labels(const Aug& q) {
  std::vector<int> depth = dyn_depths(q);
  std::vector<std::string> labels(q.size());
  for (int e = 0; e < q.size(); ++e) {
    int off = 0;
    if (q.sparent[e] >= 0) off = depth[e] - depth[q.sparent[e]];
    labels[e] = std::string(q.disp[e].side == Side::L ? "L" : "R") +
                std::to_string(q.disp[e].node) + "^" + std::to_string(off) + ":";
  }
  return labels;
}

}  // namespace

std::string aug_key(const Aug& q) {
  auto code = subtree_codes(dyn_children(q), aug_labels(q));
  return forest_key(dyn_roots(q), code);
}

CanonAug canonicalize(const Aug& q) {
  auto kids = dyn_children(q);
  auto code = subtree_codes(kids, aug_labels(q));
  auto roots = dyn_roots(q);
  auto order = canonical_order(roots, kids, code);
  std::vector<int> new_id(q.size());
  for (int i = 0; i < q.size(); ++i) new_id[order[i]] = i;
  Aug rep;
  rep.iface = q.iface;
  rep.sparent.resize(q.size());
  rep.dparent.resize(q.size());
  rep.disp.resize(q.size());
  for (int e = 0; e < q.size(); ++e) {
    rep.sparent[new_id[e]] = q.sparent[e] < 0 ? -1 : new_id[q.sparent[e]];
    rep.dparent[new_id[e]] = q.dparent[e] < 0 ? -1 : new_id[q.dparent[e]];
    rep.disp[new_id[e]] = q.disp[e];
  }
  CanonAug out;
  out.key = forest_key(roots, code);
  out.rep = std::move(rep);
  out.pointed = roots.size() == 1;
  return out;
}

Aug copycat(const Arena& a, const Configuration& x) {
  // Events: left copy e, right copy e + n.  The negative copy of each event
  // immediately precedes its positive mirror; within a side, dynamic edges
  // follow the static forest.
  Aug q;
  q.iface = make_iface(a, a);
  const int n = x.size();
  q.sparent.resize(2 * n);
  q.dparent.resize(2 * n);
  q.disp.resize(2 * n);
  for (int e = 0; e < n; ++e) {
    const int l = e, r = e + n;
    q.disp[l] = Disp{Side::L, x.display[e]};
    q.disp[r] = Disp{Side::R, x.display[e]};
    q.sparent[l] = x.parent[e] < 0 ? -1 : x.parent[e];
    q.sparent[r] = x.parent[e] < 0 ? -1 : x.parent[e] + n;
    const Pol p = a.polarity(x.display[e]);
    if (p == Pol::Neg) {
      // Right copy is negative: it follows the static order on the right;
      // the left copy mirrors it.
      q.dparent[r] = x.parent[e] < 0 ? -1 : x.parent[e] + n;
      q.dparent[l] = r;
    } else {
      // Left copy is negative (left side flips): it follows the static
      // order on the left; the right copy mirrors it.
      q.dparent[l] = x.parent[e];
      q.dparent[r] = l;
    }
  }
  return q;
}

Aug aug_union(const Aug& a, const Aug& b) {
  assert(*a.iface == *b.iface);
  Aug out = a;
  const int off = a.size();
  for (int e = 0; e < b.size(); ++e) {
    out.sparent.push_back(b.sparent[e] < 0 ? -1 : b.sparent[e] + off);
    out.dparent.push_back(b.dparent[e] < 0 ? -1 : b.dparent[e] + off);
    out.disp.push_back(b.disp[e]);
  }
  return out;
}

std::string aug_to_dot(const Aug& q, const std::string& name) {
  std::string out = "digraph \"" + name + "\" {\n  rankdir=BT;\n";
  for (int e = 0; e < q.size(); ++e) {
    out += "  e" + std::to_string(e) + " [label=\"q" +
           std::string(1, pol_char(q.polarity(e))) + " " +
           (q.disp[e].side == Side::L ? "L" : "R") +
           std::to_string(q.disp[e].node) + "\"];\n";
  }
  for (int e = 0; e < q.size(); ++e) {
    if (q.sparent[e] >= 0)
      out += "  e" + std::to_string(e) + " -> e" + std::to_string(q.sparent[e]) +
             " [style=dotted, arrowhead=none];\n";
    if (q.dparent[e] >= 0)
      out += "  e" + std::to_string(e) + " -> e" + std::to_string(q.dparent[e]) +
             " [arrowhead=normal];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace rescal
