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

#include "strategy.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace rescal {

// ---------------------------------------------------------------------------
// Interaction
// ---------------------------------------------------------------------------

std::vector<std::vector<int>> middle_symmetries(const Aug& q, const Aug& p) {
  std::vector<int> qmap, pmap;
  Configuration xq = q.side_config(Side::R, &qmap);
  Configuration xp = p.side_config(Side::L, &pmap);
  std::vector<std::vector<int>> out;
  for (const auto& phi : enumerate_symmetries(xq, xp)) {
    std::vector<int> full(q.size(), -1);
    for (size_t i = 0; i < phi.size(); ++i) full[qmap[i]] = pmap[phi[i]];
    out.push_back(std::move(full));
  }
  return out;
}

Interaction interact(const Aug& q, const Aug& p,
                     const std::vector<int>& phi_q_to_p) {
  const int nq = q.size(), np = p.size();
  const int n = nq + np;
  Interaction out;
  out.nodes.reserve(n);
  for (int e = 0; e < nq; ++e) out.nodes.push_back({0, e});
  for (int e = 0; e < np; ++e) out.nodes.push_back({1, e});
  out.edges.assign(n, {});
  std::vector<int> phi_p_to_q(p.size(), -1);
  for (int e = 0; e < nq; ++e)
    if (phi_q_to_p[e] >= 0) phi_p_to_q[phi_q_to_p[e]] = e;

  for (int e = 0; e < nq; ++e)
    if (q.dparent[e] >= 0) out.edges[q.dparent[e]].push_back(e);
  for (int e = 0; e < np; ++e)
    if (p.dparent[e] >= 0) out.edges[nq + p.dparent[e]].push_back(nq + e);
  // Synchronization edges run from the sender to the receiver: q's middle
  // events that are positive in A |- B point into p, and p's middle events
  // that are positive in B |- C point back into q.
  for (int e = 0; e < nq; ++e) {
    if (q.disp[e].side != Side::R) continue;
    if (phi_q_to_p[e] < 0 || phi_q_to_p[e] >= np)
      throw std::invalid_argument(
          "interact: the symmetry must cover every middle event");
    if (q.polarity(e) == Pol::Pos) {
      out.edges[e].push_back(nq + phi_q_to_p[e]);
    } else {
      out.edges[nq + phi_q_to_p[e]].push_back(e);
    }
  }

  // Topological order (Kahn); a leftover node means a causal cycle.
  std::vector<int> indeg(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v : out.edges[u]) ++indeg[v];
  std::vector<int> queue;
  for (int u = 0; u < n; ++u)
    if (indeg[u] == 0) queue.push_back(u);
  for (size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    out.topo.push_back(u);
    for (int v : out.edges[u])
      if (--indeg[v] == 0) queue.push_back(v);
  }
  if (static_cast<int>(out.topo.size()) != n) throw DeadlockDetected();

  // Reachability, then the unique immediate predecessor of each node.
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (auto it = out.topo.rbegin(); it != out.topo.rend(); ++it) {
    int u = *it;
    for (int v : out.edges[u]) {
      reach[u][v] = true;
      for (int w = 0; w < n; ++w)
        if (reach[v][w]) reach[u][w] = true;
    }
  }
  std::vector<std::vector<int>> direct_preds(n);
  for (int u = 0; u < n; ++u)
    for (int v : out.edges[u]) direct_preds[v].push_back(u);
  out.ipred.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    int best = -1;
    for (int u : direct_preds[v]) {
      bool dominated = false;
      for (int w : direct_preds[v])
        if (w != u && reach[u][w]) dominated = true;
      if (!dominated) {
        // The interaction order is a forest: at most one maximal cause.
        assert(best == -1 || best == u);
        best = u;
      }
    }
    out.ipred[v] = best;
  }
  return out;
}

Aug compose_aug(const Aug& q, const Aug& p, const std::vector<int>& phi) {
  assert(q.iface->right == p.iface->left);
  Interaction inter = interact(q, p, phi);
  const int nq = q.size();
  Aug out;
  out.iface = make_iface(q.iface->left, p.iface->right);
  std::vector<int> new_id(inter.nodes.size(), -1);
  for (int e = 0; e < nq; ++e)
    if (q.disp[e].side == Side::L) new_id[e] = out.add(-2, -2, q.disp[e]);
  for (int e = 0; e < p.size(); ++e)
    if (p.disp[e].side == Side::R)
      new_id[nq + e] = out.add(-2, -2, p.disp[e]);
  // Dynamic parents: nearest visible ancestor along the interaction forest.
  for (size_t u = 0; u < inter.nodes.size(); ++u) {
    if (new_id[u] < 0) continue;
    int a = inter.ipred[u];
    while (a >= 0 && new_id[a] < 0) a = inter.ipred[a];
    out.dparent[new_id[u]] = a < 0 ? -1 : new_id[a];
  }
  // Static parents restrict side-wise.
  for (int e = 0; e < nq; ++e) {
    if (new_id[e] < 0) continue;
    int sp = q.sparent[e];
    out.sparent[new_id[e]] = sp < 0 ? -1 : new_id[sp];
  }
  for (int e = 0; e < p.size(); ++e) {
    if (new_id[nq + e] < 0) continue;
    int sp = p.sparent[e];
    out.sparent[new_id[nq + e]] = sp < 0 ? -1 : new_id[nq + sp];
  }
  validate_augmentation(out);
  return out;
}

// ---------------------------------------------------------------------------
// Strategy
// ---------------------------------------------------------------------------

Strategy Strategy::of(const Aug& q, Coeff c) {
  Strategy s(q.iface);
  s.add(q, std::move(c));
  return s;
}

Coeff Strategy::at(const std::string& key) const {
  auto it = table_.find(key);
  return it == table_.end() ? Coeff() : it->second.coeff;
}

void Strategy::add(const CanonAug& q, const Coeff& c) {
  if (c.is_zero()) return;
  if (!iface_) iface_ = q.rep.iface;
  auto [it, inserted] = table_.try_emplace(q.key, Entry{q.rep, c});
  if (!inserted) {
    it->second.coeff += c;
    if (it->second.coeff.is_zero()) table_.erase(it);
  }
}

void Strategy::add(const Strategy& other) {
  for (const auto& [k, e] : other.table_)
    add(CanonAug{k, e.rep, false}, e.coeff);
}

void Strategy::scale(const Coeff& c) {
  if (c.is_zero()) {
    table_.clear();
    return;
  }
  for (auto& [k, e] : table_) e.coeff *= c;
}

Strategy operator+(const Strategy& a, const Strategy& b) {
  Strategy out = a;
  out.add(b);
  return out;
}

bool operator==(const Strategy& a, const Strategy& b) {
  if (a.table_.size() != b.table_.size()) return false;
  auto it = a.table_.begin();
  auto jt = b.table_.begin();
  for (; it != a.table_.end(); ++it, ++jt) {
    if (it->first != jt->first || it->second.coeff != jt->second.coeff)
      return false;
  }
  return true;
}

Strategy Strategy::truncated(int max_events) const {
  Strategy out(iface_);
  for (const auto& [k, e] : table_)
    if (e.rep.size() <= max_events) out.add(CanonAug{k, e.rep, false}, e.coeff);
  return out;
}

Strategy Strategy::truncated_sides(int left_bound, int right_bound) const {
  if (left_bound < 0 && right_bound < 0) return *this;
  Strategy out(iface_);
  for (const auto& [k, e] : table_) {
    int left = 0, right = 0;
    for (const Disp& d : e.rep.disp) (d.side == Side::L ? left : right) += 1;
    if (left_bound >= 0 && left > left_bound) continue;
    if (right_bound >= 0 && right > right_bound) continue;
    out.add(CanonAug{k, e.rep, false}, e.coeff);
  }
  return out;
}

Strategy compose(const Strategy& tau, const Strategy& sigma) {
  assert(sigma.iface() && tau.iface());
  assert(sigma.iface()->right == tau.iface()->left);
  Strategy out(make_iface(sigma.iface()->left, tau.iface()->right));
  // Only pairs with symmetric middle configurations contribute; bucket by
  // middle position key to skip the rest.
  std::map<std::string, std::vector<const Strategy::Entry*>> by_middle;
  for (const auto& [kp, ep] : tau.table())
    by_middle[configuration_key(ep.rep.side_config(Side::L))].push_back(&ep);
  for (const auto& [kq, eq] : sigma.table()) {
    auto it = by_middle.find(configuration_key(eq.rep.side_config(Side::R)));
    if (it == by_middle.end()) continue;
    for (const Strategy::Entry* ep : it->second) {
      const Coeff c = eq.coeff * ep->coeff;
      for (const auto& phi : middle_symmetries(eq.rep, ep->rep))
        out.add(compose_aug(eq.rep, ep->rep, phi), c);
    }
  }
  return out;
}

Aug tensor_aug(const Aug& a, const Aug& b) {
  const Arena& la = a.iface->left;
  const Arena& ra = a.iface->right;
  const Arena& lb = b.iface->left;
  const Arena& rb = b.iface->right;
  Aug out;
  out.iface = make_iface(Arena::tensor({la, lb}), Arena::tensor({ra, rb}));
  for (int e = 0; e < a.size(); ++e)
    out.add(a.sparent[e], a.dparent[e], a.disp[e]);
  const int off = a.size();
  for (int e = 0; e < b.size(); ++e) {
    Disp d = b.disp[e];
    d.node += d.side == Side::L ? la.size() : ra.size();
    out.add(b.sparent[e] < 0 ? -1 : b.sparent[e] + off,
            b.dparent[e] < 0 ? -1 : b.dparent[e] + off, d);
  }
  return out;
}

Strategy tensor_strategy(const Strategy& a, const Strategy& b) {
  Strategy out(make_iface(
      Arena::tensor({a.iface()->left, b.iface()->left}),
      Arena::tensor({a.iface()->right, b.iface()->right})));
  for (const auto& [ka, ea] : a.table())
    for (const auto& [kb, eb] : b.table())
      out.add(tensor_aug(ea.rep, eb.rep), ea.coeff * eb.coeff);
  return out;
}

Strategy curry_strategy(const Strategy& s, const Arena& gamma,
                        const Arena& domain, const Arena& codomain) {
  Strategy out(make_iface(gamma, Arena::arrow(domain, codomain)));
  for (const auto& [k, e] : s.table())
    out.add(curry_aug(e.rep, gamma, domain, codomain), e.coeff);
  return out;
}

Strategy uncurry_strategy(const Strategy& s, const Arena& gamma,
                          const Arena& domain, const Arena& codomain) {
  Strategy out(make_iface(Arena::tensor({gamma, domain}), codomain));
  for (const auto& [k, e] : s.table())
    out.add(uncurry_aug(e.rep, gamma, domain, codomain), e.coeff);
  return out;
}

// ---------------------------------------------------------------------------
// Kernels
// ---------------------------------------------------------------------------

Aug mapped_copycat(const IfacePtr& iface, const Configuration& x,
                   const std::function<int(int)>& beta) {
  const Arena& left = iface->left;
  Aug q;
  q.iface = iface;
  const int n = x.size();
  q.sparent.resize(2 * n);
  q.dparent.resize(2 * n);
  q.disp.resize(2 * n);
  for (int e = 0; e < n; ++e) {
    const int l = e, r = e + n;
    q.disp[l] = Disp{Side::L, x.display[e]};
    q.disp[r] = Disp{Side::R, beta(x.display[e])};
    q.sparent[l] = x.parent[e] < 0 ? -1 : x.parent[e];
    q.sparent[r] = x.parent[e] < 0 ? -1 : x.parent[e] + n;
    const Pol p = left.polarity(x.display[e]);
    if (p == Pol::Neg) {
      q.dparent[r] = x.parent[e] < 0 ? -1 : x.parent[e] + n;
      q.dparent[l] = r;
    } else {
      q.dparent[l] = x.parent[e];
      q.dparent[r] = l;
    }
  }
  return q;
}

std::pair<Configuration, Configuration> split_config(const Configuration& c,
                                                     int left_size) {
  Configuration x, y;
  std::vector<int> new_id(c.size(), -1);
  for (int rounds = 0; rounds < c.size(); ++rounds)
    for (int e = 0; e < c.size(); ++e) {
      if (new_id[e] >= 0) continue;
      if (c.parent[e] >= 0 && new_id[c.parent[e]] < 0) continue;
      Configuration& dst = c.display[e] < left_size ? x : y;
      new_id[e] = dst.add(c.parent[e] < 0 ? -1 : new_id[c.parent[e]],
                          c.display[e] < left_size ? c.display[e]
                                                   : c.display[e] - left_size);
    }
  return {std::move(x), std::move(y)};
}

namespace {

Coeff inv_sym(const Configuration& x) { return Coeff(Nat(1), sym_count(x)); }

Configuration map_display(const Configuration& x,
                          const std::function<int(int)>& f) {
  Configuration out = x;
  for (int& d : out.display) d = f(d);
  return out;
}

bool config_pointed(const Configuration& x) { return x.roots().size() == 1; }

}  // namespace

StructuralKernel::StructuralKernel(
    KernelKind kind, IfacePtr iface,
    std::function<std::vector<WeightedAug>(Side, const Configuration&)> generate)
    : kind_(kind), iface_(std::move(iface)), generate_(std::move(generate)) {}

Strategy StructuralKernel::materialize(int window) const {
  Strategy out(iface_);
  for (const Configuration& x : enumerate_positions(iface_->left, window))
    for (const WeightedAug& w : generate(Side::L, x)) out.add(w.aug, w.coeff);
  return out;
}

namespace {

// Identity-shaped kernel between table-equal (or node-mapped) arenas.
StructuralKernel bijection_kernel(KernelKind kind, const Arena& left,
                                  const Arena& right,
                                  std::function<int(int)> beta,
                                  std::function<int(int)> beta_inv,
                                  bool pointed_only = false) {
  IfacePtr iface = make_iface(left, right);
  auto gen = [iface, beta, beta_inv, pointed_only](
                 Side side, const Configuration& c) -> std::vector<WeightedAug> {
    Configuration x = side == Side::L
                          ? canonical_configuration(c)
                          : canonical_configuration(map_display(c, beta_inv));
    if (pointed_only && !config_pointed(x)) return {};
    return {{mapped_copycat(iface, x, beta), inv_sym(x)}};
  };
  return StructuralKernel(kind, iface, std::move(gen));
}

int id_map(int n) { return n; }

}  // namespace

StructuralKernel StructuralKernel::identity(const Arena& a) {
  return bijection_kernel(KernelKind::Id, a, a, id_map, id_map);
}

StructuralKernel StructuralKernel::pointed_identity(const Arena& a) {
  return bijection_kernel(KernelKind::PointedId, a, a, id_map, id_map, true);
}

StructuralKernel StructuralKernel::gamma(const Arena& a, const Arena& b) {
  const int na = a.size(), nb = b.size();
  auto beta = [na, nb](int n) { return n < na ? nb + n : n - na; };
  auto beta_inv = [na, nb](int n) { return n < nb ? na + n : n - nb; };
  return bijection_kernel(KernelKind::Gamma, Arena::tensor({a, b}),
                          Arena::tensor({b, a}), beta, beta_inv);
}

StructuralKernel StructuralKernel::alpha(const Arena& a, const Arena& b,
                                         const Arena& c) {
  // Tables of (a x b) x c and a x (b x c) coincide.
  return bijection_kernel(KernelKind::Alpha,
                          Arena::tensor({Arena::tensor({a, b}), c}),
                          Arena::tensor({a, Arena::tensor({b, c})}), id_map,
                          id_map);
}

StructuralKernel StructuralKernel::lambda_unit(const Arena& a) {
  return bijection_kernel(KernelKind::LambdaUnit,
                          Arena::tensor({Arena::empty(), a}), a, id_map, id_map);
}

StructuralKernel StructuralKernel::rho_unit(const Arena& a) {
  return bijection_kernel(KernelKind::RhoUnit,
                          Arena::tensor({a, Arena::empty()}), a, id_map, id_map);
}

StructuralKernel StructuralKernel::merge(const Arena& gamma, const Arena& delta) {
  // Context concatenation is table concatenation.
  return bijection_kernel(KernelKind::Merge, Arena::tensor({gamma, delta}),
                          Arena::tensor({gamma, delta}), id_map, id_map);
}

StructuralKernel StructuralKernel::var_zeta(const Type& a) {
  // |B1 -> ... -> Bn -> o| and |B1| x ... x |Bn| => o share their table.
  Arena lhs = Arena::of_type(a);
  Arena rhs = Arena::arrow(Arena::of_domains(a), Arena::atom());
  assert(lhs == rhs);
  return bijection_kernel(KernelKind::VarZeta, lhs, rhs, id_map, id_map);
}

StructuralKernel StructuralKernel::delta(const Arena& a) {
  IfacePtr iface = make_iface(a, Arena::tensor({a, a}));
  const int na = a.size();
  auto instance = [iface, na](const Configuration& x, const Configuration& y) {
    Aug part1 = mapped_copycat(iface, x, id_map);
    Aug part2 = mapped_copycat(iface, y, [na](int n) { return na + n; });
    Coeff c = inv_sym(x) * inv_sym(y);
    return WeightedAug{aug_union(part1, part2), c};
  };
  auto gen = [iface, na, instance](
                 Side side, const Configuration& c) -> std::vector<WeightedAug> {
    std::vector<WeightedAug> out;
    if (side == Side::L) {
      // All ordered position pairs (x, y) with x * y symmetric to c.
      std::set<std::pair<std::string, std::string>> seen;
      for (const auto& [x, y] : tree_splittings(c)) {
        auto key = std::make_pair(configuration_key(x), configuration_key(y));
        if (!seen.insert(key).second) continue;
        out.push_back(instance(canonical_configuration(x),
                               canonical_configuration(y)));
      }
    } else {
      // The tensor side splits uniquely by component.
      auto [x, y] = split_config(c, na);
      out.push_back(instance(canonical_configuration(x),
                             canonical_configuration(y)));
    }
    return out;
  };
  return StructuralKernel(KernelKind::Delta, iface, std::move(gen));
}

StructuralKernel StructuralKernel::mu(const Arena& a) {
  IfacePtr iface = make_iface(Arena::tensor({a, a}), a);
  const int na = a.size();
  auto instance = [iface, na](const Configuration& x, const Configuration& y) {
    // Left components x (slot 1) and y (slot 2), both mapping to the same
    // right copy of a.
    Configuration x_shift = x;
    Configuration y_shift = map_display(y, [na](int n) { return na + n; });
    Aug part1 = mapped_copycat(iface, x_shift, id_map);
    Aug part2 = mapped_copycat(iface, y_shift, [na](int n) { return n - na; });
    Coeff c = inv_sym(x) * inv_sym(y);
    return WeightedAug{aug_union(part1, part2), c};
  };
  auto gen = [iface, na, instance](
                 Side side, const Configuration& c) -> std::vector<WeightedAug> {
    std::vector<WeightedAug> out;
    if (side == Side::R) {
      std::set<std::pair<std::string, std::string>> seen;
      for (const auto& [x, y] : tree_splittings(c)) {
        auto key = std::make_pair(configuration_key(x), configuration_key(y));
        if (!seen.insert(key).second) continue;
        out.push_back(instance(canonical_configuration(x),
                               canonical_configuration(y)));
      }
    } else {
      auto [x, y] = split_config(c, na);
      out.push_back(instance(canonical_configuration(x),
                             canonical_configuration(y)));
    }
    return out;
  };
  return StructuralKernel(KernelKind::Mu, iface, std::move(gen));
}

StructuralKernel var_projection(const Context& ctx, int index) {
  const Arena gamma = Arena::of_context(ctx);
  int off = 0;
  for (int i = 0; i < index; ++i) off += ctx[i].type.atom_count();
  const Arena entry = Arena::of_type(ctx[index].type);
  IfacePtr iface = make_iface(gamma, entry);
  const int sz = entry.size();
  auto gen = [iface, off, sz](Side side,
                              const Configuration& c) -> std::vector<WeightedAug> {
    Configuration y;
    if (side == Side::R) {
      y = canonical_configuration(c);
    } else {
      // Only left configurations living entirely on entry `index` match.
      Configuration shifted = c;
      for (int& d : shifted.display) {
        if (d < off || d >= off + sz) return {};
        d -= off;
      }
      y = canonical_configuration(shifted);
    }
    Configuration embedded = y;
    for (int& d : embedded.display) d += off;
    return {{mapped_copycat(iface, embedded, [off](int n) { return n - off; }),
             Coeff(Nat(1), sym_count(y))}};
  };
  return StructuralKernel(KernelKind::VarZeta, iface, std::move(gen));
}

Strategy eps_strategy(const Arena& a) {
  Strategy s(make_iface(a, Arena::empty()));
  s.add(empty_aug(s.iface()), Coeff(1));
  return s;
}

Strategy eta_strategy(const Arena& a) {
  Strategy s(make_iface(Arena::empty(), a));
  s.add(empty_aug(s.iface()), Coeff(1));
  return s;
}

Strategy apply_kernel(const StructuralKernel& k, const Strategy& sigma,
                      Side side) {
  if (side == Side::L) {
    // sigma after k: the kernel's right side meets sigma's left side.
    assert(k.iface()->right == sigma.iface()->left);
    Strategy out(make_iface(k.iface()->left, sigma.iface()->right));
    for (const auto& [kp, ep] : sigma.table()) {
      Configuration c = ep.rep.side_config(Side::L);
      for (const WeightedAug& inst : k.generate(Side::R, c)) {
        const Coeff cc = inst.coeff * ep.coeff;
        for (const auto& phi : middle_symmetries(inst.aug, ep.rep))
          out.add(compose_aug(inst.aug, ep.rep, phi), cc);
      }
    }
    return out;
  }
  // k after sigma.
  assert(sigma.iface()->right == k.iface()->left);
  Strategy out(make_iface(sigma.iface()->left, k.iface()->right));
  for (const auto& [kq, eq] : sigma.table()) {
    Configuration c = eq.rep.side_config(Side::R);
    for (const WeightedAug& inst : k.generate(Side::L, c)) {
      const Coeff cc = inst.coeff * eq.coeff;
      for (const auto& phi : middle_symmetries(eq.rep, inst.aug))
        out.add(compose_aug(eq.rep, inst.aug, phi), cc);
    }
  }
  return out;
}

std::vector<Configuration> enumerate_positions(const Arena& a, int max_events) {
  std::vector<Configuration> out;
  std::set<std::string> seen;
  std::vector<Configuration> frontier = {Configuration()};
  out.push_back(Configuration());
  seen.insert(configuration_key(Configuration()));
  for (int sz = 0; sz < max_events; ++sz) {
    std::vector<Configuration> next;
    for (const Configuration& x : frontier) {
      // Extend by one event anywhere.
      std::vector<std::pair<int, int>> options;
      for (int r : a.roots()) options.emplace_back(-1, r);
      for (int e = 0; e < x.size(); ++e)
        for (int c : a.children(x.display[e])) options.emplace_back(e, c);
      for (auto [p, node] : options) {
        Configuration y = x;
        y.add(p, node);
        std::string key = configuration_key(y);
        if (!seen.insert(key).second) continue;
        Configuration canon = canonical_configuration(y);
        out.push_back(canon);
        next.push_back(std::move(canon));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Expressions and windowed comparison
// ---------------------------------------------------------------------------

Expr Expr::fin(Strategy s) {
  Expr e;
  e.kind_ = Kind::Fin;
  e.fin_ = std::make_shared<Strategy>(std::move(s));
  return e;
}

Expr Expr::kern(StructuralKernel k) {
  Expr e;
  e.kind_ = Kind::Kern;
  e.kern_ = std::make_shared<StructuralKernel>(std::move(k));
  return e;
}

Expr Expr::compose(Expr after, Expr before) {
  Expr e;
  e.kind_ = Kind::Compose;
  e.lhs_ = std::make_shared<Expr>(std::move(after));
  e.rhs_ = std::make_shared<Expr>(std::move(before));
  return e;
}

Expr Expr::tensor(Expr a, Expr b) {
  Expr e;
  e.kind_ = Kind::Tensor;
  e.lhs_ = std::make_shared<Expr>(std::move(a));
  e.rhs_ = std::make_shared<Expr>(std::move(b));
  return e;
}

Expr Expr::sum(Expr a, Expr b) {
  Expr e;
  e.kind_ = Kind::Sum;
  e.lhs_ = std::make_shared<Expr>(std::move(a));
  e.rhs_ = std::make_shared<Expr>(std::move(b));
  return e;
}

Interface Expr::interface_of() const {
  switch (kind_) {
    case Kind::Fin:
      return *fin_->iface();
    case Kind::Kern:
      return *kern_->iface();
    case Kind::Compose: {
      Interface after = lhs_->interface_of();
      Interface before = rhs_->interface_of();
      return Interface{before.left, after.right};
    }
    case Kind::Tensor: {
      Interface a = lhs_->interface_of();
      Interface b = rhs_->interface_of();
      return Interface{Arena::tensor({a.left, b.left}),
                       Arena::tensor({a.right, b.right})};
    }
    case Kind::Sum:
      return lhs_->interface_of();
  }
  return Interface{};
}

Strategy Expr::eval(int window) const {
  // The final comparison only looks at classes with at most `window`
  // events, so each visible side is bounded by the window.
  return eval_bounded(window, window, window);
}

Strategy Expr::eval_bounded(int window, int left_bound, int right_bound) const {
  switch (kind_) {
    case Kind::Fin:
      return fin_->truncated_sides(left_bound, right_bound);
    case Kind::Kern:
      return kern_->materialize(window).truncated_sides(left_bound,
                                                        right_bound);
    case Kind::Compose: {
      // A kernel composed against a finite strategy stays exact via
      // apply_kernel.  Kernel instances mirror their sides event for event,
      // so the hidden middle inherits the visible bound on the kernel's
      // outer side.
      if (lhs_->kind_ == Kind::Kern && rhs_->kind_ != Kind::Kern) {
        return apply_kernel(*lhs_->kern_,
                            rhs_->eval_bounded(window, left_bound, right_bound),
                            Side::R)
            .truncated_sides(left_bound, right_bound);
      }
      if (rhs_->kind_ == Kind::Kern && lhs_->kind_ != Kind::Kern) {
        return apply_kernel(*rhs_->kern_,
                            lhs_->eval_bounded(window, left_bound, right_bound),
                            Side::L)
            .truncated_sides(left_bound, right_bound);
      }
      return rescal::compose(lhs_->eval_bounded(window, -1, right_bound),
                             rhs_->eval_bounded(window, left_bound, -1));
    }
    case Kind::Tensor:
      // A factor's side is no bigger than the whole side.
      return tensor_strategy(
                 lhs_->eval_bounded(window, left_bound, right_bound),
                 rhs_->eval_bounded(window, left_bound, right_bound))
          .truncated_sides(left_bound, right_bound);
    case Kind::Sum:
      return lhs_->eval_bounded(window, left_bound, right_bound) +
             rhs_->eval_bounded(window, left_bound, right_bound);
  }
  return Strategy();
}

WindowReport windowed_equal(const Expr& lhs, const Expr& rhs, int window) {
  Strategy a = lhs.eval(window).truncated(window);
  Strategy b = rhs.eval(window).truncated(window);
  WindowReport report;
  auto it = a.table().begin();
  auto jt = b.table().begin();
  while (it != a.table().end() || jt != b.table().end()) {
    if (it != a.table().end() &&
        (jt == b.table().end() || it->first < jt->first)) {
      report.equal = false;
      report.counterexample_key = it->first;
      report.lhs = it->second.coeff;
      report.rhs = Coeff();
      return report;
    }
    if (jt != b.table().end() &&
        (it == a.table().end() || jt->first < it->first)) {
      report.equal = false;
      report.counterexample_key = jt->first;
      report.lhs = Coeff();
      report.rhs = jt->second.coeff;
      return report;
    }
    if (it->second.coeff != jt->second.coeff) {
      report.equal = false;
      report.counterexample_key = it->first;
      report.lhs = it->second.coeff;
      report.rhs = jt->second.coeff;
      return report;
    }
    ++it;
    ++jt;
  }
  return report;
}

}  // namespace rescal
