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

#include "laws.hpp"

namespace rescal {

namespace {

LawResult run_windowed(const std::string& name, const Expr& lhs,
                       const Expr& rhs, int window) {
  WindowReport r = windowed_equal(lhs, rhs, window);
  LawResult out{name, r.equal, ""};
  if (!r.equal) {
    out.detail = "class " +
                 (r.counterexample_key.empty() ? std::string("<empty>")
                                               : r.counterexample_key) +
                 ": " + r.lhs.to_string() + " vs " + r.rhs.to_string();
  }
  return out;
}

LawResult run_exact(const std::string& name, const Strategy& lhs,
                    const Strategy& rhs) {
  Report report;
  compare_strategies(lhs, rhs, name, &report);
  LawResult out{name, report.ok(), ""};
  if (!report.ok()) {
    const Mismatch& m = report.mismatches.front();
    out.detail = "class " + (m.key.empty() ? std::string("<empty>") : m.key) +
                 ": " + m.lhs.to_string() + " vs " + m.rhs.to_string();
  }
  return out;
}

}  // namespace

std::vector<LawResult> check_structural_laws(const Arena& a, int window) {
  std::vector<LawResult> out;
  const Arena aa = Arena::tensor({a, a});
  const Arena i = Arena::empty();

  Expr id = Expr::kern(StructuralKernel::identity(a));
  Expr pid = Expr::kern(StructuralKernel::pointed_identity(a));
  Expr delta = Expr::kern(StructuralKernel::delta(a));
  Expr mu = Expr::kern(StructuralKernel::mu(a));
  Expr gamma = Expr::kern(StructuralKernel::gamma(a, a));
  Expr eps = Expr::fin(eps_strategy(a));
  Expr eta = Expr::fin(eta_strategy(a));
  Expr lam = Expr::kern(StructuralKernel::lambda_unit(a));
  Expr rho = Expr::kern(StructuralKernel::rho_unit(a));
  Expr alpha = Expr::kern(StructuralKernel::alpha(a, a, a));

  // Monoid.
  out.push_back(run_windowed(
      "monoid associativity",
      Expr::compose(mu, Expr::tensor(mu, id)),
      Expr::compose(Expr::compose(mu, Expr::tensor(id, mu)), alpha), window));
  out.push_back(run_windowed(
      "monoid left unit", Expr::compose(mu, Expr::tensor(eta, id)), lam,
      window));
  out.push_back(run_windowed(
      "monoid right unit", Expr::compose(mu, Expr::tensor(id, eta)), rho,
      window));
  out.push_back(
      run_windowed("monoid commutativity", Expr::compose(mu, gamma), mu, window));

  // Comonoid.
  out.push_back(run_windowed(
      "comonoid coassociativity",
      Expr::compose(alpha, Expr::compose(Expr::tensor(delta, id), delta)),
      Expr::compose(Expr::tensor(id, delta), delta), window));
  out.push_back(run_windowed(
      "comonoid left counit",
      Expr::compose(lam, Expr::compose(Expr::tensor(eps, id), delta)), id,
      window));
  out.push_back(run_windowed(
      "comonoid right counit",
      Expr::compose(rho, Expr::compose(Expr::tensor(id, eps), delta)), id,
      window));
  out.push_back(run_windowed("comonoid cocommutativity",
                             Expr::compose(gamma, delta), delta, window));

  // Bialgebra.
  {
    // d = (id x gamma x id) . (delta x delta), g = mu x mu.
    Expr mid = Expr::tensor(id, Expr::tensor(gamma, id));
    Expr d = Expr::compose(mid, Expr::tensor(delta, delta));
    Expr g = Expr::tensor(mu, mu);
    out.push_back(run_windowed("bialgebra distributivity",
                               Expr::compose(delta, mu), Expr::compose(g, d),
                               window));
  }
  out.push_back(run_windowed("bialgebra delta-eta",
                             Expr::compose(delta, eta),
                             Expr::tensor(eta, eta), window));
  out.push_back(run_windowed("bialgebra eps-mu", Expr::compose(eps, mu),
                             Expr::tensor(eps, eps), window));
  out.push_back(run_exact("bialgebra eps-eta",
                          compose(eps_strategy(a), eta_strategy(a)),
                          unit_morphism(make_iface(i, i))));

  // Pointed identity.
  out.push_back(run_windowed(
      "pointed split under delta", Expr::compose(delta, pid),
      Expr::sum(Expr::tensor(pid, eta), Expr::tensor(eta, pid)), window));
  out.push_back(run_windowed(
      "pointed pick through mu", Expr::compose(pid, mu),
      Expr::sum(Expr::tensor(pid, eps), Expr::tensor(eps, pid)), window));
  out.push_back(run_windowed("pointed idempotence", Expr::compose(pid, pid),
                             pid, window));
  {
    Expr zero_to_i = Expr::fin(Strategy::zero(make_iface(a, i)));
    out.push_back(run_windowed("eps after pointed is zero",
                               Expr::compose(eps, pid), zero_to_i, window));
    Expr zero_from_i = Expr::fin(Strategy::zero(make_iface(i, a)));
    out.push_back(run_windowed("pointed after eta is zero",
                               Expr::compose(pid, eta), zero_from_i, window));
  }
  out.push_back(
      run_windowed("identity neutrality", Expr::compose(id, pid), pid, window));
  return out;
}

std::vector<LawResult> check_pointed_bag_laws(const Context& ctx,
                                              const Type& type,
                                              const std::vector<Term>& terms) {
  std::vector<LawResult> out;
  const Arena gamma = Arena::of_context(ctx);
  const Arena b = Arena::of_type(type);
  IfacePtr iface = make_iface(gamma, b);

  SemBag bag;
  for (const Term& t : terms) bag.push_back(interpret_term(ctx, t));
  Strategy pi = big_product(iface, bag);

  // delta_B . Pi f = sum over bag partitionings of (Pi f1 x Pi f2) . delta_A.
  {
    Strategy lhs = apply_kernel(StructuralKernel::delta(b), pi, Side::R);
    Strategy rhs(make_iface(gamma, Arena::tensor({b, b})));
    const int n = static_cast<int>(bag.size());
    for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
      SemBag f1, f2;
      for (int j = 0; j < n; ++j)
        ((mask >> j) & 1 ? f1 : f2).push_back(bag[j]);
      Strategy t = tensor_strategy(big_product(iface, f1),
                                   big_product(iface, f2));
      rhs.add(apply_kernel(StructuralKernel::delta(gamma), t, Side::L));
    }
    out.push_back(run_exact("bag compatibility with delta", lhs, rhs));
  }
  // eps_B . Pi f = 1 when the bag is empty, 0 otherwise.
  {
    Strategy lhs = compose(eps_strategy(b), pi);
    Strategy rhs = bag.empty() ? unit_morphism(make_iface(gamma, Arena::empty()))
                               : Strategy::zero(make_iface(gamma, Arena::empty()));
    out.push_back(run_exact("bag erasure by eps", lhs, rhs));
  }
  // Singleton extraction: pid_B . Pi f = f for [f], 0 for other sizes.
  {
    Strategy lhs = apply_kernel(StructuralKernel::pointed_identity(b), pi,
                                Side::R);
    Strategy rhs = bag.size() == 1 ? bag[0] : Strategy::zero(iface);
    out.push_back(run_exact("pointed identity picks singletons", lhs, rhs));
  }
  return out;
}

std::vector<LawResult> check_copointed_bag_laws(const Arena& a, int max_events) {
  std::vector<LawResult> out;
  // Copycats over pointed positions are co-pointed (their left projection
  // is pointed), giving honest finite instances for the dual diagram.
  SemBag bag;
  IfacePtr iface = make_iface(a, a);
  for (const Configuration& x : enumerate_positions(a, max_events)) {
    if (x.roots().size() != 1) continue;
    bag.push_back(Strategy::of(copycat(a, x)));
    if (bag.size() == 2) break;
  }
  Strategy pi = big_product(iface, bag);

  // Pi f . mu_A = mu_B . sum (Pi f1 x Pi f2).
  {
    Strategy lhs = apply_kernel(StructuralKernel::mu(a), pi, Side::L);
    Strategy rhs(make_iface(Arena::tensor({a, a}), a));
    const int n = static_cast<int>(bag.size());
    for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
      SemBag f1, f2;
      for (int j = 0; j < n; ++j)
        ((mask >> j) & 1 ? f1 : f2).push_back(bag[j]);
      Strategy t = tensor_strategy(big_product(iface, f1),
                                   big_product(iface, f2));
      rhs.add(apply_kernel(StructuralKernel::mu(a), t, Side::R));
    }
    out.push_back(run_exact("co-pointed bag compatibility with mu", lhs, rhs));
  }
  // Pi f . eta_A = 1 when empty, 0 otherwise.
  {
    Strategy lhs = compose(pi, eta_strategy(a));
    Strategy rhs = bag.empty()
                       ? unit_morphism(make_iface(Arena::empty(), a))
                       : Strategy::zero(make_iface(Arena::empty(), a));
    out.push_back(run_exact("co-pointed bag erasure by eta", lhs, rhs));
  }
  return out;
}

std::vector<LawResult> check_all_laws(const Arena& a, int window) {
  std::vector<LawResult> out = check_structural_laws(a, window);
  // Instance laws on a small family of closed normal terms at o -> o.
  Context ctx;
  Type oo = parse_type("o -> o");
  std::vector<Term> one = {parse_term("\\x:o. x")};
  std::vector<Term> two = {parse_term("\\x:o. x"), parse_term("\\x:o. x")};
  for (auto& r : check_pointed_bag_laws(ctx, oo, {})) out.push_back(r);
  for (auto& r : check_pointed_bag_laws(ctx, oo, one)) out.push_back(r);
  for (auto& r : check_pointed_bag_laws(ctx, oo, two)) out.push_back(r);
  for (auto& r : check_copointed_bag_laws(a, 3)) out.push_back(r);
  return out;
}

}  // namespace rescal
