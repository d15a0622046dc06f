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

// Strategies: weighted sums of augmentation classes, composed by summing
// interactions over all mediating symmetries.
//
// Two augmentations sharing a middle arena only interact through a chosen
// symmetry between their middle configurations, and the result depends on
// the choice; composition therefore sums sigma(q)tau(p) over all triples
// (q, p, symmetry).  Identities and the other structural strategies have
// infinite support (one copycat per position), so they are never
// materialized: they live as position-indexed kernels instantiated at the
// positions that actually occur, or truncated to a finite window for
// kernel-kernel law checking.

#ifndef RESCAL_STRATEGY_HPP_
#define RESCAL_STRATEGY_HPP_

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "causal.hpp"
#include "correspond.hpp"

namespace rescal {

// Raised when an interaction graph has a cycle.  Valid augmentations never
// deadlock; seeing this exception means an engine bug.
struct DeadlockDetected : std::runtime_error {
  DeadlockDetected() : std::runtime_error("interaction graph has a cycle") {}
};

// ---------------------------------------------------------------------------
// Interaction and composition of augmentations
// ---------------------------------------------------------------------------

// A node of the interaction: an event of q (tag 0) or of p (tag 1).
struct InteractionNode {
  int tag;    // 0 = q, 1 = p
  int event;
};

struct Interaction {
  std::vector<InteractionNode> nodes;        // q's events then p's events
  std::vector<std::vector<int>> edges;       // immediate causes, by source
  std::vector<int> topo;                     // a topological order
  std::vector<int> ipred;                    // unique immediate predecessor
};

// The interaction of q on A |- B with p on B |- C along a symmetry phi from
// q's middle configuration to p's (as returned by middle_symmetries).
// Throws DeadlockDetected on a cycle.
Interaction interact(const Aug& q, const Aug& p,
                     const std::vector<int>& phi_q_to_p);

// Mediating symmetries between the B-side configurations, as maps from q's
// events (displaying right) to p's events (displaying left).
std::vector<std::vector<int>> middle_symmetries(const Aug& q, const Aug& p);

// Hiding: restriction of the interaction to the events of A and C.
Aug compose_aug(const Aug& q, const Aug& p, const std::vector<int>& phi);

// ---------------------------------------------------------------------------
// Strategies
// ---------------------------------------------------------------------------

class Strategy {
 public:
  struct Entry {
    Aug rep;
    Coeff coeff;
  };
  using Table = std::map<std::string, Entry>;

  Strategy() = default;
  explicit Strategy(IfacePtr iface) : iface_(std::move(iface)) {}
  static Strategy zero(IfacePtr iface) { return Strategy(std::move(iface)); }
  // The strategy with a single augmentation class.
  static Strategy of(const Aug& q, Coeff c = Coeff(1));

  const IfacePtr& iface() const { return iface_; }
  const Table& table() const { return table_; }
  bool is_zero() const { return table_.empty(); }
  size_t support_size() const { return table_.size(); }
  Coeff at(const std::string& key) const;

  void add(const CanonAug& q, const Coeff& c);
  void add(const Aug& q, const Coeff& c) { add(canonicalize(q), c); }
  void add(const Strategy& other);
  void scale(const Coeff& c);

  friend Strategy operator+(const Strategy& a, const Strategy& b);
  friend bool operator==(const Strategy& a, const Strategy& b);
  friend bool operator!=(const Strategy& a, const Strategy& b) {
    return !(a == b);
  }

  // Entries with at most max_events events.
  Strategy truncated(int max_events) const;
  // Entries whose left/right projections stay within the given bounds
  // (negative bound = unbounded).
  Strategy truncated_sides(int left_bound, int right_bound) const;

 private:
  IfacePtr iface_;
  Table table_;
};

// Bilinear composition: for sigma on A |- B and tau on B |- C, sum
// sigma(q) tau(p) over all support pairs and mediating symmetries.
Strategy compose(const Strategy& tau, const Strategy& sigma);

// Tensor of strategies: pairwise tensor of augmentations, coefficients
// multiply.
Aug tensor_aug(const Aug& a, const Aug& b);
Strategy tensor_strategy(const Strategy& a, const Strategy& b);

// Currying on strategies: per-entry display surgery, coefficients kept.
Strategy curry_strategy(const Strategy& s, const Arena& gamma,
                        const Arena& domain, const Arena& codomain);
Strategy uncurry_strategy(const Strategy& s, const Arena& gamma,
                          const Arena& domain, const Arena& codomain);

// ---------------------------------------------------------------------------
// Structural kernels (lazy infinite strategies)
// ---------------------------------------------------------------------------

enum class KernelKind {
  Id,          // A |- A
  PointedId,   // A |- A, pointed positions only
  Delta,       // A |- A x A      (comultiplication)
  Mu,          // A x A |- A      (multiplication)
  Eps,         // A |- I          (counit: empty support side)
  Eta,         // I |- A          (unit)
  LambdaUnit,  // I x A |- A
  RhoUnit,     // A x I |- A
  Alpha,       // (A x B) x C |- A x (B x C)
  Gamma,       // A x B |- B x A
  Merge,       // |Gamma| x |Delta| |- |Gamma, Delta|
  VarZeta,     // |A| |- |B_1| x ... x |B_n| => o   (spine iso)
};

struct WeightedAug {
  Aug aug;
  Coeff coeff;
};

// A position-indexed family of copycat-shaped augmentations with 1/|Sym|
// coefficients.  generate(side, x) returns the instances whose
// configuration on `side` is symmetric to x (finitely many).
class StructuralKernel {
 public:
  StructuralKernel(KernelKind kind, IfacePtr iface,
                   std::function<std::vector<WeightedAug>(Side, const Configuration&)>
                       generate);

  KernelKind kind() const { return kind_; }
  const IfacePtr& iface() const { return iface_; }
  std::vector<WeightedAug> generate(Side side, const Configuration& x) const {
    return generate_(side, x);
  }
  // Finite truncation: all instances whose per-side configurations have at
  // most `window` events.
  Strategy materialize(int window) const;

  // Constructors for the kernel zoo.
  static StructuralKernel identity(const Arena& a);
  static StructuralKernel pointed_identity(const Arena& a);
  static StructuralKernel delta(const Arena& a);
  static StructuralKernel mu(const Arena& a);
  static StructuralKernel gamma(const Arena& a, const Arena& b);
  static StructuralKernel alpha(const Arena& a, const Arena& b, const Arena& c);
  static StructuralKernel lambda_unit(const Arena& a);
  static StructuralKernel rho_unit(const Arena& a);
  static StructuralKernel merge(const Arena& gamma, const Arena& delta);
  static StructuralKernel var_zeta(const Type& a);

 private:
  KernelKind kind_;
  IfacePtr iface_;
  std::function<std::vector<WeightedAug>(Side, const Configuration&)> generate_;
};

// Finite strategies for the (co)units: support is the empty augmentation
// with coefficient one.
Strategy eps_strategy(const Arena& a);
Strategy eta_strategy(const Arena& a);

// Copycat over x (a configuration on the left arena) whose right-side
// displays are mapped by beta, a polarity-preserving node map.
Aug mapped_copycat(const IfacePtr& iface, const Configuration& x,
                   const std::function<int(int)>& beta);

// The variable projection var_x: |Gamma| -> (|B| x ... => o), a copycat
// between the entry's occurrence in the context and the spine view of its
// type (the tables coincide, so the spine iso is the identity).
StructuralKernel var_projection(const Context& ctx, int index);

// Splits a configuration on tensor({A, B}) into its two components, where
// A has left_size nodes.
std::pair<Configuration, Configuration> split_config(const Configuration& c,
                                                     int left_size);

// Composition with a kernel on one side of sigma (left: sigma after K;
// right: K after sigma).  Instantiates the kernel only at the positions
// occurring as matching-side projections of sigma's support, which agrees
// with composing against the full infinite kernel.
Strategy apply_kernel(const StructuralKernel& k, const Strategy& sigma, Side side);

// All positions on an arena with at most max_events events (canonical
// representatives).
std::vector<Configuration> enumerate_positions(const Arena& a, int max_events);

// ---------------------------------------------------------------------------
// Windowed comparison of strategy expressions
// ---------------------------------------------------------------------------

// Expressions over finite strategies and kernels, compared coefficientwise
// on every augmentation class with at most `window` events.  Kernels are
// truncated at the window; in a chain of copycat-shaped kernels every
// hidden event is matched to a visible one, so middle positions never
// outgrow the window.
class Expr {
 public:
  static Expr fin(Strategy s);
  static Expr kern(StructuralKernel k);
  static Expr compose(Expr after, Expr before);
  static Expr tensor(Expr a, Expr b);
  static Expr sum(Expr a, Expr b);

  Strategy eval(int window) const;
  Interface interface_of() const;

 private:
  // Evaluation under per-side bounds: a composite keeps the first factor's
  // left and the last factor's right visible, so entries beyond the bound
  // on a side that stays visible can never reach a class within the
  // window.  Negative bound = unbounded (the side gets hidden).
  Strategy eval_bounded(int window, int left_bound, int right_bound) const;

  enum class Kind { Fin, Kern, Compose, Tensor, Sum };
  Kind kind_;
  std::shared_ptr<Strategy> fin_;
  std::shared_ptr<StructuralKernel> kern_;
  std::shared_ptr<Expr> lhs_, rhs_;
};

struct WindowReport {
  bool equal = true;
  std::string counterexample_key;  // first differing class, when unequal
  Coeff lhs, rhs;
};

WindowReport windowed_equal(const Expr& lhs, const Expr& rhs, int window);

}  // namespace rescal

#endif  // RESCAL_STRATEGY_HPP_
