#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lightnet/polyring/factor.hpp"
#include "lightnet/polyring/groebner.hpp"
#include "lightnet/polyring/ideal.hpp"
#include "lightnet/polyring/poly_io.hpp"

namespace lightnet {

/// Budget ran out inside minimal_primes. Carries the leaves finished so far
/// and the number of branches left unexplored.
class PartialResult : public std::runtime_error {
 public:
  PartialResult(std::vector<Ideal> finished, std::size_t unfinished)
      : std::runtime_error("minimal_primes: budget exhausted with " + std::to_string(finished.size()) +
                           " finished and " + std::to_string(unfinished) + " unfinished branches"),
        finished_(std::move(finished)),
        unfinished_(unfinished) {}

  const std::vector<Ideal>& finished() const { return finished_; }
  std::size_t unfinished() const { return unfinished_; }

 private:
  std::vector<Ideal> finished_;
  std::size_t unfinished_;
};

/// Snapshot taken whenever a node's basis is complete.
struct SplitProgress {
  std::size_t pending;
  std::size_t leaves;
  std::size_t basis_size;
};
using SplitProgressFn = std::function<void(const SplitProgress&)>;

namespace detail {

/// Splitting tree over V(I): each node is an ideal together with polynomials
/// known not to vanish identically on the branch.
class PrimeSplitter {
 public:
  PrimeSplitter(std::size_t arity, Budget* budget, SplitProgressFn progress)
      : arity_(arity), budget_(budget), progress_(std::move(progress)) {}

  std::vector<Ideal> run(const std::vector<Polynomial>& gens) {
    stack_.push_back({gens, {}});
    while (!stack_.empty()) {
      Node node = std::move(stack_.back());
      stack_.pop_back();
      try {
        process(std::move(node));
      } catch (const BudgetExceeded&) {
        throw PartialResult(leaves_, stack_.size() + 1);
      }
    }
    return leaves_;
  }

 private:
  struct Node {
    std::vector<Polynomial> gens;
    std::vector<Polynomial> nonzero;
  };

  static bool is_unit_basis(const std::vector<Polynomial>& g) { return g.size() == 1 && g.front().is_constant(); }

  static bool splits(const Polynomial& p, std::size_t max_terms) {
    if (p.size() > max_terms) {
      // Only the monomial content is cheap to find.
      std::uint32_t common = p.support();
      for (const auto& t : p.terms()) common &= t.monomial.support();
      return common != 0;
    }
    const auto fs = distinct_factors(p);
    return !(fs.size() == 1 && fs.front() == p.primitive());
  }

  // Children G + <f_i> for the factors of p not already known to be nonzero;
  // child i also keeps f_1..f_(i-1) nonzero.
  void split(const Node& node, const std::vector<Polynomial>& gens, const Polynomial& p) {
    std::vector<Polynomial> fs;
    for (auto& f : distinct_factors(p)) {
      if (std::find(node.nonzero.begin(), node.nonzero.end(), f) == node.nonzero.end()) fs.push_back(std::move(f));
    }
    // Children are pushed in reverse so they are processed in factor order.
    for (std::size_t i = fs.size(); i-- > 0;) {
      auto nonzero = node.nonzero;
      nonzero.insert(nonzero.end(), fs.begin(), fs.begin() + static_cast<std::ptrdiff_t>(i));
      auto child = gens;
      child.push_back(fs[i]);
      stack_.push_back({std::move(child), std::move(nonzero)});
    }
  }

  // Variables of gens that are neither generators nor known to be nonzero.
  std::vector<Polynomial> case_variables(const Node& node) const {
    std::uint32_t used = 0;
    for (const auto& g : node.gens) used |= g.support();
    std::vector<Polynomial> out;
    for (std::size_t v = 0; v < arity_; ++v) {
      const auto x = Polynomial::variable(arity_, v);
      if (((used >> v) & 1u) == 0) continue;
      if (std::find(node.nonzero.begin(), node.nonzero.end(), x) != node.nonzero.end()) continue;
      if (std::find(node.gens.begin(), node.gens.end(), x) != node.gens.end()) continue;
      out.push_back(x);
    }
    return out;
  }

  // V(I) = V(I : x^inf) u V(I + <x>) for the first variable x whose
  // saturation finishes within a step allowance that grows until one does.
  void case_split(Node node, const std::vector<Polynomial>& candidates) {
    for (std::size_t allowance = kProbeSteps;; allowance *= 4) {
      for (const auto& x : candidates) {
        if (budget_ && budget_->expired()) throw BudgetExceeded("minimal_primes: budget exhausted", 0, 0, 0);
        Budget probe = Budget::steps(allowance);
        std::optional<Ideal> away;
        try {
          away = saturate(Ideal(arity_, node.gens), x, &probe);
        } catch (const BudgetExceeded&) {
          continue;
        }
        // A unit saturation puts x in the radical.
        if (!away->is_unit()) {
          auto nonzero = node.nonzero;
          nonzero.push_back(x);
          stack_.push_back({away->generators(), std::move(nonzero)});
        }
        node.gens.push_back(x);
        stack_.push_back({std::move(node.gens), std::move(node.nonzero)});
        return;
      }
    }
  }

  void process(Node node) {
    if (budget_ && budget_->expired()) throw BudgetExceeded("minimal_primes: budget exhausted", 0, 0, 0);
    const auto ord = MonomialOrder::degrevlex();
    const auto candidates = case_variables(node);
    std::size_t added = 0;
    bool stalled = false;
    auto run = buchberger_until(node.gens, ord, budget_, [&](const Polynomial& p) {
      if (splits(p, kFactorTerms)) return true;
      stalled = !candidates.empty() && ++added > kStallLimit;
      return stalled;
    });
    if (auto* cut = std::get_if<InterruptedBasis>(&run)) {
      if (stalled) {
        case_split(std::move(node), candidates);
      } else {
        split(node, cut->generators, cut->element);
      }
      return;
    }
    auto g = std::get<std::vector<Polynomial>>(std::move(run));
    for (auto& p : g) p = p.with_arity(arity_);
    if (progress_) progress_({stack_.size(), leaves_.size(), g.size()});
    if (g.empty()) {
      leaves_.push_back(Ideal(arity_, {}));
      return;
    }
    if (is_unit_basis(g)) return;
    for (const auto& h : node.nonzero) {
      if (reduces_to_zero(h, g, ord, budget_)) return;
    }
    for (const auto& p : g) {
      if (splits(p, kFinalFactorTerms)) {
        split(node, g, p);
        return;
      }
    }

    // No split available: remove the components on which a constraint vanishes.
    Ideal current(arity_, g);
    for (const auto& h : node.nonzero) current = saturate(current, h, budget_);
    const auto& sat = current.groebner_basis(ord, budget_);
    if (is_unit_basis(sat)) return;
    if (sat != g) {
      stack_.push_back({sat, node.nonzero});
      return;
    }
    leaves_.push_back(Ideal::from_reduced_basis(arity_, g, ord));
  }

  static constexpr std::size_t kStallLimit = 40;
  static constexpr std::size_t kProbeSteps = 20000;
  static constexpr std::size_t kFactorTerms = 60;
  static constexpr std::size_t kFinalFactorTerms = 400;

  std::size_t arity_;
  Budget* budget_;
  SplitProgressFn progress_;
  std::vector<Node> stack_;
  std::vector<Ideal> leaves_;
};

}  // namespace detail

/// Canonical text of an ideal: its reduced degrevlex basis, one generator per line.
inline std::string canonical_text(const Ideal& i) {
  std::string s;
  for (const auto& g : i.groebner_basis()) s += to_string(g) + '\n';
  return s;
}

/// Minimal primes of a proper ideal by a factorizing splitting tree: a basis
/// element f1*...*fk spawns children I + <fi> on which f1..f(i-1) are kept
/// nonzero; a node that no longer splits is saturated by its nonzero
/// polynomials and becomes a leaf once stable. Basis elements are tested while
/// Buchberger runs; a node whose basis grows for long without a split is
/// divided into x != 0 and x = 0 for some variable x. Leaves are deduplicated and
/// only inclusion-minimal ones are returned, sorted by canonical_text.
/// Leaves are not proven prime.
inline std::vector<Ideal> minimal_primes(const Ideal& i, Budget* budget = nullptr, SplitProgressFn progress = {}) {
  detail::PrimeSplitter splitter(i.arity(), budget, std::move(progress));
  auto leaves = splitter.run(i.generators());
  if (leaves.empty()) throw std::invalid_argument("minimal_primes: unit ideal");

  std::sort(leaves.begin(), leaves.end(),
            [](const Ideal& a, const Ideal& b) { return canonical_text(a) < canonical_text(b); });
  leaves.erase(std::unique(leaves.begin(), leaves.end(),
                           [](const Ideal& a, const Ideal& b) { return canonical_text(a) == canonical_text(b); }),
               leaves.end());
  std::vector<Ideal> out;
  for (std::size_t a = 0; a < leaves.size(); ++a) {
    bool minimal = true;
    for (std::size_t b = 0; b < leaves.size() && minimal; ++b) {
      if (a != b && ideal_contains(leaves[a], leaves[b], budget)) minimal = false;
    }
    if (minimal) out.push_back(leaves[a]);
  }
  return out;
}

}  // namespace lightnet
