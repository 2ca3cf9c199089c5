#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "lvevo/core/traits.hpp"
#include "lvevo/errors.hpp"

namespace lvevo::core {

// Prey-only logistic equilibrium sigma^0 = (beta - 1)/beta.
inline double prey_only_equilibrium(const PreyTrait& y) {
  require_live(y, "prey_only_equilibrium");
  if (!(y.beta > 1.0))
    throw NotViableError("prey_only_equilibrium: beta must exceed 1");
  return (y.beta - 1.0) / y.beta;
}

// Viable region: beta > alpha/(alpha - delta) > 1. Prey in this region
// support a positive predator density at equilibrium.
inline bool is_viable(const PreyTrait& y, double delta) {
  if (y.absent()) return false;
  if (!(y.alpha > delta)) return false;
  const double q = y.alpha / (y.alpha - delta);
  return y.beta > q && q > 1.0;
}

// Raw closed forms for one prey plus the predator:
//   sigma_1^1 = (beta - 1 + alpha*delta) / (beta + alpha^2)
//   sigma_2^1 = ((beta - 1)*alpha - beta*delta) / (beta + alpha^2)
// No viability gate; sigma_2^1 <= 0 signals a non-viable prey.
struct PreyPredatorPair {
  double prey;
  double predator;
};

inline PreyPredatorPair one_prey_closed_form(const PreyTrait& y, double delta) {
  const double den = y.beta + y.alpha * y.alpha;
  return {(y.beta - 1.0 + y.alpha * delta) / den,
          ((y.beta - 1.0) * y.alpha - y.beta * delta) / den};
}

inline EquilibriumVector one_prey_equilibrium(const PreyTrait& y, double delta) {
  require_live(y, "one_prey_equilibrium");
  if (!is_viable(y, delta))
    throw NotViableError("one_prey_equilibrium: prey trait not viable");
  const auto s = one_prey_closed_form(y, delta);
  return EquilibriumVector{{s.prey}, {s.predator}};
}

// sigma^k for predators x_1..x_k against the fixed prey:
//   sigma_0^k = (r + sum_i alpha_i delta_i) / (beta + sum_i alpha_i^2)
//   sigma_j^k = alpha_j sigma_0^k - delta_j
// The empty list yields the prey-only equilibrium r/beta. No positivity
// filtering happens here; coexisting_prefix decides who actually coexists.
inline EquilibriumVector predator_equilibrium(std::span<const PredatorTrait> xs,
                                              const SystemParams& p) {
  double num = p.r;
  double den = p.beta;
  for (const auto& x : xs) {
    num += x.alpha * x.delta;
    den += x.alpha * x.alpha;
  }
  const double s0 = num / den;
  EquilibriumVector eq;
  eq.prey = {s0};
  eq.predators.reserve(xs.size());
  for (const auto& x : xs) eq.predators.push_back(x.alpha * s0 - x.delta);
  return eq;
}

// Sort by increasing characteristic ratio; exact ties broken by larger alpha
// first (ties have probability zero under the mutation kernels, the order
// just has to be deterministic).
inline std::vector<PredatorTrait> sort_by_ratio(std::vector<PredatorTrait> xs) {
  std::sort(xs.begin(), xs.end(),
            [](const PredatorTrait& a, const PredatorTrait& b) {
              const double la = a.ell(), lb = b.ell();
              if (la != lb) return la < lb;
              return a.alpha > b.alpha;
            });
  return xs;
}

// Coexistence condition for the first k predators of a ratio-sorted list:
//   beta*ell_k + sum_{j<=k} alpha_j^2 (ell_k - ell_j) < r
inline bool coexistence_condition(std::span<const PredatorTrait> sorted,
                                  std::size_t k, const SystemParams& p) {
  const double ell_k = sorted[k - 1].ell();
  double lhs = p.beta * ell_k;
  for (std::size_t j = 0; j < k; ++j)
    lhs += sorted[j].alpha * sorted[j].alpha * (ell_k - sorted[j].ell());
  return lhs < p.r;
}

// Largest k for which the coexistence condition holds on the ratio-sorted
// list (0 if none). The condition is monotone in k, so the first m predators
// form the coexisting set.
inline std::size_t coexisting_prefix_sorted(std::span<const PredatorTrait> sorted,
                                            const SystemParams& p) {
  std::size_t m = 0;
  for (std::size_t k = 1; k <= sorted.size(); ++k)
    if (coexistence_condition(sorted, k, p)) m = k;
  return m;
}

inline std::size_t coexisting_prefix(std::span<const PredatorTrait> xs,
                                     const SystemParams& p) {
  const auto sorted = sort_by_ratio({xs.begin(), xs.end()});
  return coexisting_prefix_sorted(sorted, p);
}

// Fixed-delta specialization (delta == 1, alphas strictly decreasing):
//   sum_j (alpha_j/alpha_N)(alpha_j - alpha_N) < r - beta/alpha_N
inline bool check_fixed_delta(std::span<const double> alphas_decreasing,
                              const SystemParams& p) {
  if (alphas_decreasing.empty())
    throw DomainError("check_fixed_delta: empty list");
  const double a_min = alphas_decreasing.back();
  double lhs = 0.0;
  for (double a : alphas_decreasing) lhs += (a / a_min) * (a - a_min);
  return lhs < p.r - p.beta / a_min;
}

// Fixed-alpha specialization in log traits X_j = -log(delta_j), X strictly
// decreasing:
//   e^{-X_N} ( beta + sum_j (1 - e^{-(X_j - X_N)}) ) < r
inline bool check_fixed_alpha(std::span<const double> x_decreasing,
                              const SystemParams& p) {
  if (x_decreasing.empty())
    throw DomainError("check_fixed_alpha: empty list");
  const double x_min = x_decreasing.back();
  double s = p.beta;
  for (double x : x_decreasing) s += 1.0 - std::exp(-(x - x_min));
  return std::exp(-x_min) * s < p.r;
}

}  // namespace lvevo::core
