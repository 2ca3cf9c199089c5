#pragma once

#include <cstddef>
#include <vector>

#include "lvevo/errors.hpp"

namespace lvevo::core {

// Prey trait y = (alpha, beta): consumption exposure and birth rate.
// (0,0) is the "absent" sentinel used by the prey evolution process; all
// algebraic operations reject it.
struct PreyTrait {
  double alpha = 0.0;
  double beta = 0.0;

  bool absent() const { return alpha == 0.0 && beta == 0.0; }
};

inline void require_live(const PreyTrait& y, const char* where) {
  if (y.absent())
    throw DomainError(std::string(where) + ": absent-prey sentinel rejected");
  if (!(y.alpha > 0.0) || !(y.beta > 0.0))
    throw DomainError(std::string(where) + ": prey trait must be positive");
}

// Predator trait x = (alpha, delta): consumption and death rate. Predators
// coexist as a prefix when ordered by increasing characteristic ratio ell.
struct PredatorTrait {
  double alpha = 0.0;
  double delta = 0.0;

  double ell() const { return delta / alpha; }
};

inline void require_live(const PredatorTrait& x, const char* where) {
  if (!(x.alpha > 0.0) || !(x.delta > 0.0))
    throw DomainError(std::string(where) + ": predator trait must be positive");
}

// Fixed-prey parameters for the predator-side system. The intrinsic growth
// rate r = beta - 1 must be positive; delta is the fixed predator death rate
// used on the prey-evolution side.
struct SystemParams {
  double beta = 2.0;
  double r = 1.0;
  double delta = 1.0;

  static SystemParams from_beta(double beta, double delta = 1.0) {
    if (!(beta > 1.0))
      throw DomainError("SystemParams: beta must exceed 1");
    return SystemParams{beta, beta - 1.0, delta};
  }
  static SystemParams from_r(double r, double delta = 1.0) {
    if (!(r > 0.0))
      throw DomainError("SystemParams: r must be positive");
    return SystemParams{r + 1.0, r, delta};
  }
};

// Equilibrium densities split into the prey block and the predator block.
// Support masks are computed at tolerance zero: the closed forms are exact,
// so a coordinate either is strictly positive or it is not.
struct EquilibriumVector {
  std::vector<double> prey;
  std::vector<double> predators;

  std::vector<std::size_t> prey_support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < prey.size(); ++i)
      if (prey[i] > 0.0) s.push_back(i);
    return s;
  }
  std::vector<std::size_t> predator_support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < predators.size(); ++i)
      if (predators[i] > 0.0) s.push_back(i);
    return s;
  }
  double prey_total() const {
    double t = 0.0;
    for (double u : prey) t += u;
    return t;
  }
};

}  // namespace lvevo::core
