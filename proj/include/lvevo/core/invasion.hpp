#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "lvevo/core/equilibria.hpp"
#include "lvevo/core/traits.hpp"
#include "lvevo/errors.hpp"

namespace lvevo::core {

namespace detail {
// Shared building blocks of the invasion algebra against resident y1:
//   P = 1 + alpha1 (alpha1 - delta)   (= (beta1 + alpha1^2)(1 - sigma_1^1))
//   Q = beta1 (alpha1 - delta) - alpha1  (= (beta1 + alpha1^2) sigma_2^1)
// They satisfy beta1*P - (beta1 + alpha1^2) = alpha1*Q, which is what makes
// the centered forms below vanish identically at the resident.
struct ResidentAlgebra {
  double P;
  double Q;
  double R;  // beta1 + alpha1^2
};

inline ResidentAlgebra resident_algebra(const PreyTrait& y1, double delta) {
  return {1.0 + y1.alpha * (y1.alpha - delta),
          y1.beta * (y1.alpha - delta) - y1.alpha,
          y1.beta + y1.alpha * y1.alpha};
}
}  // namespace detail

// Invasion growth rate of `invader` against `resident` held at its
// one-prey/one-predator equilibrium:
//   F(y1, y2) = beta2 (1 - sigma_1^1(y1)) - 1 - alpha2 sigma_2^1(y1)
// computed in the centered form
//   F = [ (beta2 - beta1) P - (alpha2 - alpha1) Q ] / (beta1 + alpha1^2)
// so F(y, y) == 0 holds exactly. The invader invades iff F > 0.
inline double invasion_fitness(const PreyTrait& resident,
                               const PreyTrait& invader, double delta) {
  require_live(resident, "invasion_fitness");
  require_live(invader, "invasion_fitness");
  const auto a = detail::resident_algebra(resident, delta);
  return ((invader.beta - resident.beta) * a.P -
          (invader.alpha - resident.alpha) * a.Q) /
         a.R;
}

// The beta-levels of the invadability curves at abscissa alpha:
//   g: boundary of U_{y1}  (below it, the resident invades the point)
//   h: boundary of L_{y1}  (above it, the point invades the resident)
// Both are written centered at the resident, so g(alpha1) == h(alpha1) ==
// beta1 exactly and the tangency at the resident is explicit:
//   g(alpha) = beta1 + (alpha - alpha1) ((beta1-1) alpha - beta1 delta) / D
//   h(alpha) = beta1 + (alpha - alpha1) Q / P,   D = 1 + alpha1 (alpha - delta)
struct InvadabilityCurves {
  double g;
  double h;
};

inline InvadabilityCurves invadability_curves(const PreyTrait& y1, double alpha,
                                              double delta) {
  if (!is_viable(y1, delta))
    throw NotViableError("invadability_curves: resident not viable");
  const double d = 1.0 + y1.alpha * (alpha - delta);
  if (d == 0.0)
    throw SingularError("invadability_curves: g denominator vanishes");
  const auto a = detail::resident_algebra(y1, delta);
  const double w = (y1.beta - 1.0) * alpha - y1.beta * delta;
  return {y1.beta + (alpha - y1.alpha) * w / d,
          y1.beta + (alpha - y1.alpha) * a.Q / a.P};
}

// Unit normal to the common tangent of the invadability curves at y1,
// proportional to (-sigma_2^1, 1 - sigma_1^1). Always unit length; the
// second component is positive (sigma_1^1 < 1 for viable prey).
inline std::array<double, 2> normal_vector(const PreyTrait& y1, double delta) {
  if (!is_viable(y1, delta))
    throw NotViableError("normal_vector: prey trait not viable");
  const auto a = detail::resident_algebra(y1, delta);
  const double n = std::hypot(a.Q, a.P);
  return {-a.Q / n, a.P / n};
}

// Interior equilibrium sigma^2(y1,y2) of two prey plus the predator, from
// the 3x3 linear system r + A sigma = 0 (partial pivoting). Requires mutual
// invadability; all three coordinates must come out strictly positive.
inline EquilibriumVector two_prey_equilibrium(const PreyTrait& y1,
                                              const PreyTrait& y2,
                                              double delta) {
  if (!(invasion_fitness(y1, y2, delta) > 0.0 &&
        invasion_fitness(y2, y1, delta) > 0.0))
    throw NotCoexistingError(
        "two_prey_equilibrium: mutual invadability fails");

  double m[3][4] = {
      {-y1.beta, -y1.beta, -y1.alpha, -(y1.beta - 1.0)},
      {-y2.beta, -y2.beta, -y2.alpha, -(y2.beta - 1.0)},
      {y1.alpha, y2.alpha, -1.0, delta},
  };
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int rr = col + 1; rr < 3; ++rr)
      if (std::abs(m[rr][col]) > std::abs(m[piv][col])) piv = rr;
    if (m[piv][col] == 0.0)
      throw NotCoexistingError("two_prey_equilibrium: singular system");
    if (piv != col)
      for (int c = col; c < 4; ++c) std::swap(m[piv][c], m[col][c]);
    for (int rr = 0; rr < 3; ++rr) {
      if (rr == col) continue;
      const double f = m[rr][col] / m[col][col];
      for (int c = col; c < 4; ++c) m[rr][c] -= f * m[col][c];
    }
  }
  const double u1 = m[0][3] / m[0][0];
  const double u2 = m[1][3] / m[1][1];
  const double v = m[2][3] / m[2][2];
  if (!(u1 > 0.0 && u2 > 0.0 && v > 0.0))
    throw NotCoexistingError("two_prey_equilibrium: nonpositive solution");
  return EquilibriumVector{{u1, u2}, {v}};
}

// Outcome of an ecological resolution: which of the input prey survive (by
// index, ascending), whether the predator persists, and the equilibrium
// densities aligned with the input order.
struct PreyOutcome {
  std::vector<std::size_t> support;
  bool predator_alive = true;
  EquilibriumVector equilibrium;
};

// Saturated-equilibrium enumeration for up to three prey and the predator.
// Candidate supports have at most two prey (three prey cannot coexist); the
// unique saturated candidate is the global attractor. Exact sign ties raise
// DegenerateTieError so stochastic callers can resample.
//
// Unlike classify_prey_outcome, this resolver also admits non-viable traits:
// a prey that cannot sustain the predator can still win on its own, in which
// case predator_alive comes back false.
inline PreyOutcome resolve_prey_community(std::span<const PreyTrait> ys,
                                          double delta) {
  const std::size_t n = ys.size();
  if (n == 0 || n > 3)
    throw DomainError("resolve_prey_community: expected 1..3 prey traits");
  for (const auto& y : ys) require_live(y, "resolve_prey_community");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (ys[i].beta == ys[j].beta)
        throw DegenerateTieError("resolve_prey_community: equal birth rates");

  struct Candidate {
    std::vector<std::size_t> support;
    bool predator_alive;
    std::vector<double> prey_density;  // aligned with `support`
    double predator_density;
  };
  std::vector<Candidate> saturated;
  bool tie = false;

  auto note = [&](bool ok_saturated, bool boundary, Candidate cand) {
    if (boundary) tie = true;
    if (ok_saturated) saturated.push_back(std::move(cand));
  };

  // Singletons, predator present (viable trait) or absent (beta > 1 only).
  for (std::size_t i = 0; i < n; ++i) {
    if (is_viable(ys[i], delta)) {
      const auto s = one_prey_closed_form(ys[i], delta);
      bool ok = true, boundary = false;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i) continue;
        const double f = invasion_fitness(ys[i], ys[k], delta);
        if (f > 0.0) ok = false;
        if (f == 0.0) boundary = true;
      }
      note(ok, boundary,
           Candidate{{i}, true, {s.prey}, s.predator});
    } else if (ys[i].beta > 1.0) {
      // Prey-only state: saturated iff every other prey has a smaller birth
      // rate and the predator cannot invade (exactly non-viability of i).
      const double u = (ys[i].beta - 1.0) / ys[i].beta;
      bool ok = true;
      for (std::size_t k = 0; k < n; ++k)
        if (k != i && ys[k].beta > ys[i].beta) ok = false;
      note(ok, false, Candidate{{i}, false, {u}, 0.0});
    }
  }

  // Pairs with the predator. Mutual invadability plus an interior solution.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double fij = invasion_fitness(ys[i], ys[j], delta);
      const double fji = invasion_fitness(ys[j], ys[i], delta);
      if (fij == 0.0 || fji == 0.0) tie = true;
      if (!(fij > 0.0 && fji > 0.0)) continue;
      EquilibriumVector eq;
      try {
        eq = two_prey_equilibrium(ys[i], ys[j], delta);
      } catch (const NotCoexistingError&) {
        continue;
      }
      bool ok = true, boundary = false;
      const double total = eq.prey[0] + eq.prey[1];
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const double f =
            ys[k].beta * (1.0 - total) - 1.0 - ys[k].alpha * eq.predators[0];
        if (f > 0.0) ok = false;
        if (f == 0.0) boundary = true;
      }
      note(ok, boundary,
           Candidate{{i, j}, true, {eq.prey[0], eq.prey[1]}, eq.predators[0]});
    }
  }

  if (saturated.size() != 1) {
    if (tie || saturated.size() > 1)
      throw DegenerateTieError(
          "resolve_prey_community: saturated support not unique");
    // No saturated support at all: every prey has beta <= 1 and dies.
    PreyOutcome out;
    out.predator_alive = false;
    out.equilibrium.prey.assign(n, 0.0);
    out.equilibrium.predators = {0.0};
    return out;
  }

  const Candidate& c = saturated.front();
  PreyOutcome out;
  out.support = c.support;
  out.predator_alive = c.predator_alive;
  out.equilibrium.prey.assign(n, 0.0);
  for (std::size_t k = 0; k < c.support.size(); ++k)
    out.equilibrium.prey[c.support[k]] = c.prey_density[k];
  out.equilibrium.predators = {c.predator_density};
  return out;
}

// Ecological outcome after a mutant invades one or two coexisting residents
// (the two-prey and three-prey case analyses). Inputs must all be viable and
// have pairwise distinct birth rates. The returned support indexes the
// concatenated list (residents..., invader).
inline PreyOutcome classify_prey_outcome(std::span<const PreyTrait> residents,
                                         const PreyTrait& invader,
                                         double delta) {
  if (residents.empty() || residents.size() > 2)
    throw DomainError("classify_prey_outcome: expected 1 or 2 residents");
  std::vector<PreyTrait> ys(residents.begin(), residents.end());
  ys.push_back(invader);
  for (const auto& y : ys)
    if (!is_viable(y, delta))
      throw NotViableError("classify_prey_outcome: all traits must be viable");
  return resolve_prey_community(ys, delta);
}

}  // namespace lvevo::core
