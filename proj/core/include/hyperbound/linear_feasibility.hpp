#pragma once

#include <optional>
#include <vector>

#include "hyperbound/polytope.hpp"

namespace hyperbound {

// <coeffs, w> >= rhs, or <coeffs, w> == rhs when equality is set.
struct LinearConstraint {
  Vector coeffs;
  Rational rhs;
  bool equality = false;
};

// Exact feasibility of a system of linear constraints over Q^n by
// substitution of equalities followed by Fourier-Motzkin elimination.
// Returns a witness point when feasible.
std::optional<Vector> find_feasible_point(std::size_t nvars, const std::vector<LinearConstraint>& constraints);

}  // namespace hyperbound
