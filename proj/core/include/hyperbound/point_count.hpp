#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "hyperbound/finite_field.hpp"
#include "hyperbound/numtheory.hpp"

namespace hyperbound {

// A point of y^2 = f(x) over a fixed FFContext, or the single point at
// infinity of the odd-degree model (always rational).
struct CurvePoint {
  bool at_infinity = false;
  FFContext::Code x = 0;
  FFContext::Code y = 0;

  static CurvePoint infinity() { return {true, 0, 0}; }
  friend auto operator<=>(const CurvePoint&, const CurvePoint&) = default;
};

// #{(x, y) in F_q^2 : y^2 = f(x)} by exhaustive enumeration. f must be
// separable of odd degree over F_p.
std::uint64_t count_affine_points(const FpPolynomial& f, const FFContext& ctx);

// The affine points, sorted by (x, y) code.
std::vector<CurvePoint> affine_points(const FpPolynomial& f, const FFContext& ctx);

// Partition of the given points plus infinity into orbits of x -> x^p.
// Orbits are listed with infinity first, then by smallest member; each orbit
// starts at its smallest member and follows Frobenius.
std::vector<std::vector<CurvePoint>> frobenius_orbits(const std::vector<CurvePoint>& points,
                                                      const FFContext& ctx);

int moebius(std::uint64_t n);

// Number of closed points of degree d on P^1 over F_p.
Integer closed_points_P1(std::uint64_t p, unsigned d);

// Number of closed points of degree d given the point counts
// counts[k-1] = #X(F_{p^k}) for k = 1..d (Moebius inversion).
Integer closed_points_from_counts(const std::vector<Integer>& counts, unsigned d);

}  // namespace hyperbound
