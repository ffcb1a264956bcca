#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "hyperbound/fp_polynomial.hpp"
#include "hyperbound/qpoly.hpp"
#include "hyperbound/quadratic_field.hpp"
#include "hyperbound/rational.hpp"

namespace hyperbound {

// y^2 = f(x) with f in Z[x] monic, separable, of degree 2g+1, g >= 2.
class CurveModel {
 public:
  // Coefficients of f listed from x^{2g+1} down to the constant term.
  CurveModel(int genus, std::vector<Integer> descending);
  static CurveModel from_descending(std::vector<Integer> descending);

  int genus() const { return genus_; }
  int degree() const { return 2 * genus_ + 1; }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  const Integer& coefficient_of(int power) const;

  // True when the x^{2g} coefficient vanishes.
  bool depressed() const { return depressed_; }
  // a_i, the coefficient of x^{2g+1-i}, for 2 <= i <= 2g+1.
  const Integer& a(int i) const;

  const QPolynomial& polynomial() const { return poly_; }
  const Integer& discriminant() const { return disc_; }

  std::string to_string() const { return poly_.to_string(); }
  friend bool operator==(const CurveModel& a, const CurveModel& b) { return a.coeffs_ == b.coeffs_; }

 private:
  int genus_;
  std::vector<Integer> coeffs_;
  bool depressed_;
  QPolynomial poly_;
  Integer disc_;
};

// max_i |a_i|^{1/i}, kept as the maximizing pair (|a_i|, i) and compared
// exactly through |a|^j <=> |b|^i. Ties go to the smaller index.
struct Height {
  Integer magnitude;
  int index = 1;

  double approx() const;
  friend std::strong_ordering operator<=>(const Height& lhs, const Height& rhs);
  friend bool operator==(const Height& lhs, const Height& rhs) { return (lhs <=> rhs) == 0; }
};

Height height(const CurveModel& curve);

struct Minimality {
  bool minimal = true;
  std::optional<std::uint64_t> witness;
};

// Checks that no prime p has p^{2i} | a_i for every i >= 2.
Minimality is_minimal(const CurveModel& curve);

Integer discriminant(const CurveModel& curve);

// p must be an odd prime; p = 2 is rejected for this model shape.
bool good_reduction(const CurveModel& curve, std::uint64_t p);

// f mod p; requires good reduction at p.
FpPolynomial reduce_mod(const CurveModel& curve, std::uint64_t p);

// A point (x, y) with x = u + v sqrt(D), v != 0, and y in Q(sqrt(D)).
struct QuadraticPoint {
  Integer disc;
  QuadraticElement x;
  QuadraticElement y;
};

// Brute-force search over squarefree D with |D| <= bound and
// x = (a + b sqrt(D)) / c, |a|, |b| <= bound, 1 <= c <= bound, b > 0,
// gcd(a, b, c) = 1 (b > 0 picks one point of each conjugate pair). Every
// returned y is an exact square root of f(x); both signs are reported.
// Sorted by |D|, then D, then x and y compared as (u, v) pairs.
std::vector<QuadraticPoint> search_quadratic_points(const CurveModel& curve, long search_bound);

}  // namespace hyperbound
