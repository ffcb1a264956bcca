#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hyperbound/rational.hpp"

namespace hyperbound {

// Dense univariate polynomial over Q, coefficients stored lowest degree
// first and kept trimmed (no zero leading coefficient; zero polynomial is
// the empty vector).
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<Rational> ascending);
  QPolynomial(std::initializer_list<long> ascending);

  static QPolynomial from_descending(const std::vector<Integer>& descending);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int power) const;
  const Rational& leading() const { return coeffs_.back(); }

  QPolynomial derivative() const;
  Rational evaluate(const Rational& x) const;

  friend QPolynomial operator+(const QPolynomial& a, const QPolynomial& b);
  friend QPolynomial operator-(const QPolynomial& a, const QPolynomial& b);
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend bool operator==(const QPolynomial& a, const QPolynomial& b) = default;

  // Euclidean division; divisor must be nonzero.
  std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& divisor) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Monic gcd (zero if both inputs are zero).
QPolynomial gcd(QPolynomial a, QPolynomial b);

// Res(a, b) via the Euclidean remainder sequence.
Rational resultant(const QPolynomial& a, const QPolynomial& b);

// disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f), for deg f >= 1.
Rational discriminant(const QPolynomial& f);

}  // namespace hyperbound
