#pragma once

#include <compare>
#include <string>

#include "hyperbound/qpoly.hpp"
#include "hyperbound/rational.hpp"

namespace hyperbound {

// Element u + v*sqrt(D) of Q(sqrt(D)), D a squarefree integer other than 0, 1.
class QuadraticElement {
 public:
  QuadraticElement(Integer disc, Rational u, Rational v);

  static QuadraticElement rational(Integer disc, Rational u) { return {std::move(disc), std::move(u), 0}; }

  const Integer& disc() const { return disc_; }
  const Rational& u() const { return u_; }
  const Rational& v() const { return v_; }
  bool is_zero() const { return u_ == 0 && v_ == 0; }
  bool is_rational() const { return v_ == 0; }

  QuadraticElement conjugate() const { return {disc_, u_, -v_}; }
  Rational norm() const { return u_ * u_ - Rational(disc_) * v_ * v_; }
  Rational trace() const { return 2 * u_; }

  friend QuadraticElement operator+(const QuadraticElement& a, const QuadraticElement& b);
  friend QuadraticElement operator-(const QuadraticElement& a, const QuadraticElement& b);
  friend QuadraticElement operator*(const QuadraticElement& a, const QuadraticElement& b);
  friend QuadraticElement operator-(const QuadraticElement& a) { return {a.disc_, -a.u_, -a.v_}; }
  friend bool operator==(const QuadraticElement& a, const QuadraticElement& b) {
    return a.disc_ == b.disc_ && a.u_ == b.u_ && a.v_ == b.v_;
  }

  // Evaluates a rational polynomial at this element by Horner's rule.
  static QuadraticElement evaluate(const QPolynomial& f, const QuadraticElement& x);

  std::string to_string() const;

 private:
  Integer disc_;
  Rational u_;
  Rational v_;
};

bool is_squarefree(const Integer& n);

// Square root of an element of Q(sqrt(D)) inside Q(sqrt(D)), if any. Solves
// s^2 + D t^2 = u, 2 s t = v over Q.
std::optional<QuadraticElement> sqrt_in_field(const QuadraticElement& z);

// Exact rational square root, if q is a square in Q.
std::optional<Rational> rational_sqrt(const Rational& q);

}  // namespace hyperbound
