#include "hyperbound/quadratic_field.hpp"

#include <sstream>

#include "hyperbound/error.hpp"

namespace hyperbound {

namespace {

void require_same_field(const QuadraticElement& a, const QuadraticElement& b) {
  if (a.disc() != b.disc()) throw InputError("quadratic field elements from different fields");
}

}  // namespace

QuadraticElement::QuadraticElement(Integer disc, Rational u, Rational v)
    : disc_(std::move(disc)), u_(std::move(u)), v_(std::move(v)) {
  if (disc_ == 0 || disc_ == 1) throw InputError("quadratic field discriminant must not be 0 or 1");
  u_.canonicalize();
  v_.canonicalize();
}

QuadraticElement operator+(const QuadraticElement& a, const QuadraticElement& b) {
  require_same_field(a, b);
  return {a.disc_, a.u_ + b.u_, a.v_ + b.v_};
}

QuadraticElement operator-(const QuadraticElement& a, const QuadraticElement& b) {
  require_same_field(a, b);
  return {a.disc_, a.u_ - b.u_, a.v_ - b.v_};
}

QuadraticElement operator*(const QuadraticElement& a, const QuadraticElement& b) {
  require_same_field(a, b);
  return {a.disc_, a.u_ * b.u_ + Rational(a.disc_) * a.v_ * b.v_, a.u_ * b.v_ + a.v_ * b.u_};
}

QuadraticElement QuadraticElement::evaluate(const QPolynomial& f, const QuadraticElement& x) {
  QuadraticElement acc = rational(x.disc(), 0);
  const auto& c = f.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + rational(x.disc(), *it);
  return acc;
}

std::string QuadraticElement::to_string() const {
  std::ostringstream os;
  os << u_.get_str() << (v_ < 0 ? " - " : " + ") << Rational(abs(v_)).get_str() << "*sqrt(" << disc_.get_str() << ")";
  return os.str();
}

bool is_squarefree(const Integer& n) {
  if (n == 0) return false;
  Integer m = abs(n);
  for (unsigned long p = 2; Integer(p) * p <= m; ++p) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      m /= p;
      if (mpz_divisible_ui_p(m.get_mpz_t(), p)) return false;
    }
  }
  return true;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) {
    return std::nullopt;
  }
  Integer num, den;
  mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
  return Rational(num, den);
}

std::optional<QuadraticElement> sqrt_in_field(const QuadraticElement& z) {
  const Rational D(z.disc());
  if (z.v() == 0) {
    if (auto s = rational_sqrt(z.u())) return QuadraticElement(z.disc(), *s, 0);
    // s = 0, D t^2 = u.
    if (auto t = rational_sqrt(z.u() / D)) return QuadraticElement(z.disc(), 0, *t);
    return std::nullopt;
  }
  // With T = t^2: 4 D T^2 - 4 u T + v^2 = 0, so T = (u +- sqrt(u^2 - D v^2)) / (2 D).
  auto root = rational_sqrt(z.norm());
  if (!root) return std::nullopt;
  for (int sign : {1, -1}) {
    Rational T = (z.u() + sign * *root) / (2 * D);
    if (T <= 0) continue;
    auto t = rational_sqrt(T);
    if (!t) continue;
    Rational s = z.v() / (2 * *t);
    return QuadraticElement(z.disc(), s, *t);
  }
  return std::nullopt;
}

}  // namespace hyperbound
