#include "hyperbound/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace hyperbound {

QPolynomial::QPolynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

QPolynomial::QPolynomial(std::initializer_list<long> ascending) {
  for (long c : ascending) coeffs_.emplace_back(c);
  trim();
}

QPolynomial QPolynomial::from_descending(const std::vector<Integer>& descending) {
  std::vector<Rational> asc(descending.rbegin(), descending.rend());
  return QPolynomial(std::move(asc));
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational QPolynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(power)];
}

QPolynomial QPolynomial::derivative() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * static_cast<long>(i));
  return QPolynomial(std::move(out));
}

Rational QPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPolynomial operator+(const QPolynomial& a, const QPolynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return QPolynomial(std::move(out));
}

QPolynomial operator-(const QPolynomial& a, const QPolynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
  return QPolynomial(std::move(out));
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPolynomial(std::move(out));
}

std::pair<QPolynomial, QPolynomial> QPolynomial::divmod(const QPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  const int dd = divisor.degree();
  if (degree() < dd) return {QPolynomial{}, *this};
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1));
  for (int k = degree(); k >= dd; --k) {
    const Rational c = rem[static_cast<std::size_t>(k)] / divisor.leading();
    if (c == 0) continue;
    quot[static_cast<std::size_t>(k - dd)] = c;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(k - dd + j)] -= c * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  return {QPolynomial(std::move(quot)), QPolynomial(std::move(rem))};
}

std::string QPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rational mag = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (mag != 1 || k == 0) os << mag.get_str();
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

QPolynomial gcd(QPolynomial a, QPolynomial b) {
  while (!b.is_zero()) {
    QPolynomial r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  std::vector<Rational> monic = a.coefficients();
  const Rational lc = monic.back();
  for (auto& c : monic) c /= lc;
  return QPolynomial(std::move(monic));
}

Rational resultant(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  QPolynomial f = a;
  QPolynomial g = b;
  Rational acc = 1;
  // Res(f, g) = (-1)^{deg f deg g} Res(g, f) and
  // Res(f, g) = lc(g)^{deg f - deg r} Res(g, r)   with r = f mod g, up to that sign.
  while (true) {
    const int m = f.degree();
    const int n = g.degree();
    if (n == 0) {
      Rational lead = g.leading();
      Rational power = 1;
      for (int i = 0; i < m; ++i) power *= lead;
      return acc * power;
    }
    QPolynomial r = f.divmod(g).second;
    if (r.is_zero()) return 0;
    const int k = r.degree();
    if ((m * n) % 2 == 1) acc = -acc;
    Rational lead = g.leading();
    for (int i = 0; i < m - k; ++i) acc *= lead;
    f = std::move(g);
    g = std::move(r);
  }
}

Rational discriminant(const QPolynomial& f) {
  const int n = f.degree();
  if (n < 1) throw std::invalid_argument("discriminant needs degree >= 1");
  Rational res = resultant(f, f.derivative());
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 == 1) res = -res;
  return res / f.leading();
}

}  // namespace hyperbound
