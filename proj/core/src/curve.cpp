#include "hyperbound/curve.hpp"

#include <cmath>
#include <string>

#include "hyperbound/error.hpp"
#include "hyperbound/numtheory.hpp"

namespace hyperbound {

CurveModel::CurveModel(int genus, std::vector<Integer> descending) : genus_(genus), coeffs_(std::move(descending)) {
  if (genus_ < 2) throw InputError("genus must be at least 2, got " + std::to_string(genus_));
  if (coeffs_.size() != static_cast<std::size_t>(2 * genus_ + 2)) {
    throw InputError("genus " + std::to_string(genus_) + " needs " + std::to_string(2 * genus_ + 2) +
                     " coefficients, got " + std::to_string(coeffs_.size()));
  }
  if (coeffs_.front() != 1) throw InputError("f must be monic");
  depressed_ = coeffs_[1] == 0;
  poly_ = QPolynomial::from_descending(coeffs_);
  Rational d = hyperbound::discriminant(poly_);
  if (d == 0) throw InputError("f = " + poly_.to_string() + " is not separable (zero discriminant)");
  disc_ = d.get_num();
}

CurveModel CurveModel::from_descending(std::vector<Integer> descending) {
  const auto n = descending.size();
  if (n < 2 || n % 2 != 0) throw InputError("f must have odd degree 2g+1 (got " + std::to_string(n) + " coefficients)");
  return CurveModel(static_cast<int>((n - 2) / 2), std::move(descending));
}

const Integer& CurveModel::coefficient_of(int power) const {
  if (power < 0 || power > degree()) throw InputError("power out of range");
  return coeffs_[static_cast<std::size_t>(degree() - power)];
}

const Integer& CurveModel::a(int i) const {
  if (i < 2 || i > degree()) throw InputError("a_i is defined for 2 <= i <= 2g+1");
  return coeffs_[static_cast<std::size_t>(i)];
}

double Height::approx() const {
  if (magnitude == 0) return 0.0;
  // log keeps huge coefficients finite.
  const double log_mag = std::log(magnitude.get_d());
  return std::exp(log_mag / index);
}

std::strong_ordering operator<=>(const Height& lhs, const Height& rhs) {
  // |a|^{1/i} vs |b|^{1/j}  <=>  |a|^j vs |b|^i.
  const Integer left = ipow(lhs.magnitude, static_cast<unsigned long>(rhs.index));
  const Integer right = ipow(rhs.magnitude, static_cast<unsigned long>(lhs.index));
  const int c = cmp(left, right);
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

namespace {

void require_depressed(const CurveModel& curve) {
  if (!curve.depressed()) throw PreconditionError("height defined only for minimal-form models");
}

}  // namespace

Height height(const CurveModel& curve) {
  require_depressed(curve);
  Height best{0, 1};
  for (int i = 2; i <= curve.degree(); ++i) {
    Height h{abs(curve.a(i)), i};
    if (h.magnitude == 0) continue;
    if (best.magnitude == 0 || h > best) best = h;
  }
  return best;
}

Minimality is_minimal(const CurveModel& curve) {
  require_depressed(curve);
  // Any witness p satisfies p^{2i} <= |a_i| for each nonzero a_i.
  Integer bound;
  bool have_bound = false;
  for (int i = 2; i <= curve.degree(); ++i) {
    if (curve.a(i) == 0) continue;
    Integer root;
    mpz_root(root.get_mpz_t(), Integer(abs(curve.a(i))).get_mpz_t(), static_cast<unsigned long>(2 * i));
    if (!have_bound || root < bound) bound = root;
    have_bound = true;
  }
  if (!have_bound) return {};
  const unsigned long limit = bound.get_ui();
  for (unsigned long p = 2; p <= limit; ++p) {
    if (!is_prime(p)) continue;
    bool divides_all = true;
    for (int i = 2; i <= curve.degree() && divides_all; ++i) {
      if (curve.a(i) == 0) continue;
      const Integer power = ipow(Integer(p), static_cast<unsigned long>(2 * i));
      divides_all = mpz_divisible_p(curve.a(i).get_mpz_t(), power.get_mpz_t()) != 0;
    }
    if (divides_all) return {false, p};
  }
  return {};
}

Integer discriminant(const CurveModel& curve) { return curve.discriminant(); }

bool good_reduction(const CurveModel& curve, std::uint64_t p) {
  if (p == 2) throw PreconditionError("even prime not supported for y^2=f(x) models");
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  return !mpz_divisible_ui_p(curve.discriminant().get_mpz_t(), static_cast<unsigned long>(p));
}

FpPolynomial reduce_mod(const CurveModel& curve, std::uint64_t p) {
  if (!good_reduction(curve, p)) {
    throw PreconditionError("curve has bad reduction at " + std::to_string(p));
  }
  std::vector<std::uint32_t> asc;
  for (auto it = curve.coefficients().rbegin(); it != curve.coefficients().rend(); ++it) {
    asc.push_back(static_cast<std::uint32_t>(mpz_fdiv_ui(it->get_mpz_t(), static_cast<unsigned long>(p))));
  }
  return FpPolynomial(static_cast<std::uint32_t>(p), std::move(asc));
}

}  // namespace hyperbound
