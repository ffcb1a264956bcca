#include "hyperbound/point_count.hpp"

#include <algorithm>

#include "hyperbound/error.hpp"

namespace hyperbound {

namespace {

void require_curve_polynomial(const FpPolynomial& f, const FFContext& ctx) {
  if (f.prime() != ctx.characteristic()) throw InputError("curve polynomial and field differ in characteristic");
  if (f.degree() < 1 || f.degree() % 2 == 0) throw InputError("curve polynomial must have odd degree");
  if (!is_squarefree(f)) throw PreconditionError("curve polynomial " + f.to_string() + " is not separable over F_p");
}

}  // namespace

std::uint64_t count_affine_points(const FpPolynomial& f, const FFContext& ctx) {
  require_curve_polynomial(f, ctx);
  std::uint64_t total = 0;
  for (FFContext::Code x = 0; x < ctx.order(); ++x) {
    const auto fx = ctx.evaluate(f, x);
    if (fx == 0) {
      total += 1;
    } else if (ctx.is_square(fx)) {
      total += 2;
    }
  }
  return total;
}

std::vector<CurvePoint> affine_points(const FpPolynomial& f, const FFContext& ctx) {
  require_curve_polynomial(f, ctx);
  // y -> y^2 lookup, grouped by square.
  std::vector<std::vector<FFContext::Code>> roots(ctx.order());
  for (FFContext::Code y = 0; y < ctx.order(); ++y) roots[ctx.mul(y, y)].push_back(y);
  std::vector<CurvePoint> out;
  for (FFContext::Code x = 0; x < ctx.order(); ++x) {
    for (auto y : roots[ctx.evaluate(f, x)]) out.push_back({false, x, y});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<CurvePoint>> frobenius_orbits(const std::vector<CurvePoint>& points,
                                                      const FFContext& ctx) {
  std::vector<CurvePoint> remaining = points;
  std::sort(remaining.begin(), remaining.end());
  remaining.erase(std::unique(remaining.begin(), remaining.end()), remaining.end());
  std::vector<std::vector<CurvePoint>> orbits{{CurvePoint::infinity()}};
  std::vector<bool> used(remaining.size(), false);
  for (std::size_t i = 0; i < remaining.size(); ++i) {
    if (used[i] || remaining[i].at_infinity) continue;
    std::vector<CurvePoint> orbit;
    CurvePoint current = remaining[i];
    do {
      auto it = std::lower_bound(remaining.begin(), remaining.end(), current);
      if (it == remaining.end() || *it != current) {
        throw InputError("point set is not closed under Frobenius");
      }
      used[static_cast<std::size_t>(it - remaining.begin())] = true;
      orbit.push_back(current);
      current = {false, ctx.frobenius(current.x), ctx.frobenius(current.y)};
    } while (current != remaining[i]);
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

int moebius(std::uint64_t n) {
  if (n == 0) throw InputError("moebius(n) needs n >= 1");
  int sign = 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    n /= d;
    if (n % d == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

Integer closed_points_P1(std::uint64_t p, unsigned d) {
  if (d == 0) throw InputError("closed point degree must be positive");
  std::vector<Integer> counts;
  for (unsigned k = 1; k <= d; ++k) counts.push_back(ipow(Integer(static_cast<unsigned long>(p)), k) + 1);
  return closed_points_from_counts(counts, d);
}

Integer closed_points_from_counts(const std::vector<Integer>& counts, unsigned d) {
  if (d == 0 || counts.size() < d) throw InputError("need point counts over F_{p^k} for k = 1..d");
  Integer sum = 0;
  for (unsigned e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    sum += moebius(e) * counts[d / e - 1];
  }
  if (sum % d != 0) throw std::logic_error("point counts are not consistent with a Frobenius action");
  return sum / d;
}

}  // namespace hyperbound
