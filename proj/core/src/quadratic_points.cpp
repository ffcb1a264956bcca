#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <tuple>

#include "hyperbound/curve.hpp"
#include "hyperbound/error.hpp"

namespace hyperbound {

namespace {

// Small primes for the norm prefilter: a square in Q(sqrt(D)) has a square
// norm, so U^2 - D V^2 must be a square residue modulo each of these.
constexpr std::array<std::int64_t, 12> kFilterPrimes = {10007, 10009, 10037, 10039, 10061, 10067,
                                                        10069, 10079, 10091, 10093, 10099, 10103};

struct ResidueFilter {
  std::int64_t q;
  std::vector<bool> square;
  std::vector<std::int64_t> coeffs;  // ascending, reduced mod q
};

std::int64_t mod(std::int64_t a, std::int64_t q) {
  a %= q;
  return a < 0 ? a + q : a;
}

bool passes(const ResidueFilter& filter, std::int64_t D, std::int64_t a, std::int64_t b, std::int64_t c) {
  const std::int64_t q = filter.q;
  const std::int64_t dq = mod(D, q), aq = mod(a, q), bq = mod(b, q), cq = mod(c, q);
  const auto& f = filter.coeffs;
  const std::size_t n = f.size() - 1;
  // Homogenized Horner: H = sum f_k X^k c^{n-k} with X = a + b sqrt(D).
  std::int64_t u = f[n], v = 0, cpow = 1;
  for (std::size_t k = n; k-- > 0;) {
    cpow = cpow * cq % q;
    const std::int64_t nu = (u * aq + v * bq % q * dq) % q;
    const std::int64_t nv = (u * bq + v * aq) % q;
    u = (nu + f[k] * cpow) % q;
    v = nv;
  }
  const std::int64_t norm = mod(u * u % q - dq * (v * v % q) % q, q);
  return filter.square[static_cast<std::size_t>(norm)];
}

}  // namespace

std::vector<QuadraticPoint> search_quadratic_points(const CurveModel& curve, long search_bound) {
  if (search_bound < 1) throw InputError("search bound must be positive");
  const auto& desc = curve.coefficients();
  const std::size_t n = desc.size() - 1;

  std::vector<ResidueFilter> filters;
  for (auto q : kFilterPrimes) {
    ResidueFilter filter{q, std::vector<bool>(static_cast<std::size_t>(q), false), {}};
    for (std::int64_t y = 0; y < q; ++y) filter.square[static_cast<std::size_t>(y * y % q)] = true;
    for (auto it = desc.rbegin(); it != desc.rend(); ++it) {
      filter.coeffs.push_back(static_cast<std::int64_t>(mpz_fdiv_ui(it->get_mpz_t(), static_cast<unsigned long>(q))));
    }
    filters.push_back(std::move(filter));
  }

  std::vector<std::int64_t> discs;
  for (long m = 1; m <= search_bound; ++m) {
    for (long D : {-m, m}) {
      if (D == 1 || !is_squarefree(Integer(D))) continue;
      discs.push_back(D);
    }
  }

  std::vector<QuadraticPoint> out;
  const long B = search_bound;
  for (std::int64_t D : discs) {
    const Integer disc(static_cast<long>(D));
    for (long c = 1; c <= B; ++c) {
      for (long a = -B; a <= B; ++a) {
        for (long b = 1; b <= B; ++b) {
          if (std::gcd(std::gcd(std::abs(a), b), c) != 1) continue;
          bool ok = true;
          for (const auto& filter : filters) {
            if (!passes(filter, D, a, b, c)) {
              ok = false;
              break;
            }
          }
          if (!ok) continue;
          // Exact: c^n f(x) = U + V sqrt(D); f(x) is a square iff c (U + V sqrt(D)) is.
          Integer U = desc[0], V = 0, cpow = 1;
          for (std::size_t k = 1; k <= n; ++k) {
            cpow *= c;
            Integer nu = U * a + V * b * D;
            Integer nv = U * b + V * a;
            U = nu + desc[k] * cpow;
            V = nv;
          }
          auto root = sqrt_in_field(QuadraticElement(disc, Rational(U * c), Rational(V * c)));
          if (!root) continue;
          const Rational scale = Rational(ipow(Integer(c), static_cast<unsigned long>((n + 1) / 2)));
          QuadraticElement x(disc, Rational(a, c), Rational(b, c));
          QuadraticElement y(disc, root->u() / scale, root->v() / scale);
          out.push_back({disc, x, y});
          if (!y.is_zero()) out.push_back({disc, x, -y});
        }
      }
    }
  }

  std::sort(out.begin(), out.end(), [](const QuadraticPoint& l, const QuadraticPoint& r) {
    const auto key = [](const QuadraticPoint& p) {
      return std::make_tuple(Integer(abs(p.disc)), p.disc, p.x.u(), p.x.v(), p.y.u(), p.y.v());
    };
    return key(l) < key(r);
  });
  return out;
}

}  // namespace hyperbound
