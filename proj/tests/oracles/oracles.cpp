#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace oracle {

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t r = c; r < n; ++r) {
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    }
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

Rational sylvester_resultant(const std::vector<Integer>& f, const std::vector<Integer>& g) {
  const std::size_t m = f.size() - 1, n = g.size() - 1;
  const std::size_t size = m + n;
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size, Rational(0)));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i <= m; ++i) s[r][r + i] = f[i];
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t i = 0; i <= n; ++i) s[n + r][r + i] = g[i];
  }
  return determinant(std::move(s));
}

Integer sylvester_discriminant(const std::vector<Integer>& f) {
  const std::size_t n = f.size() - 1;
  std::vector<Integer> df;
  for (std::size_t i = 0; i < n; ++i) df.push_back(f[i] * static_cast<unsigned long>(n - i));
  Rational res = sylvester_resultant(f, df) / Rational(f[0]);
  if ((n * (n - 1) / 2) % 2 == 1) res = -res;
  return res.get_num();
}

Rational shoelace_area(std::vector<Vector> v) {
  Rational cx = 0, cy = 0;
  for (const auto& p : v) {
    cx += p[0];
    cy += p[1];
  }
  cx /= static_cast<unsigned long>(v.size());
  cy /= static_cast<unsigned long>(v.size());
  auto quadrant = [&](const Vector& p) {
    const Rational x = p[0] - cx, y = p[1] - cy;
    if (y > 0 || (y == 0 && x > 0)) return 0;
    return 1;
  };
  std::sort(v.begin(), v.end(), [&](const Vector& a, const Vector& b) {
    const int qa = quadrant(a), qb = quadrant(b);
    if (qa != qb) return qa < qb;
    const Rational cross = (a[0] - cx) * (b[1] - cy) - (a[1] - cy) * (b[0] - cx);
    return cross > 0;
  });
  Rational twice = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    twice += a[0] * b[1] - a[1] * b[0];
  }
  return abs(twice) / 2;
}

namespace {

using Poly = std::vector<std::uint32_t>;  // ascending, monic polys stored with leading 1

bool divides(const Poly& d, Poly f, std::uint32_t p) {
  // d monic
  while (f.size() >= d.size()) {
    const std::uint32_t lead = f.back();
    const std::size_t shift = f.size() - d.size();
    for (std::size_t i = 0; i < d.size(); ++i) {
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + (p - lead) * static_cast<std::uint64_t>(d[i])) % p);
    }
    while (!f.empty() && f.back() == 0) f.pop_back();
  }
  return f.empty();
}

std::vector<Poly> monic_polys(std::uint32_t p, unsigned deg) {
  std::vector<Poly> out;
  std::uint64_t total = 1;
  for (unsigned i = 0; i < deg; ++i) total *= p;
  for (std::uint64_t code = 0; code < total; ++code) {
    Poly f(deg + 1, 0);
    std::uint64_t c = code;
    for (unsigned i = 0; i < deg; ++i) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    f[deg] = 1;
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

std::uint64_t closed_points_P1_brute(std::uint32_t p, unsigned d) {
  if (d == 1) return p + 1;
  std::vector<Poly> small;
  for (unsigned k = 1; 2 * k <= d; ++k) {
    for (auto& f : monic_polys(p, k)) small.push_back(std::move(f));
  }
  std::uint64_t count = 0;
  for (const auto& f : monic_polys(p, d)) {
    bool irreducible = true;
    for (const auto& s : small) {
      if (divides(s, f, p)) {
        irreducible = false;
        break;
      }
    }
    if (irreducible) ++count;
  }
  return count;
}

Integer best_allocation(const std::vector<hyperbound::VanishingGroup>& groups, int budget) {
  std::optional<Integer> best;
  std::function<void(std::size_t, int, Integer)> dfs = [&](std::size_t i, int left, Integer acc) {
    if (i == groups.size()) {
      if (!best || acc > *best) best = acc;
      return;
    }
    dfs(i + 1, left, acc + groups[i].gain_inactive);
    if (groups[i].cost <= left) dfs(i + 1, left - groups[i].cost, acc + groups[i].gain_active);
  };
  dfs(0, budget, 0);
  return *best;
}

namespace {

using Term = std::pair<Exponent, Rational>;

Rational value_at(const Term& t, const Vector& w) {
  Rational s = t.second;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * t.first[i];
  return s;
}

// Exponents attaining the minimum at w when at least two do.
void collect(const std::vector<Term>& terms, const Vector& w, const std::vector<Rational>& radii,
             std::set<Exponent>& out) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] < radii[i]) return;
  }
  std::optional<Rational> lo;
  for (const auto& t : terms) {
    const Rational v = value_at(t, w);
    if (!lo || v < *lo) lo = v;
  }
  std::vector<Exponent> at;
  for (const auto& t : terms) {
    if (value_at(t, w) == *lo) at.push_back(t.first);
  }
  if (at.size() >= 2) out.insert(at.begin(), at.end());
}

// Line a.w = b in the plane.
struct Line {
  Rational a0, a1, b;
};

std::optional<Vector> intersect(const Line& l, const Line& k) {
  const Rational det = l.a0 * k.a1 - l.a1 * k.a0;
  if (det == 0) return std::nullopt;
  return Vector{(l.b * k.a1 - l.a1 * k.b) / det, (l.a0 * k.b - l.b * k.a0) / det};
}

}  // namespace

std::vector<Exponent> newton_by_vertices(const hyperbound::ValuedSeries& f, const std::vector<Rational>& radii) {
  const std::vector<Term> terms(f.terms().begin(), f.terms().end());
  const std::size_t d = f.nvars();
  std::set<Exponent> out;
  if (d == 1) {
    collect(terms, {radii[0]}, radii, out);
    for (std::size_t i = 0; i < terms.size(); ++i) {
      for (std::size_t j = i + 1; j < terms.size(); ++j) {
        const Rational w = (terms[j].second - terms[i].second) / Rational(terms[i].first[0] - terms[j].first[0]);
        collect(terms, {w}, radii, out);
      }
    }
  } else if (d == 2) {
    std::vector<Line> lines{{1, 0, radii[0]}, {0, 1, radii[1]}};
    for (std::size_t i = 0; i < terms.size(); ++i) {
      for (std::size_t j = i + 1; j < terms.size(); ++j) {
        const auto& [ui, vi] = terms[i];
        const auto& [uj, vj] = terms[j];
        if (ui[0] == uj[0] && ui[1] == uj[1]) continue;
        lines.push_back({Rational(ui[0] - uj[0]), Rational(ui[1] - uj[1]), vj - vi});
      }
    }
    for (std::size_t i = 0; i < lines.size(); ++i) {
      for (std::size_t j = i + 1; j < lines.size(); ++j) {
        if (auto w = intersect(lines[i], lines[j])) collect(terms, *w, radii, out);
      }
    }
  } else {
    throw std::invalid_argument("vertex oracle handles one or two variables");
  }
  return {out.begin(), out.end()};
}

std::vector<Exponent> newton_by_grid(const hyperbound::ValuedSeries& f, const std::vector<Rational>& radii, int den,
                                     int steps) {
  const std::vector<Term> terms(f.terms().begin(), f.terms().end());
  std::set<Exponent> out;
  const std::size_t d = f.nvars();
  std::vector<int> k(d, 0);
  while (true) {
    Vector w(d);
    for (std::size_t i = 0; i < d; ++i) w[i] = radii[i] + Rational(k[i], den);
    collect(terms, w, radii, out);
    std::size_t i = 0;
    while (i < d && k[i] == steps) k[i++] = 0;
    if (i == d) break;
    ++k[i];
  }
  return {out.begin(), out.end()};
}

std::pair<Integer, int> height_by_common_power(const std::vector<Integer>& a) {
  // a[0] is a_2.
  unsigned long L = 1;
  for (std::size_t i = 0; i < a.size(); ++i) L = std::lcm(L, static_cast<unsigned long>(i + 2));
  Integer best_pow = -1;
  std::pair<Integer, int> best{0, 1};
  for (std::size_t i = 0; i < a.size(); ++i) {
    Integer mag = abs(a[i]);
    Integer pw;
    mpz_pow_ui(pw.get_mpz_t(), mag.get_mpz_t(), L / (i + 2));
    if (pw > best_pow) {
      best_pow = pw;
      best = {mag, static_cast<int>(i + 2)};
    }
  }
  return best;
}

QuadPair quad_mul(const QuadPair& x, const QuadPair& y, const Integer& disc) {
  return {x.u * y.u + Rational(disc) * x.v * y.v, x.u * y.v + x.v * y.u};
}

QuadPair quad_eval(const std::vector<Integer>& f, const QuadPair& x, const Integer& disc) {
  QuadPair acc{0, 0};
  for (const auto& c : f) {
    acc = quad_mul(acc, x, disc);
    acc.u += c;
  }
  return acc;
}

}  // namespace oracle
