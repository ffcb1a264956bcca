#include "hyperbound/linear_feasibility.hpp"

#include <algorithm>

#include "hyperbound/error.hpp"

namespace hyperbound {

namespace {

struct Ineq {
  Vector a;  // <a, w> >= b
  Rational b;
  friend bool operator<(const Ineq& l, const Ineq& r) { return l.a != r.a ? l.a < r.a : l.b < r.b; }
  friend bool operator==(const Ineq& l, const Ineq& r) { return l.a == r.a && l.b == r.b; }
};

// Scales so the first nonzero coefficient is +-1. Returns false for a
// constraint 0 >= b that is violated.
bool normalize(Ineq& c, bool& trivial) {
  const auto it = std::find_if(c.a.begin(), c.a.end(), [](const Rational& x) { return x != 0; });
  trivial = it == c.a.end();
  if (trivial) return c.b <= 0;
  const Rational s = abs(*it);
  for (auto& x : c.a) x /= s;
  c.b /= s;
  return true;
}

// Normalizes, drops trivial rows, and keeps only the tightest right-hand
// side for each coefficient vector. Returns false when infeasible.
bool tidy(std::vector<Ineq>& system) {
  std::vector<Ineq> kept;
  for (auto& c : system) {
    bool trivial = false;
    if (!normalize(c, trivial)) return false;
    if (!trivial) kept.push_back(std::move(c));
  }
  std::sort(kept.begin(), kept.end());
  std::vector<Ineq> out;
  for (auto& c : kept) {
    if (!out.empty() && out.back().a == c.a) {
      out.back().b = c.b;  // sorted ascending, so this is the largest rhs
    } else {
      out.push_back(std::move(c));
    }
  }
  system = std::move(out);
  return true;
}

Rational dot(const Vector& a, const Vector& w) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) s += a[i] * w[i];
  }
  return s;
}

}  // namespace

std::optional<Vector> find_feasible_point(std::size_t nvars, const std::vector<LinearConstraint>& constraints) {
  std::vector<Ineq> system;
  std::vector<std::pair<std::size_t, Ineq>> substitutions;  // w_j = b - <a, w> (a_j = 0)
  std::vector<char> free(nvars, 1);

  std::vector<LinearConstraint> eqs, ineqs;
  for (const auto& c : constraints) {
    if (c.coeffs.size() != nvars) throw InputError("constraint has the wrong number of coefficients");
    (c.equality ? eqs : ineqs).push_back(c);
  }

  // Each equality solves for one variable, substituted into the rest.
  for (std::size_t e = 0; e < eqs.size(); ++e) {
    const auto& row = eqs[e];
    std::size_t j = 0;
    while (j < nvars && row.coeffs[j] == 0) ++j;
    if (j == nvars) {
      if (row.rhs != 0) return std::nullopt;
      continue;
    }
    Ineq sub{Vector(nvars, Rational(0)), row.rhs / row.coeffs[j]};
    for (std::size_t i = 0; i < nvars; ++i) {
      if (i != j) sub.a[i] = row.coeffs[i] / row.coeffs[j];
    }
    auto eliminate_in = [&](Vector& a, Rational& b) {
      if (a[j] == 0) return;
      const Rational f = a[j];
      for (std::size_t i = 0; i < nvars; ++i) {
        if (i != j) a[i] -= f * sub.a[i];
      }
      a[j] = 0;
      b -= f * sub.b;
    };
    for (std::size_t later = e + 1; later < eqs.size(); ++later) eliminate_in(eqs[later].coeffs, eqs[later].rhs);
    for (auto& c : ineqs) eliminate_in(c.coeffs, c.rhs);
    substitutions.emplace_back(j, std::move(sub));
    free[j] = 0;
  }
  for (auto& c : ineqs) system.push_back({c.coeffs, c.rhs});
  if (!tidy(system)) return std::nullopt;

  // Fourier-Motzkin, keeping each intermediate system for back-substitution.
  std::vector<std::size_t> order;
  for (std::size_t j = 0; j < nvars; ++j) {
    if (free[j]) order.push_back(j);
  }
  std::vector<std::vector<Ineq>> stages{system};
  for (auto j : order) {
    std::vector<Ineq> pos, neg, next;
    for (auto& c : stages.back()) {
      if (c.a[j] > 0) {
        pos.push_back(c);
      } else if (c.a[j] < 0) {
        neg.push_back(c);
      } else {
        next.push_back(c);
      }
    }
    for (const auto& p : pos) {
      for (const auto& n : neg) {
        const Rational fp = -n.a[j], fn = p.a[j];
        Ineq c{Vector(nvars), fp * p.b + fn * n.b};
        for (std::size_t i = 0; i < nvars; ++i) c.a[i] = fp * p.a[i] + fn * n.a[i];
        c.a[j] = 0;
        next.push_back(std::move(c));
      }
    }
    if (!tidy(next)) return std::nullopt;
    stages.push_back(std::move(next));
  }

  Vector w(nvars, Rational(0));
  for (std::size_t t = order.size(); t-- > 0;) {
    const std::size_t j = order[t];
    std::optional<Rational> lo, hi;
    for (const auto& c : stages[t]) {
      if (c.a[j] == 0) continue;
      Rational rest = c.b;
      for (std::size_t i = 0; i < nvars; ++i) {
        if (i != j && c.a[i] != 0) rest -= c.a[i] * w[i];
      }
      const Rational bound = rest / c.a[j];
      if (c.a[j] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (lo && hi && *lo > *hi) throw std::logic_error("Fourier-Motzkin back-substitution failed");
    w[j] = lo ? *lo : (hi ? *hi : Rational(0));
  }
  for (auto it = substitutions.rbegin(); it != substitutions.rend(); ++it) {
    w[it->first] = it->second.b - dot(it->second.a, w);
  }
  return w;
}

}  // namespace hyperbound
