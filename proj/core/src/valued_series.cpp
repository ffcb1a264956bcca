#include "hyperbound/valued_series.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hyperbound/error.hpp"
#include "hyperbound/linear_feasibility.hpp"
#include "hyperbound/numtheory.hpp"

namespace hyperbound {

ValuedSeries::ValuedSeries(std::size_t nvars) : nvars_(nvars), tails_(nvars) {}

void ValuedSeries::set(const Exponent& u, const ExtendedRational& v) {
  if (u.size() != nvars_) throw InputError("exponent has " + std::to_string(u.size()) + " entries, expected " +
                                           std::to_string(nvars_));
  for (int e : u) {
    if (e < 0) throw InputError("exponents must be nonnegative");
  }
  if (v) {
    terms_[u] = *v;
  } else {
    terms_.erase(u);
  }
}

ExtendedRational ValuedSeries::valuation(const Exponent& u) const {
  const auto it = terms_.find(u);
  if (it == terms_.end()) return std::nullopt;
  return it->second;
}

void ValuedSeries::set_tail(std::size_t axis, AxisTail tail) {
  if (axis >= nvars_) throw InputError("axis out of range");
  tails_[axis] = std::move(tail);
}

ValuedSeries ValuedSeries::shifted(const Rational& c) const {
  ValuedSeries out = *this;
  for (auto& [u, v] : out.terms_) v += c;
  return out;
}

namespace {

void validate(const IntegratedSeriesSpec& spec) {
  if (!is_prime(spec.p)) throw InputError("p must be prime");
  for (const auto& v : spec.coeff_valuations) {
    if (v && *v < 0) throw InputError("coefficient valuations must be nonnegative");
  }
}

}  // namespace

ValuedSeries integrate_shape(const IntegratedSeriesSpec& spec) {
  validate(spec);
  ValuedSeries out(1);
  for (std::size_t i = 0; i < spec.coeff_valuations.size(); ++i) {
    const auto& v = spec.coeff_valuations[i];
    if (!v) continue;
    const int n = static_cast<int>(i) + 1;
    out.set({n}, *v - padic_valuation(static_cast<std::uint64_t>(n), spec.p));
  }
  out.set_tail(0, {AxisTail::State::Uncertified, std::nullopt});
  return out;
}

int last_exceptional_exponent(std::uint64_t p, const Rational& m, int base, int shift) {
  if (m <= 0) throw InputError("radius must be positive");
  int best = base;
  const Rational inv_m = 1 / m;
  Integer pe = ipow(Integer(static_cast<unsigned long>(p)), static_cast<unsigned long>(std::max(shift + 1, 1)));
  for (int e = std::max(shift + 1, 1);; ++e, pe *= static_cast<unsigned long>(p)) {
    const Rational limit = base + Rational(e - shift) * inv_m;
    if (Rational(pe) > limit && Rational(pe * static_cast<unsigned long>(p - 1)) >= inv_m) break;
    const Integer top = floor(limit);
    Integer first = pe * ((Integer(base) / pe) + 1);
    for (Integer n = first; n <= top; n += pe) {
      const int vn = padic_valuation(n, p);
      if (Rational(n - base) * m <= vn - shift) best = std::max(best, static_cast<int>(n.get_si()));
    }
  }
  return best;
}

TailCertificate truncate_integrated(const IntegratedSeriesSpec& spec, const Rational& m, int unit_bound) {
  validate(spec);
  if (m <= 0) throw InputError("radius must be positive");
  if (unit_bound < 1) throw InputError("unit index bound must be positive");
  bool unit = false;
  for (std::size_t i = 0; i < spec.coeff_valuations.size() && i < static_cast<std::size_t>(unit_bound); ++i) {
    const auto& v = spec.coeff_valuations[i];
    unit = unit || (v && *v == 0);
  }
  if (!unit) {
    throw PreconditionError("no unit coefficient among the first " + std::to_string(unit_bound) +
                            "; cannot certify the truncation");
  }
  return {m, unit_bound, last_exceptional_exponent(spec.p, m, unit_bound, 0), spec.p};
}

ValuedSeries integrate_certified(const IntegratedSeriesSpec& spec, const Rational& m, int unit_bound) {
  const TailCertificate cert = truncate_integrated(spec, m, unit_bound);
  if (spec.coeff_valuations.size() < static_cast<std::size_t>(cert.last_exponent)) {
    throw PreconditionError("prefix too short to certify: need " + std::to_string(cert.last_exponent) +
                            " coefficients");
  }
  IntegratedSeriesSpec head = spec;
  head.coeff_valuations.resize(static_cast<std::size_t>(cert.last_exponent));
  ValuedSeries out = integrate_shape(head);
  out.set_tail(0, {AxisTail::State::Certified, cert});
  return out;
}

ValuedSeries sum_in_distinct_vars(const std::vector<ValuedSeries>& series, const std::vector<std::size_t>& axes,
                                  std::size_t nvars, const ExtendedRational& constant_valuation) {
  if (axes.size() != series.size()) throw InputError("one axis per series is required");
  ValuedSeries out(nvars);
  std::set<std::size_t> used;
  for (std::size_t s = 0; s < series.size(); ++s) {
    const auto& one = series[s];
    if (one.nvars() != 1) throw InputError("only one-variable series can be placed on an axis");
    const std::size_t axis = axes[s];
    if (axis >= nvars) throw InputError("axis out of range");
    if (!used.insert(axis).second) throw InputError("variable index collision on axis " + std::to_string(axis));
    for (const auto& [u, v] : one.terms()) {
      Exponent e(nvars, 0);
      e[axis] = u[0];
      if (u[0] == 0) {
        throw InputError("one-variable series placed on an axis must not have a constant term");
      }
      out.set(e, v);
    }
    out.set_tail(axis, one.tails()[0]);
  }
  out.set(Exponent(nvars, 0), constant_valuation);
  return out;
}

ValuedSeries sum_in_distinct_vars(const std::vector<ValuedSeries>& series, const ExtendedRational& constant_valuation) {
  std::vector<std::size_t> axes(series.size());
  for (std::size_t i = 0; i < axes.size(); ++i) axes[i] = i;
  return sum_in_distinct_vars(series, axes, series.size(), constant_valuation);
}

namespace {

void check_tails(const ValuedSeries& f, const std::vector<Rational>& radii, const NewtonOptions& options) {
  if (radii.size() != f.nvars()) throw InputError("one radius per variable is required");
  for (const auto& m : radii) {
    if (m <= 0) throw InputError("radius must be positive");
  }
  for (std::size_t a = 0; a < f.nvars(); ++a) {
    const auto& tail = f.tails()[a];
    if (tail.state == AxisTail::State::Uncertified && !options.assume_complete) {
      throw PreconditionError("axis " + std::to_string(a) + " is a truncation without a tail certificate");
    }
    if (tail.state == AxisTail::State::Certified && tail.certificate->m > radii[a]) {
      throw PreconditionError("tail certificate on axis " + std::to_string(a) + " holds for w >= " +
                              to_string(tail.certificate->m) + ", not for radius " + to_string(radii[a]));
    }
  }
}

Rational dot(const Vector& w, const Exponent& u) {
  Rational s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += w[i] * u[i];
  return s;
}

}  // namespace

std::vector<Exponent> newton_exponents(const ValuedSeries& f, const std::vector<Rational>& radii,
                                       const NewtonOptions& options) {
  check_tails(f, radii, options);
  const std::size_t d = f.nvars();
  const std::vector<std::pair<Exponent, Rational>> terms(f.terms().begin(), f.terms().end());
  const std::size_t n = terms.size();
  std::vector<char> included(n, 0);

  std::vector<LinearConstraint> base;
  for (std::size_t a = 0; a < d; ++a) {
    Vector e(d, Rational(0));
    e[a] = 1;
    base.push_back({e, radii[a], false});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (included[i] && included[j]) continue;
      const auto& [ui, vi] = terms[i];
      const auto& [uj, vj] = terms[j];
      std::vector<LinearConstraint> system = base;
      Vector tie(d);
      for (std::size_t a = 0; a < d; ++a) tie[a] = ui[a] - uj[a];
      system.push_back({tie, vj - vi, true});
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        Vector row(d);
        for (std::size_t a = 0; a < d; ++a) row[a] = terms[k].first[a] - ui[a];
        system.push_back({row, vi - terms[k].second, false});
      }
      const auto w = find_feasible_point(d, system);
      if (!w) continue;
      // The witness must realize the tie at the minimum.
      const Rational value = vi + dot(*w, ui);
      if (value != vj + dot(*w, uj)) throw std::logic_error("newton_exponents: witness misses the tie");
      for (const auto& [uk, vk] : terms) {
        if (vk + dot(*w, uk) < value) throw std::logic_error("newton_exponents: witness is not minimal");
      }
      included[i] = included[j] = 1;
    }
  }
  std::vector<Exponent> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (included[i]) out.push_back(terms[i].first);
  }
  return out;
}

std::vector<Exponent> newton_exponents(const ValuedSeries& f, const Rational& m, const NewtonOptions& options) {
  return newton_exponents(f, std::vector<Rational>(f.nvars(), m), options);
}

Polytope newton_polygon(const ValuedSeries& f, const std::vector<Rational>& radii, const NewtonOptions& options) {
  if (f.nvars() < 1) throw InputError("Newton polygon needs at least one variable");
  std::vector<Vector> pts;
  for (const auto& u : newton_exponents(f, radii, options)) {
    Vector p;
    for (int e : u) p.emplace_back(e);
    pts.push_back(std::move(p));
  }
  return Polytope::hull(f.nvars(), std::move(pts));
}

Polytope newton_polygon(const ValuedSeries& f, const Rational& m, const NewtonOptions& options) {
  return newton_polygon(f, std::vector<Rational>(f.nvars(), m), options);
}

std::vector<Exponent> newton_exponents_by_ties(const ValuedSeries& f, const Rational& m) {
  if (f.nvars() != 1) throw InputError("tie enumeration handles one-variable series only");
  const std::vector<std::pair<Exponent, Rational>> terms(f.terms().begin(), f.terms().end());
  std::set<Exponent> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      const int ui = terms[i].first[0], uj = terms[j].first[0];
      const Rational w = (terms[j].second - terms[i].second) / Rational(ui - uj);
      if (w < m) continue;
      const Rational value = terms[i].second + w * ui;
      bool minimal = true;
      for (const auto& [uk, vk] : terms) minimal = minimal && vk + w * uk[0] >= value;
      if (minimal) {
        out.insert(terms[i].first);
        out.insert(terms[j].first);
      }
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace hyperbound
