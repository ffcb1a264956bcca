#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hyperbound/polytope.hpp"
#include "hyperbound/rational.hpp"

namespace hyperbound {

using Exponent = std::vector<int>;

// Records that every term of exponent n > last_exponent on an axis has
// valuation strictly above a guaranteed unit baseline at some exponent
// <= unit_bound, for every weight w >= m.
struct TailCertificate {
  Rational m;
  int unit_bound = 0;
  int last_exponent = 0;
  std::uint64_t p = 0;
};

// Per-axis status of the support: exact, a truncated prefix with no
// guarantee on the omitted terms, or a truncation backed by a certificate.
struct AxisTail {
  enum class State { Complete, Uncertified, Certified };
  State state = State::Complete;
  std::optional<TailCertificate> certificate;
};

// Coefficient valuations of a power series in nvars variables. Absent
// exponents have valuation +infinity.
class ValuedSeries {
 public:
  explicit ValuedSeries(std::size_t nvars);

  std::size_t nvars() const { return nvars_; }
  // Setting +infinity removes the term.
  void set(const Exponent& u, const ExtendedRational& v);
  ExtendedRational valuation(const Exponent& u) const;
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  const std::vector<AxisTail>& tails() const { return tails_; }
  void set_tail(std::size_t axis, AxisTail tail);

  // Adds c to every valuation.
  ValuedSeries shifted(const Rational& c) const;

 private:
  std::size_t nvars_;
  std::map<Exponent, Rational> terms_;
  std::vector<AxisTail> tails_;
};

// Valuations v(a_0), v(a_1), ... of a finite prefix of sum a_i z^i before
// integration; +infinity marks a zero coefficient.
struct IntegratedSeriesSpec {
  std::uint64_t p = 3;
  std::vector<ExtendedRational> coeff_valuations;
};

// sum a_i z^{i+1} / (i+1): the term of exponent i+1 has valuation
// v(a_i) - v_p(i+1). The result is a one-variable series whose tail is
// marked uncertified.
ValuedSeries integrate_shape(const IntegratedSeriesSpec& spec);

// Least N >= n0 with (n - n0) m > v_p(n) for every n > N.
// Requires a coefficient of valuation 0 among a_0, ..., a_{n0-1}.
TailCertificate truncate_integrated(const IntegratedSeriesSpec& spec, const Rational& m, int unit_bound);

// integrate_shape restricted to exponents <= N with the certificate from
// truncate_integrated attached. The prefix must cover exponents 1..N.
ValuedSeries integrate_certified(const IntegratedSeriesSpec& spec, const Rational& m, int unit_bound);

// Places one-variable series on the given coordinate axes of a series in
// nvars variables and adds an exponent-0 term of the given valuation.
// Throws InputError when two series share an axis.
ValuedSeries sum_in_distinct_vars(const std::vector<ValuedSeries>& series, const std::vector<std::size_t>& axes,
                                  std::size_t nvars, const ExtendedRational& constant_valuation);
// Series i goes on axis i.
ValuedSeries sum_in_distinct_vars(const std::vector<ValuedSeries>& series, const ExtendedRational& constant_valuation);

struct NewtonOptions {
  // Accept uncertified truncations as if they were complete.
  bool assume_complete = false;
};

// Exponents u admitting w in Q^d with w_i >= m_i and a partner u' != u such
// that v(a_u) + <w,u> = v(a_u') + <w,u'> is the minimum over the support.
std::vector<Exponent> newton_exponents(const ValuedSeries& f, const std::vector<Rational>& radii,
                                       const NewtonOptions& options = {});
std::vector<Exponent> newton_exponents(const ValuedSeries& f, const Rational& m, const NewtonOptions& options = {});

Polytope newton_polygon(const ValuedSeries& f, const std::vector<Rational>& radii, const NewtonOptions& options = {});
Polytope newton_polygon(const ValuedSeries& f, const Rational& m, const NewtonOptions& options = {});

// One-variable cross-check: solves every pairwise tie for w directly.
std::vector<Exponent> newton_exponents_by_ties(const ValuedSeries& f, const Rational& m);

// Largest n > base with (n - base) m <= v_p(n) - shift, or base if none.
int last_exceptional_exponent(std::uint64_t p, const Rational& m, int base, int shift);

}  // namespace hyperbound
