#include "hyperbound/family.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hyperbound/error.hpp"
#include "hyperbound/finite_field.hpp"
#include "hyperbound/point_count.hpp"

namespace hyperbound {

namespace {

FpPolynomial sparse(std::uint32_t p, const std::vector<std::pair<unsigned, std::uint32_t>>& terms) {
  FpPolynomial f(p, {});
  for (const auto& [e, c] : terms) f = f + FpPolynomial::monomial(p, c, e);
  return f;
}

FpPolynomial trinomial(int g, int k) {
  return sparse(3, {{unsigned(2 * g + 1), 1}, {unsigned(k), 2}, {0, 2}});
}

// Replaces every exponent e >= 1 by the representative of e mod 8 in 1..8.
FpPolynomial reduce_exponents(const FpPolynomial& f) {
  FpPolynomial out(f.prime(), {});
  for (int e = 0; e <= f.degree(); ++e) {
    const std::uint32_t c = f.coefficient(e);
    if (c == 0) continue;
    const unsigned r = e == 0 ? 0 : unsigned((e - 1) % 8 + 1);
    out = out + FpPolynomial::monomial(f.prime(), c, r);
  }
  return out;
}

}  // namespace

FamilyMember build_family_member(int g) {
  if (g < 3) throw InputError("family genus must be at least 3");
  FamilyMember m;
  m.genus = g;
  m.branch_mod4 = g % 4;
  const unsigned n = unsigned(2 * g + 1);
  if (m.branch_mod4 == 0) {
    m.branch_mod3 = g % 3;
    if (*m.branch_mod3 == 2) {
      m.f_mod3 = sparse(3, {{n, 1}, {9, 1}, {3, 1}, {0, 2}});
    } else {
      m.f_mod3 = sparse(3, {{n, 1}, {3, 1}, {1, 1}, {0, 2}});
    }
    return m;
  }
  const int listed = m.branch_mod4 == 1 ? 9 : m.branch_mod4 == 2 ? 15 : 5;
  m.listed_exponent = listed;
  m.middle_exponent = listed;
  if (listed >= int(n) || !is_squarefree(trinomial(g, listed))) m.middle_exponent = (listed - 1) % 8 + 1;
  m.f_mod3 = trinomial(g, *m.middle_exponent);
  return m;
}

Integer swan_discriminant_trinomial(int n, int k, const Integer& a, const Integer& b) {
  if (k <= 0 || k >= n) throw InputError("trinomial needs 0 < k < n");
  const int e = std::gcd(n, k);
  const unsigned long n1 = unsigned(n / e), k1 = unsigned(k / e);
  Integer inner = ipow(Integer(n), n1) * ipow(b, n1 - k1);
  const Integer other = ipow(Integer(n - k), n1 - k1) * ipow(Integer(k), k1) * ipow(a, n1);
  inner += (n1 % 2 == 1) ? other : Integer(-other);
  Integer out = ipow(b, unsigned(k - 1)) * ipow(inner, unsigned(e));
  const long long half = (long long)n * (n - 1) / 2;
  return half % 2 == 0 ? out : Integer(-out);
}

std::uint32_t swan_discriminant_trinomial(int n, int k, long long a, long long b, std::uint32_t p) {
  if (k <= 0 || k >= n) throw InputError("trinomial needs 0 < k < n");
  auto red = [p](long long x) { return std::uint32_t(((x % (long long)p) + p) % p); };
  auto mul = [p](std::uint64_t x, std::uint64_t y) { return std::uint32_t(x * y % p); };
  const int e = std::gcd(n, k);
  const std::uint64_t n1 = unsigned(n / e), k1 = unsigned(k / e);
  const std::uint32_t ra = red(a), rb = red(b);
  const std::uint32_t first = mul(mod_pow(red(n), n1, p), mod_pow(rb, n1 - k1, p));
  std::uint32_t other = mul(mul(mod_pow(red(n - k), n1 - k1, p), mod_pow(red(k), k1, p)), mod_pow(ra, n1, p));
  if (n1 % 2 == 0) other = (p - other) % p;
  std::uint32_t out = mul(mod_pow(rb, unsigned(k - 1), p), mod_pow((first + other) % p, unsigned(e), p));
  if (((long long)n * (n - 1) / 2) % 2 == 1) out = (p - out) % p;
  return out;
}

FamilyVerification verify_family_member(const FamilyMember& member) {
  FamilyVerification out;
  out.genus = member.genus;
  const FpPolynomial& f = member.f_mod3;
  out.polynomial = f.to_string();
  auto add = [&](std::string name, bool ok, std::string detail) {
    out.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  // Shape against a fresh construction for the same genus.
  try {
    const FamilyMember fresh = build_family_member(member.genus);
    add("shape", fresh.f_mod3 == f && f.prime() == 3, "expected " + fresh.f_mod3.to_string());
  } catch (const std::exception& e) {
    add("shape", false, e.what());
  }

  // Square-freeness.
  const bool squarefree = f.prime() == 3 && f.degree() >= 1 && is_squarefree(f);
  std::vector<int> support;
  for (int e = 0; e <= f.degree(); ++e) {
    if (f.coefficient(e) != 0) support.push_back(e);
  }
  if (support.size() == 3 && support[0] == 0 && f.leading() == 1) {
    const std::uint32_t disc =
        swan_discriminant_trinomial(f.degree(), support[1], f.coefficient(support[1]), f.coefficient(0), 3);
    add("squarefree", disc != 0 && squarefree,
        "trinomial discriminant " + std::to_string(disc) + " mod 3, gcd(f, f') " + (squarefree ? "= 1" : "!= 1"));
  } else {
    add("squarefree", squarefree, std::string("gcd(f, f') ") + (squarefree ? "= 1" : "!= 1"));
  }

  try {
    const FFContext f3(3, 1), f9(3, 2);
    std::set<std::uint32_t> values;
    for (std::uint32_t x = 0; x < 3; ++x) values.insert(f.evaluate(x));
    out.values_on_f3.assign(values.begin(), values.end());

    const auto n3 = count_affine_points(f, f3) + 1;
    add("F3 points", n3 == 1, "|C(F_3)| = " + std::to_string(n3));

    const auto pts = affine_points(f, f9);
    bool shape = pts.size() == 6;
    std::set<std::uint32_t> xs;
    for (const auto& pt : pts) {
      shape = shape && f9.in_prime_field(pt.x) && !f9.in_prime_field(pt.y);
      xs.insert(pt.x);
    }
    shape = shape && xs.size() == 3;
    for (const auto& orbit : frobenius_orbits(pts, f9)) shape = shape && (orbit[0].at_infinity || orbit.size() == 2);
    add("F9 points", shape, "|C(F_9)| = " + std::to_string(pts.size() + 1));

    const FpPolynomial reduced = reduce_exponents(f);
    bool same = true;
    for (std::uint32_t x = 0; x < f9.order(); ++x) same = same && f9.evaluate(f, x) == f9.evaluate(reduced, x);
    if (member.listed_exponent && member.middle_exponent) {
      const auto lhs = FpPolynomial::monomial(3, 1, unsigned(*member.listed_exponent));
      const auto rhs = FpPolynomial::monomial(3, 1, unsigned(*member.middle_exponent));
      for (std::uint32_t x = 0; x < f9.order(); ++x) same = same && f9.evaluate(lhs, x) == f9.evaluate(rhs, x);
    }
    add("exponent reduction", same, "same function on F_9 as " + reduced.to_string());
  } catch (const std::exception& e) {
    add("point counts", false, e.what());
  }

  out.passed = std::all_of(out.checks.begin(), out.checks.end(), [](const FamilyCheck& c) { return c.passed; });
  return out;
}

CurveModel lift_family_member(const FamilyMember& member) {
  std::vector<Integer> desc;
  for (auto c : member.f_mod3.descending()) desc.emplace_back(c == 2 ? -1 : long(c));
  return CurveModel(member.genus, std::move(desc));
}

}  // namespace hyperbound
