#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperbound/curve.hpp"
#include "hyperbound/fp_polynomial.hpp"

namespace hyperbound {

// A genus-g curve class mod 3 with |C(F_3)| = 1 and
// C(F_9) = {inf, (i, +-alpha) : i in F_3}.
struct FamilyMember {
  int genus = 0;
  int branch_mod4 = 0;
  std::optional<int> branch_mod3;  // set when g = 0 mod 4
  FpPolynomial f_mod3;
  // Trinomial branches x^{2g+1} + 2x^k + 2: the listed k and the k used.
  // They differ when the listed k is not below 2g+1 or gives a repeated
  // factor; the used k is then the listed one reduced mod 8 into 1..8,
  // which defines the same function on F_9.
  std::optional<int> listed_exponent;
  std::optional<int> middle_exponent;
};

FamilyMember build_family_member(int g);

// (-1)^{n(n-1)/2} b^{k-1} [n^{n1} b^{n1-k1} + (-1)^{n1+1} (n-k)^{n1-k1} k^{k1} a^{n1}]^e
// with e = gcd(n, k), n = n1 e, k = k1 e: the discriminant of x^n + a x^k + b.
Integer swan_discriminant_trinomial(int n, int k, const Integer& a, const Integer& b);
std::uint32_t swan_discriminant_trinomial(int n, int k, long long a, long long b, std::uint32_t p);

struct FamilyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct FamilyVerification {
  int genus = 0;
  std::string polynomial;
  std::vector<std::uint32_t> values_on_f3;  // f(F_3), sorted
  std::vector<FamilyCheck> checks;
  bool passed = false;
};

// Failures are recorded in the result, never thrown.
FamilyVerification verify_family_member(const FamilyMember& member);

// Integer model with coefficients 0, 1, -1 reducing to f_mod3.
CurveModel lift_family_member(const FamilyMember& member);

}  // namespace hyperbound
