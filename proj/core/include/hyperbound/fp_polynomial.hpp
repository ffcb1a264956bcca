#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hyperbound {

// Dense univariate polynomial over F_p for a small prime p, coefficients in
// [0, p) stored lowest degree first and trimmed.
class FpPolynomial {
 public:
  FpPolynomial() = default;
  FpPolynomial(std::uint32_t p, std::vector<std::uint32_t> ascending);

  // Coefficients listed leading first (the curve-file order); values may be
  // any integers and are reduced mod p.
  static FpPolynomial from_descending(std::uint32_t p, const std::vector<long long>& descending);
  static FpPolynomial monomial(std::uint32_t p, std::uint32_t coeff, unsigned power);

  std::uint32_t prime() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<std::uint32_t>& coefficients() const { return c_; }
  std::uint32_t coefficient(int power) const;
  std::uint32_t leading() const { return c_.back(); }

  // Coefficients leading first, padded to exactly degree+1 entries.
  std::vector<std::uint32_t> descending() const;

  FpPolynomial derivative() const;
  FpPolynomial monic() const;
  std::uint32_t evaluate(std::uint32_t x) const;

  friend FpPolynomial operator+(const FpPolynomial& a, const FpPolynomial& b);
  friend FpPolynomial operator-(const FpPolynomial& a, const FpPolynomial& b);
  friend FpPolynomial operator*(const FpPolynomial& a, const FpPolynomial& b);
  friend bool operator==(const FpPolynomial& a, const FpPolynomial& b) = default;

  std::pair<FpPolynomial, FpPolynomial> divmod(const FpPolynomial& divisor) const;
  FpPolynomial mod(const FpPolynomial& divisor) const { return divmod(divisor).second; }

  std::string to_string() const;

 private:
  void trim();
  std::uint32_t p_ = 0;
  std::vector<std::uint32_t> c_;
};

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);
std::uint32_t mod_pow(std::uint32_t base, std::uint64_t exponent, std::uint32_t p);

FpPolynomial gcd(FpPolynomial a, FpPolynomial b);

// base^exponent mod modulus.
FpPolynomial powmod(const FpPolynomial& base, std::uint64_t exponent, const FpPolynomial& modulus);

// gcd(f, f') == 1 (f nonzero, non-constant).
bool is_squarefree(const FpPolynomial& f);

// Rabin's test: x^{p^m} = x mod f and gcd(x^{p^{m/l}} - x, f) = 1 for every
// prime l | m.
bool is_irreducible(const FpPolynomial& f);

// Lexicographically smallest monic irreducible of degree m, comparing the
// non-leading coefficient vectors (c_{m-1}, ..., c_0).
FpPolynomial smallest_irreducible(std::uint32_t p, unsigned m);

}  // namespace hyperbound
