#include "hyperbound/numtheory.hpp"

#include <stdexcept>

namespace hyperbound {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::uint64_t next_prime_after(std::uint64_t n) {
  std::uint64_t candidate = n + 1;
  while (!is_prime(candidate)) ++candidate;
  return candidate;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("prime_divisors: n must be positive");
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

int padic_valuation(std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw std::invalid_argument("padic_valuation of zero");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

int padic_valuation(const Integer& n, std::uint64_t p) {
  if (n == 0) throw std::invalid_argument("padic_valuation of zero");
  Integer prime(static_cast<unsigned long>(p));
  Integer rest;
  return static_cast<int>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

int floor_log(std::uint64_t n, std::uint64_t p) {
  int e = 0;
  std::uint64_t power = 1;
  while (power <= n / p) {
    power *= p;
    ++e;
  }
  return e;
}

}  // namespace hyperbound
