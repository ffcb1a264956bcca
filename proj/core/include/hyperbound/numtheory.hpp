#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace hyperbound {

using Integer = mpz_class;

bool is_prime(std::uint64_t n);

// Smallest prime strictly greater than n.
std::uint64_t next_prime_after(std::uint64_t n);

// Distinct prime divisors in increasing order (n >= 1).
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

// Exponent of p in n; n must be nonzero.
int padic_valuation(std::uint64_t n, std::uint64_t p);
int padic_valuation(const Integer& n, std::uint64_t p);

Integer ipow(const Integer& base, unsigned long exponent);

// Largest e with p^e <= n (n >= 1, p >= 2).
int floor_log(std::uint64_t n, std::uint64_t p);

}  // namespace hyperbound
