#include "hyperbound/fp_polynomial.hpp"

#include <sstream>
#include <stdexcept>

#include "hyperbound/error.hpp"
#include "hyperbound/numtheory.hpp"

namespace hyperbound {

namespace {

void require_same_prime(const FpPolynomial& a, const FpPolynomial& b) {
  if (a.prime() != b.prime()) throw InputError("F_p polynomials over different primes");
}

}  // namespace

FpPolynomial::FpPolynomial(std::uint32_t p, std::vector<std::uint32_t> ascending)
    : p_(p), c_(std::move(ascending)) {
  if (p_ < 2) throw InputError("F_p polynomial needs a prime p");
  for (auto& c : c_) c %= p_;
  trim();
}

FpPolynomial FpPolynomial::from_descending(std::uint32_t p, const std::vector<long long>& descending) {
  std::vector<std::uint32_t> asc;
  asc.reserve(descending.size());
  for (auto it = descending.rbegin(); it != descending.rend(); ++it) {
    long long r = *it % static_cast<long long>(p);
    if (r < 0) r += p;
    asc.push_back(static_cast<std::uint32_t>(r));
  }
  return FpPolynomial(p, std::move(asc));
}

FpPolynomial FpPolynomial::monomial(std::uint32_t p, std::uint32_t coeff, unsigned power) {
  std::vector<std::uint32_t> asc(power + 1, 0);
  asc[power] = coeff;
  return FpPolynomial(p, std::move(asc));
}

void FpPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint32_t FpPolynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return 0;
  return c_[static_cast<std::size_t>(power)];
}

std::vector<std::uint32_t> FpPolynomial::descending() const { return {c_.rbegin(), c_.rend()}; }

FpPolynomial FpPolynomial::derivative() const {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 1; i < c_.size(); ++i) {
    out.push_back(static_cast<std::uint32_t>((static_cast<std::uint64_t>(c_[i]) * (i % p_)) % p_));
  }
  return FpPolynomial(p_, std::move(out));
}

FpPolynomial FpPolynomial::monic() const {
  if (is_zero()) return *this;
  const std::uint64_t inv = mod_inverse(leading(), p_);
  std::vector<std::uint32_t> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = static_cast<std::uint32_t>(c_[i] * inv % p_);
  return FpPolynomial(p_, std::move(out));
}

std::uint32_t FpPolynomial::evaluate(std::uint32_t x) const {
  std::uint64_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (acc * x + *it) % p_;
  return static_cast<std::uint32_t>(acc);
}

FpPolynomial operator+(const FpPolynomial& a, const FpPolynomial& b) {
  require_same_prime(a, b);
  std::vector<std::uint32_t> out(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (a.coefficient(int(i)) + b.coefficient(int(i))) % a.p_;
  return FpPolynomial(a.p_, std::move(out));
}

FpPolynomial operator-(const FpPolynomial& a, const FpPolynomial& b) {
  require_same_prime(a, b);
  std::vector<std::uint32_t> out(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = (a.coefficient(int(i)) + a.p_ - b.coefficient(int(i))) % a.p_;
  }
  return FpPolynomial(a.p_, std::move(out));
}

FpPolynomial operator*(const FpPolynomial& a, const FpPolynomial& b) {
  require_same_prime(a, b);
  if (a.is_zero() || b.is_zero()) return FpPolynomial(a.p_, {});
  std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a.c_[i]) * b.c_[j]) % a.p_;
    }
  }
  return FpPolynomial(a.p_, std::vector<std::uint32_t>(acc.begin(), acc.end()));
}

std::pair<FpPolynomial, FpPolynomial> FpPolynomial::divmod(const FpPolynomial& divisor) const {
  require_same_prime(*this, divisor);
  if (divisor.is_zero()) throw std::domain_error("F_p polynomial division by zero");
  if (degree() < divisor.degree()) return {FpPolynomial(p_, {}), *this};
  std::vector<std::uint64_t> rem(c_.begin(), c_.end());
  const int dd = divisor.degree();
  std::vector<std::uint32_t> quot(static_cast<std::size_t>(degree() - dd + 1), 0);
  const std::uint64_t inv = mod_inverse(divisor.leading(), p_);
  for (int k = degree(); k >= dd; --k) {
    const std::uint64_t c = rem[static_cast<std::size_t>(k)] * inv % p_;
    if (c == 0) continue;
    quot[static_cast<std::size_t>(k - dd)] = static_cast<std::uint32_t>(c);
    for (int j = 0; j <= dd; ++j) {
      auto& slot = rem[static_cast<std::size_t>(k - dd + j)];
      slot = (slot + p_ - c * divisor.c_[static_cast<std::size_t>(j)] % p_) % p_;
    }
  }
  return {FpPolynomial(p_, std::move(quot)), FpPolynomial(p_, std::vector<std::uint32_t>(rem.begin(), rem.end()))};
}

std::string FpPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const std::uint32_t c = c_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (!first) os << " + ";
    if (c != 1 || k == 0) os << c;
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

std::uint32_t mod_pow(std::uint32_t base, std::uint64_t exponent, std::uint32_t p) {
  std::uint64_t result = 1 % p;
  std::uint64_t b = base % p;
  while (exponent > 0) {
    if (exponent & 1U) result = result * b % p;
    b = b * b % p;
    exponent >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw std::domain_error("inverse of zero mod p");
  return mod_pow(a, p - 2, p);
}

FpPolynomial gcd(FpPolynomial a, FpPolynomial b) {
  while (!b.is_zero()) {
    FpPolynomial r = a.mod(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FpPolynomial powmod(const FpPolynomial& base, std::uint64_t exponent, const FpPolynomial& modulus) {
  FpPolynomial result(base.prime(), {1});
  result = result.mod(modulus);
  FpPolynomial b = base.mod(modulus);
  while (exponent > 0) {
    if (exponent & 1U) result = (result * b).mod(modulus);
    b = (b * b).mod(modulus);
    exponent >>= 1U;
  }
  return result;
}

bool is_squarefree(const FpPolynomial& f) {
  if (f.degree() < 1) return false;
  return gcd(f, f.derivative()).degree() == 0;
}

bool is_irreducible(const FpPolynomial& f) {
  const int m = f.degree();
  if (m < 1) return false;
  if (m == 1) return true;
  const std::uint32_t p = f.prime();
  const FpPolynomial x(p, {0, 1});
  // x^{p^k} mod f for k = 0..m by repeated p-th powering.
  std::vector<FpPolynomial> frob{x.mod(f)};
  for (int k = 1; k <= m; ++k) frob.push_back(powmod(frob.back(), p, f));
  if (!(frob[static_cast<std::size_t>(m)] == x.mod(f))) return false;
  for (std::uint64_t l : prime_divisors(static_cast<std::uint64_t>(m))) {
    const FpPolynomial h = frob[static_cast<std::size_t>(m / static_cast<int>(l))] - x;
    if (gcd(f, h).degree() != 0) return false;
  }
  return true;
}

FpPolynomial smallest_irreducible(std::uint32_t p, unsigned m) {
  if (m == 0) throw InputError("field degree must be positive");
  // Enumerate (c_{m-1}, ..., c_0) as a base-p counter, most significant first.
  std::vector<std::uint32_t> digits(m, 0);
  while (true) {
    std::vector<std::uint32_t> asc(m + 1, 0);
    asc[m] = 1;
    for (unsigned i = 0; i < m; ++i) asc[m - 1 - i] = digits[i];
    FpPolynomial candidate(p, asc);
    if (is_irreducible(candidate)) return candidate;
    int pos = static_cast<int>(m) - 1;
    while (pos >= 0 && ++digits[static_cast<std::size_t>(pos)] == p) {
      digits[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) throw std::logic_error("no irreducible polynomial found");
  }
}

}  // namespace hyperbound
