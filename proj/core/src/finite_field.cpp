#include "hyperbound/finite_field.hpp"

#include <sstream>
#include <stdexcept>

#include "hyperbound/error.hpp"
#include "hyperbound/numtheory.hpp"

namespace hyperbound {

namespace {

std::uint32_t checked_order(std::uint32_t p, unsigned m) {
  if (!is_prime(p) || p == 2) throw InputError("finite field characteristic must be an odd prime");
  if (m == 0) throw InputError("finite field degree must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    if (q > FFContext::kMaxOrder) {
      throw PreconditionError("field F_" + std::to_string(p) + "^" + std::to_string(m) +
                              " exceeds the enumeration limit of 10^6 elements");
    }
  }
  return static_cast<std::uint32_t>(q);
}

}  // namespace

FFContext::FFContext(std::uint32_t p, unsigned m)
    : p_(p), m_(m), q_(checked_order(p, m)), modulus_(smallest_irreducible(p, m)) {
  build_tables();
}

FFContext::FFContext(FpPolynomial modulus)
    : p_(modulus.prime()),
      m_(static_cast<unsigned>(std::max(modulus.degree(), 0))),
      q_(checked_order(modulus.prime(), static_cast<unsigned>(std::max(modulus.degree(), 0)))),
      modulus_(std::move(modulus)) {
  if (modulus_.leading() != 1) throw InputError("field modulus must be monic");
  if (!is_irreducible(modulus_)) throw InputError("field modulus " + modulus_.to_string() + " is reducible");
  build_tables();
}

std::vector<std::uint32_t> FFContext::digits(Code a) const {
  std::vector<std::uint32_t> out(m_);
  for (unsigned i = 0; i < m_; ++i) {
    out[i] = a % p_;
    a /= p_;
  }
  return out;
}

FFContext::Code FFContext::from_digits(const std::vector<std::uint32_t>& d) const {
  Code out = 0;
  for (std::size_t i = d.size(); i-- > 0;) out = out * p_ + d[i] % p_;
  return out;
}

FFContext::Code FFContext::slow_mul(Code a, Code b) const {
  FpPolynomial pa(p_, digits(a));
  FpPolynomial pb(p_, digits(b));
  FpPolynomial prod = (pa * pb).mod(modulus_);
  std::vector<std::uint32_t> d(m_, 0);
  for (int i = 0; i <= prod.degree(); ++i) d[static_cast<std::size_t>(i)] = prod.coefficient(i);
  return from_digits(d);
}

void FFContext::build_tables() {
  const std::uint32_t n = q_ - 1;
  const auto factors = prime_divisors(n);
  auto slow_pow = [this](Code a, std::uint64_t e) {
    Code result = 1;
    while (e > 0) {
      if (e & 1U) result = slow_mul(result, a);
      a = slow_mul(a, a);
      e >>= 1U;
    }
    return result;
  };
  Code g = 0;
  for (Code c = 1; c < q_; ++c) {
    bool primitive = true;
    for (auto l : factors) {
      if (slow_pow(c, n / l) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = c;
      break;
    }
  }
  if (g == 0) throw std::logic_error("no primitive element found");
  exp_.assign(2 * static_cast<std::size_t>(n), 0);
  log_.assign(q_, 0);
  Code x = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    exp_[i] = x;
    log_[x] = i;
    x = slow_mul(x, g);
  }
  for (std::uint32_t i = n; i < 2 * n; ++i) exp_[i] = exp_[i - n];
  square_.assign(q_, false);
  square_[0] = true;
  for (std::uint32_t i = 0; i < n; i += 2) square_[exp_[i]] = true;
}

FFContext::Code FFContext::add(Code a, Code b) const {
  if (m_ == 1) return (a + b) % p_;
  Code out = 0;
  Code scale = 1;
  for (unsigned i = 0; i < m_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

FFContext::Code FFContext::neg(Code a) const {
  Code out = 0;
  Code scale = 1;
  for (unsigned i = 0; i < m_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

FFContext::Code FFContext::sub(Code a, Code b) const { return add(a, neg(b)); }

FFContext::Code FFContext::mul(Code a, Code b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[static_cast<std::size_t>(log_[a]) + log_[b]];
}

FFContext::Code FFContext::inv(Code a) const {
  if (a == 0) throw std::domain_error("inverse of zero in finite field");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FFContext::Code FFContext::pow(Code a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[static_cast<std::size_t>((static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1))];
}

FFContext::Code FFContext::evaluate(const FpPolynomial& f, Code x) const {
  if (f.prime() != p_) throw InputError("polynomial characteristic does not match field");
  Code acc = 0;
  const auto& c = f.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = add(mul(acc, x), *it);
  return acc;
}

FFElement FFContext::element(Code code) const {
  if (code >= q_) throw InputError("field element code out of range");
  return {*this, code};
}

std::string FFContext::format(Code a) const {
  if (a == 0) return "0";
  const auto d = digits(a);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (!first) os << "+";
    if (d[i] != 1 || i == 0) os << d[i];
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

std::vector<FFContext::Code> embed_subfield(const FFContext& small, const FFContext& big) {
  if (small.characteristic() != big.characteristic() || big.degree() % small.degree() != 0) {
    throw InputError("F_p^" + std::to_string(small.degree()) + " does not embed in F_p^" +
                     std::to_string(big.degree()));
  }
  FFContext::Code root = 0;
  bool found = false;
  for (FFContext::Code c = 0; c < big.order(); ++c) {
    if (big.evaluate(small.modulus(), c) == 0) {
      root = c;
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("subfield modulus has no root in the extension");
  std::vector<FFContext::Code> image(small.order());
  for (FFContext::Code a = 0; a < small.order(); ++a) {
    const auto d = small.digits(a);
    FFContext::Code acc = 0;
    for (std::size_t i = d.size(); i-- > 0;) acc = big.add(big.mul(acc, root), d[i]);
    image[a] = acc;
  }
  return image;
}

}  // namespace hyperbound
