#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperbound/fp_polynomial.hpp"

namespace hyperbound {

class FFElement;

// The field F_{p^m} = F_p[t] / (modulus). Elements are encoded as integers
// code = sum c_i p^i for the residue sum c_i t^i, so codes below p are
// exactly the prime field. Multiplication goes through discrete-log tables,
// which caps the field size at kMaxOrder.
class FFContext {
 public:
  using Code = std::uint32_t;
  static constexpr std::uint64_t kMaxOrder = 1'000'000;

  // Uses smallest_irreducible(p, m) as the modulus.
  FFContext(std::uint32_t p, unsigned m);
  // Explicit modulus; must be monic and irreducible over F_p.
  explicit FFContext(FpPolynomial modulus);

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return m_; }
  std::uint32_t order() const { return q_; }
  const FpPolynomial& modulus() const { return modulus_; }

  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const;
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  Code inv(Code a) const;
  Code pow(Code a, std::uint64_t e) const;
  Code frobenius(Code a) const { return pow(a, p_); }

  bool is_square(Code a) const { return square_[a]; }
  bool in_prime_field(Code a) const { return a < p_; }
  Code generator() const { return exp_[1]; }

  std::vector<std::uint32_t> digits(Code a) const;
  Code from_digits(const std::vector<std::uint32_t>& digits) const;

  // Evaluates a polynomial with F_p coefficients at a field element.
  Code evaluate(const FpPolynomial& f, Code x) const;

  FFElement element(Code code) const;
  std::string format(Code a) const;

 private:
  void build_tables();
  Code slow_mul(Code a, Code b) const;

  std::uint32_t p_;
  unsigned m_;
  std::uint32_t q_;
  FpPolynomial modulus_;
  std::vector<Code> exp_;          // exp_[i] = g^i, 0 <= i < 2(q-1)
  std::vector<std::uint32_t> log_;  // log_[g^i] = i for nonzero codes
  std::vector<bool> square_;
};

// A field element bound to its context; the context must outlive it.
class FFElement {
 public:
  FFElement(const FFContext& ctx, FFContext::Code code) : ctx_(&ctx), code_(code) {}

  FFContext::Code code() const { return code_; }
  const FFContext& context() const { return *ctx_; }

  friend FFElement operator+(FFElement a, FFElement b) { return {*a.ctx_, a.ctx_->add(a.code_, b.code_)}; }
  friend FFElement operator-(FFElement a, FFElement b) { return {*a.ctx_, a.ctx_->sub(a.code_, b.code_)}; }
  friend FFElement operator*(FFElement a, FFElement b) { return {*a.ctx_, a.ctx_->mul(a.code_, b.code_)}; }
  friend FFElement operator/(FFElement a, FFElement b) {
    return {*a.ctx_, a.ctx_->mul(a.code_, a.ctx_->inv(b.code_))};
  }
  friend FFElement operator-(FFElement a) { return {*a.ctx_, a.ctx_->neg(a.code_)}; }
  friend bool operator==(FFElement a, FFElement b) { return a.ctx_ == b.ctx_ && a.code_ == b.code_; }

  FFElement pow(std::uint64_t e) const { return {*ctx_, ctx_->pow(code_, e)}; }
  FFElement frobenius() const { return {*ctx_, ctx_->frobenius(code_)}; }
  bool is_square() const { return ctx_->is_square(code_); }
  std::string to_string() const { return ctx_->format(code_); }

 private:
  const FFContext* ctx_;
  FFContext::Code code_;
};

// Images of the elements of `small` (indexed by code) in `big`, obtained by
// sending t to the smallest-code root of small.modulus() in `big`.
std::vector<FFContext::Code> embed_subfield(const FFContext& small, const FFContext& big);

}  // namespace hyperbound
