#pragma once

#include <cstdint>
#include <vector>

namespace hsp {

// Arithmetic in F_q for small q. Elements are encoded as integers 0..q-1
// holding the coefficient vector of a polynomial in base p
// (a_0 + a_1 p + a_2 p^2 + ...). Extension fields use fixed irreducible
// polynomials: F_4: x^2+x+1, F_8: x^3+x+1, F_9: x^2+1, F_16: x^4+x+1,
// F_25: x^2+x+2, F_27: x^3+2x+1.
class FiniteField {
 public:
  explicit FiniteField(unsigned q);

  unsigned order() const { return q_; }
  unsigned characteristic() const { return p_; }
  unsigned degree() const { return m_; }

  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned sub(unsigned a, unsigned b) const { return add_[a * q_ + neg_[b]]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned neg(unsigned a) const { return neg_[a]; }
  // Throws std::domain_error for a = 0.
  unsigned inv(unsigned a) const;

 private:
  unsigned q_, p_, m_;
  std::vector<std::uint16_t> add_, mul_, neg_, inv_;
};

// Returns (p, m) with q = p^m, or (0, 0) when q is not a prime power.
struct PrimePower {
  std::uint64_t p = 0;
  unsigned m = 0;
};
PrimePower prime_power_decomposition(std::uint64_t q);
bool is_prime(std::uint64_t n);

}  // namespace hsp
