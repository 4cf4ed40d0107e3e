#include "hsp/finite_field.hpp"

#include <stdexcept>
#include <string>

namespace hsp {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimePower prime_power_decomposition(std::uint64_t q) {
  if (q < 2) return {};
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {q, 1};
  unsigned m = 0;
  while (q % p == 0) {
    q /= p;
    ++m;
  }
  if (q != 1) return {};
  return {p, m};
}

namespace {

// Low-order coefficients of the monic irreducible polynomial x^m + c_{m-1} x^{m-1} + ... + c_0.
std::vector<unsigned> irreducible_tail(unsigned p, unsigned m) {
  if (p == 2 && m == 2) return {1, 1};
  if (p == 2 && m == 3) return {1, 1, 0};
  if (p == 2 && m == 4) return {1, 1, 0, 0};
  if (p == 3 && m == 2) return {1, 0};
  if (p == 3 && m == 3) return {1, 2, 0};
  if (p == 5 && m == 2) return {2, 1};
  throw std::invalid_argument("no fixed irreducible polynomial for F_" + std::to_string(p) +
                              "^" + std::to_string(m));
}

}  // namespace

FiniteField::FiniteField(unsigned q) : q_(q) {
  const auto pp = prime_power_decomposition(q);
  if (pp.m == 0 || q > 256)
    throw std::invalid_argument("field order " + std::to_string(q) + " is not a supported prime power");
  p_ = static_cast<unsigned>(pp.p);
  m_ = pp.m;

  auto digits = [&](unsigned a) {
    std::vector<unsigned> d(m_);
    for (unsigned i = 0; i < m_; ++i) {
      d[i] = a % p_;
      a /= p_;
    }
    return d;
  };
  auto encode = [&](const std::vector<unsigned>& d) {
    unsigned a = 0;
    for (unsigned i = m_; i-- > 0;) a = a * p_ + d[i];
    return a;
  };

  const std::vector<unsigned> tail = m_ > 1 ? irreducible_tail(p_, m_) : std::vector<unsigned>{};
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (unsigned a = 0; a < q_; ++a) {
    const auto da = digits(a);
    std::vector<unsigned> dn(m_);
    for (unsigned i = 0; i < m_; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = static_cast<std::uint16_t>(encode(dn));
    for (unsigned b = 0; b < q_; ++b) {
      const auto db = digits(b);
      std::vector<unsigned> ds(m_);
      for (unsigned i = 0; i < m_; ++i) ds[i] = (da[i] + db[i]) % p_;
      add_[a * q_ + b] = static_cast<std::uint16_t>(encode(ds));

      std::vector<unsigned> prod(2 * m_, 0);
      for (unsigned i = 0; i < m_; ++i)
        for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      // x^m = -(c_{m-1} x^{m-1} + ... + c_0)
      for (unsigned deg = 2 * m_ - 1; deg >= m_ && deg > 0; --deg) {
        const unsigned c = prod[deg];
        if (c == 0) continue;
        prod[deg] = 0;
        for (unsigned i = 0; i < m_; ++i)
          prod[deg - m_ + i] = (prod[deg - m_ + i] + c * (p_ - tail[i])) % p_;
      }
      prod.resize(m_);
      mul_[a * q_ + b] = static_cast<std::uint16_t>(encode(prod));
    }
  }
  for (unsigned a = 1; a < q_; ++a)
    for (unsigned b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<std::uint16_t>(b);
  for (unsigned a = 1; a < q_; ++a)
    if (inv_[a] == 0) throw std::logic_error("F_" + std::to_string(q_) + " table is not a field");
}

unsigned FiniteField::inv(unsigned a) const {
  if (a == 0) throw std::domain_error("inverse of zero in F_q");
  return inv_[a];
}

}  // namespace hsp
