#include "hsp/combinatorics.hpp"

#include <cmath>
#include <stdexcept>

namespace hsp {

Integer partition_number(unsigned n) {
  if (n > 200) throw std::invalid_argument("partition_number supports n <= 200");
  std::vector<Integer> p(n + 1, 0);
  p[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    Integer total = 0;
    for (long j = 1;; ++j) {
      const long g1 = j * (3 * j - 1) / 2;
      const long g2 = j * (3 * j + 1) / 2;
      if (g1 > static_cast<long>(m)) break;
      const int sign = (j % 2 == 1) ? 1 : -1;
      total += sign * p[m - static_cast<unsigned>(g1)];
      if (g2 <= static_cast<long>(m)) total += sign * p[m - static_cast<unsigned>(g2)];
    }
    p[m] = total;
  }
  return p[n];
}

Integer factorial_big(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Integer b = 1;
  for (unsigned i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

Rational rational_pow(const Rational& base, unsigned exponent) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  return Rational(boost::multiprecision::pow(numerator(base), exponent),
                  boost::multiprecision::pow(denominator(base), exponent));
}

Integer hook_length_degree(const std::vector<unsigned>& lambda) {
  unsigned n = 0;
  for (unsigned part : lambda) n += part;
  Integer hooks = 1;
  for (std::size_t r = 0; r < lambda.size(); ++r)
    for (unsigned c = 0; c < lambda[r]; ++c) {
      unsigned below = 0;
      for (std::size_t r2 = r + 1; r2 < lambda.size() && lambda[r2] > c; ++r2) ++below;
      hooks *= (lambda[r] - c - 1) + below + 1;
    }
  return factorial_big(n) / hooks;
}

Rational parse_rational(const std::string& text) {
  auto digits_only = [](const std::string& s) {
    return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
  };
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  Rational value;
  if (const auto slash = s.find('/'); slash != std::string::npos) {
    const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!digits_only(num) || !digits_only(den) || Integer(den) == 0)
      throw std::invalid_argument("bad rational '" + text + "'");
    value = Rational(Integer(num), Integer(den));
  } else {
    const auto dot = s.find('.');
    const std::string whole = dot == std::string::npos ? s : s.substr(0, dot);
    const std::string frac = dot == std::string::npos ? "" : s.substr(dot + 1);
    if ((!whole.empty() && !digits_only(whole)) || (!frac.empty() && !digits_only(frac)) || (whole.empty() && frac.empty()))
      throw std::invalid_argument("bad number '" + text + "'");
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const Integer w = whole.empty() ? Integer(0) : Integer(whole);
    const Integer f = frac.empty() ? Integer(0) : Integer(frac);
    value = Rational(w * scale + f, scale);
  }
  return negative ? Rational(-value) : value;
}

long double log_of(const Integer& x) {
  if (x <= 0) throw std::domain_error("log of non-positive integer");
  const auto bits = boost::multiprecision::msb(x);
  if (bits < 1000) return std::log(x.convert_to<long double>());
  const unsigned shift = static_cast<unsigned>(bits) - 64;
  const Integer top = x >> shift;
  return std::log(top.convert_to<long double>()) + static_cast<long double>(shift) * std::log(2.0L);
}

long double log_of(const Rational& x) {
  return log_of(boost::multiprecision::numerator(x)) - log_of(boost::multiprecision::denominator(x));
}

long double to_long_double(const Rational& r) {
  if (r == 0) return 0;
  const long double lg = log_of(Rational(abs(r)));
  if (std::abs(lg) < 11000) {
    // Direct division is exact to long double rounding whenever it does not overflow.
    const long double num = boost::multiprecision::numerator(r).convert_to<long double>();
    const long double den = boost::multiprecision::denominator(r).convert_to<long double>();
    if (std::isfinite(num) && std::isfinite(den) && den != 0) return num / den;
  }
  const long double mag = std::exp(lg);
  return r < 0 ? -mag : mag;
}

BinomialTail binomial_tail(const Rational& alpha, const Rational& beta, unsigned n, const Rational& c) {
  if (alpha <= 0 || beta <= 0) throw std::invalid_argument("binomial_tail needs alpha, beta > 0");
  if (n < 1) throw std::invalid_argument("binomial_tail needs n >= 1");
  if (c < 1) throw std::invalid_argument("binomial_tail needs c >= 1");
  BinomialTail out;
  out.hypothesis_met = c > (alpha + beta) / beta;
  const Integer whole = boost::multiprecision::numerator(Rational(n) / c) / boost::multiprecision::denominator(Rational(n) / c);
  out.t = static_cast<unsigned>(whole);
  Rational sum = 0;
  for (unsigned l = n - out.t; l <= n; ++l) {
    Rational term = Rational(binomial(n, l));
    term *= rational_pow(alpha, l);
    term *= rational_pow(beta, n - l);
    sum += term;
  }
  out.exact = sum;
  out.log_exact = log_of(sum);
  out.exact_value = to_long_double(sum);
  const long double la = log_of(alpha);
  const long double lc = log_of(c);
  const long double lab = log_of(Rational(alpha + beta));
  const long double cval = to_long_double(c);
  out.log_bound = static_cast<long double>(n) * (la + (lc + 1.0L + lab - la) / cval);
  out.bound = std::exp(out.log_bound);
  return out;
}

}  // namespace hsp
