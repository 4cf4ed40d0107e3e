#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hsp {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// p(n) by Euler's pentagonal recurrence. 0 <= n <= 200.
Integer partition_number(unsigned n);

Integer factorial_big(unsigned n);
Integer binomial(unsigned n, unsigned k);

Rational rational_pow(const Rational& base, unsigned exponent);

// Degree of the S_n irrep for partition lambda (hook-length formula).
Integer hook_length_degree(const std::vector<unsigned>& lambda);

// Parses "0.25", "1/4", "3" exactly. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

long double to_long_double(const Rational& r);
long double log_of(const Integer& x);  // natural log, also for huge values
long double log_of(const Rational& x);

struct BinomialTail {
  unsigned t = 0;        // floor(n / c)
  Rational exact;        // sum_{l = n-t}^{n} C(n,l) alpha^l beta^(n-l)
  long double exact_value = 0;
  long double bound = 0;      // (alpha (c e (alpha+beta)/alpha)^(1/c))^n
  long double log_exact = 0;  // natural logs, usable when the values overflow
  long double log_bound = 0;
  bool hypothesis_met = false;  // c > (alpha+beta)/beta
  bool holds() const { return log_exact <= log_bound; }
};

// Requires alpha, beta > 0, n >= 1 and c >= 1; throws std::invalid_argument
// otherwise. The bound is only guaranteed when hypothesis_met.
BinomialTail binomial_tail(const Rational& alpha, const Rational& beta, unsigned n, const Rational& c);

}  // namespace hsp
