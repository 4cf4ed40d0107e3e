#include <doctest.h>

#include <cmath>
#include <functional>

#include "hsp/combinatorics.hpp"
#include "hsp/irrep.hpp"

using namespace hsp;

namespace {

// Counts partitions of n with parts at most `largest`.
unsigned long long count_partitions(unsigned n, unsigned largest) {
  if (n == 0) return 1;
  unsigned long long total = 0;
  for (unsigned part = std::min(n, largest); part >= 1; --part) total += count_partitions(n - part, part);
  return total;
}

// Standard Young tableaux by repeatedly removing a corner cell.
unsigned long long count_tableaux(std::vector<unsigned> shape) {
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  if (shape.empty()) return 1;
  unsigned long long total = 0;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    const bool corner = i + 1 == shape.size() || shape[i + 1] < shape[i];
    if (!corner) continue;
    auto smaller = shape;
    --smaller[i];
    total += count_tableaux(smaller);
  }
  return total;
}

}  // namespace

TEST_CASE("partition numbers match direct enumeration") {
  CHECK(partition_number(4) == 5);
  CHECK(partition_number(10) == 42);
  for (unsigned n = 0; n <= 25; ++n) CHECK(partition_number(n) == count_partitions(n, n));
  CHECK(partition_number(100) == Integer("190569292"));
  CHECK_THROWS(partition_number(201));
}

TEST_CASE("binomial and factorial agree with Pascal's triangle") {
  std::vector<Integer> row{1};
  for (unsigned n = 1; n <= 40; ++n) {
    std::vector<Integer> next(n + 1, 1);
    for (unsigned k = 1; k < n; ++k) next[k] = row[k - 1] + row[k];
    row = next;
    for (unsigned k = 0; k <= n; ++k) CHECK(binomial(n, k) == row[k]);
  }
  CHECK(factorial_big(20) == Integer("2432902008176640000"));
}

TEST_CASE("hook length formula counts standard tableaux") {
  for (unsigned n = 1; n <= 8; ++n)
    for (const auto& lambda : partitions(n)) CHECK(hook_length_degree(lambda) == count_tableaux(lambda));
}

TEST_CASE("rational parsing and powers") {
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("1/4") == Rational(1, 4));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("2/6") == Rational(1, 3));
  CHECK_THROWS(parse_rational("abc"));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK(rational_pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(rational_pow(Rational(5, 7), 0) == Rational(1));
  CHECK(log_of(Integer(1) << 5000) == doctest::Approx(5000 * std::log(2.0)));
}

TEST_CASE("binomial tail worked case") {
  const BinomialTail tail = binomial_tail(1, 1, 4, 2);
  CHECK(tail.t == 2);
  // c = (alpha+beta)/beta sits on the boundary of the strict hypothesis.
  CHECK_FALSE(tail.hypothesis_met);
  // C(4,2) + C(4,3) + C(4,4)
  CHECK(tail.exact == 11);
  CHECK(static_cast<double>(tail.bound) == doctest::Approx(16 * std::exp(2.0)).epsilon(1e-9));
  CHECK(tail.holds());
}

TEST_CASE("binomial tail matches a direct sum") {
  for (unsigned n = 1; n <= 30; n += 3) {
    const Rational alpha(2, 3), beta(5, 4), c(4);
    const BinomialTail tail = binomial_tail(alpha, beta, n, c);
    const unsigned t = n / 4;
    Rational sum = 0;
    for (unsigned l = n - t; l <= n; ++l) sum += Rational(binomial(n, l)) * rational_pow(alpha, l) * rational_pow(beta, n - l);
    CHECK(tail.hypothesis_met);
    CHECK(tail.exact == sum);
    CHECK(tail.holds());
  }
  CHECK_THROWS(binomial_tail(1, 1, 4, Rational(1, 2)));
  CHECK_THROWS(binomial_tail(0, 1, 4, 5));
}
