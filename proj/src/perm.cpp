#include "hsp/perm.hpp"

#include <numeric>
#include <stdexcept>

namespace hsp {

Permutation identity_permutation(std::size_t degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  return p;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint8_t>(i);
  return r;
}

bool is_identity(const Permutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

std::uint64_t factorial(unsigned n) {
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

std::uint64_t lex_rank(const Permutation& p) {
  const std::size_t n = p.size();
  std::uint64_t rank = 0;
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t smaller = 0;
    for (std::size_t v = 0; v < p[i]; ++v)
      if (!used[v]) ++smaller;
    used[p[i]] = true;
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

Permutation lex_unrank(std::uint64_t rank, std::size_t degree) {
  std::vector<std::uint64_t> digits(degree);
  for (std::size_t i = degree; i-- > 0;) {
    const std::uint64_t base = degree - i;
    digits[i] = rank % base;
    rank /= base;
  }
  std::vector<std::uint8_t> pool = identity_permutation(degree);
  Permutation p(degree);
  for (std::size_t i = 0; i < degree; ++i) {
    p[i] = pool[digits[i]];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digits[i]));
  }
  return p;
}

std::string to_cycle_string(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == start) continue;
    out += '(';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
      x = p[x];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  Permutation result = identity_permutation(degree);
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("bad cycle notation '" + std::string(text) + "': " + why);
  };
  auto skip_blank = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',' || text[pos] == '\t')) ++pos;
  };
  std::vector<bool> used(degree, false);
  skip_blank();
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '(' at offset " + std::to_string(pos));
    ++pos;
    std::vector<std::size_t> cycle;
    for (;;) {
      skip_blank();
      if (pos >= text.size()) fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t value = 0;
      const std::size_t begin = pos;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
        value = value * 10 + static_cast<std::size_t>(text[pos++] - '0');
      if (pos == begin) fail("unexpected token '" + std::string(1, text[pos]) + "'");
      if (value < 1 || value > degree)
        fail("point " + std::to_string(value) + " outside 1.." + std::to_string(degree));
      if (used[value - 1]) fail("point " + std::to_string(value) + " repeated");
      used[value - 1] = true;
      cycle.push_back(value - 1);
    }
    // Disjoint cycles commute, so the order of application is irrelevant.
    for (std::size_t i = 0; i < cycle.size(); ++i)
      result[cycle[i]] = static_cast<std::uint8_t>(cycle[(i + 1) % cycle.size()]);
    skip_blank();
  }
  return result;
}

}  // namespace hsp
