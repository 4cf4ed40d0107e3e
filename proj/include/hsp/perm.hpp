#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hsp {

// A permutation of {0, ..., n-1} stored as its image list.
// Products read right to left: compose(p, q) applies q first.
using Permutation = std::vector<std::uint8_t>;

Permutation identity_permutation(std::size_t degree);
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
bool is_identity(const Permutation& p);

// Lexicographic rank among all permutations of the same degree.
std::uint64_t lex_rank(const Permutation& p);
Permutation lex_unrank(std::uint64_t rank, std::size_t degree);

std::uint64_t factorial(unsigned n);

// Cycle notation with 1-based points, e.g. "(1 2)(3 5 4)"; the identity is "()".
std::string to_cycle_string(const Permutation& p);

// Parses cycle notation (1-based points; commas or blanks separate points).
// Throws std::invalid_argument naming the offending token.
Permutation parse_cycles(std::string_view text, std::size_t degree);

}  // namespace hsp
