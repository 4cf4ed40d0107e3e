#pragma once

#include <string>
#include <vector>

#include "hsp/bounds.hpp"

namespace hsp {

enum class PslCase { one_mod_four, three_mod_four, even };

// Degrees and involution characters of PSL(2,q). Irreps sharing both values
// are merged into one row with a count, so huge q stays cheap.
struct PslTable {
  Integer q;
  PslCase kind = PslCase::even;
  CharacterData data;
  Integer centralizer_order;       // q-1, q+1 or q for the involution class
  Integer stated_involution_count;  // the count quoted alongside the closed-form tables
  Rational epsilon;                 // 2/(q-1) for odd q, 1/(q-1) for even q
};

// q a prime power >= 4. Throws std::invalid_argument otherwise.
PslTable psl_table(unsigned q);
// q = p^m >= 4 with p prime, for q beyond 32 bits (not re-validated).
PslTable psl_table_prime_power(const Integer& q, unsigned p);

struct TableCheck {
  std::string name;
  std::string status;  // "PASS", "FAIL" or "WARN"
  std::string detail;
};

// Sum of squares, orthogonality of the identity and involution columns,
// second orthogonality at the involution, and the row counts per family.
// For q <= 13 the group is enumerated: the involution class and its
// centralizer come from the group itself, and the stated involution count
// is compared against the enumeration (a mismatch is a WARN). With
// compare_generic the rows are matched against irreps_generic up to
// permutation, including full row and column orthogonality.
std::vector<TableCheck> check_psl_table(unsigned q, bool compare_generic);

}  // namespace hsp
