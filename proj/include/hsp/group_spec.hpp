#pragma once

#include <stdexcept>
#include <string>

#include "hsp/group.hpp"

namespace hsp {

// Raised for malformed group specs; what() names the offending token.
class GroupSpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Group spec grammar:
//   s<n> | symmetric:<n>      symmetric group S_n
//   wreath:<n>                S_n wr S_2
//   d<n> | dihedral:<n>       dihedral group of order 2n
//   z<n> | c<n> | cyclic:<n>  cyclic group of order n
//   psl2:<q> | sl2:<q>        PSL(2,q), SL(2,q)
//   power:<spec>^<k>          k-fold direct power
// Range errors from the constructors propagate unchanged
// (std::invalid_argument, or std::length_error when an order cap is hit).
FiniteGroup parse_group_spec(const std::string& spec);

}  // namespace hsp
