#pragma once

#include <string>
#include <vector>

#include "hsp/group.hpp"

namespace hsp {

struct TransferReport {
  std::string mode;  // "subgroup" or "quotient"
  std::size_t compared = 0;
  double max_error = 0;
  double index = 1;  // [big : small] in subgroup mode
  std::string detail;
  bool pass(double tol = 1e-9) const { return max_error <= tol; }
};

// small embeds into big through embedding[x]. The sorted spectrum of
// sigma^big_{H} must be [big:small] copies of spec(sigma^small_H) / [big:small].
// Throws std::invalid_argument if embedding is not an injective homomorphism.
TransferReport verify_transfer_subgroup(const FiniteGroup& big, const FiniteGroup& small,
                                        const std::vector<Element>& embedding, const Subgroup& h);

// projection maps big onto quotient with kernel N. The nonzero spectrum of
// sigma^big over the preimage of H must equal that of sigma^quotient_H.
// Throws std::invalid_argument if projection is not a surjective homomorphism.
TransferReport verify_transfer_quotient(const FiniteGroup& big, const FiniteGroup& quotient,
                                        const std::vector<Element>& projection, const Subgroup& h);

// S_n wr S_2 <= S_2n with H generated by (1,n+1)(2,n+2)...(n,2n).
TransferReport transfer_wreath_in_symmetric(unsigned n);
// SL(2,q) -> PSL(2,q) with H generated by an involution of PSL(2,q).
TransferReport transfer_sl2_to_psl2(unsigned q);

}  // namespace hsp
