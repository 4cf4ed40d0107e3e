#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hsp/perm.hpp"

namespace hsp {

// Canonical element id in [0, |G|). Id 0 is always the identity.
using Element = std::uint32_t;

enum class GroupFamily { symmetric, wreath, dihedral, cyclic, psl2, sl2, direct_power };

struct GroupKind {
  GroupFamily family;
  unsigned param = 0;  // n for symmetric/wreath/dihedral/cyclic, q for psl2/sl2, k for powers
};

namespace detail {
class GroupModel;
}

// Immutable finite group. Copies share the same underlying data, so a
// FiniteGroup behaves like a value and is safe to query from many threads.
class FiniteGroup {
 public:
  // Groups of order at most this keep a full multiplication table.
  static constexpr std::size_t kTableLimit = 2048;

  explicit FiniteGroup(std::shared_ptr<const detail::GroupModel> model);

  std::size_t order() const { return order_; }
  Element identity() const { return 0; }
  Element compose(Element x, Element y) const;
  Element inverse(Element x) const { return inverse_[x]; }
  Element conjugate(Element g, Element x) const { return compose(compose(g, x), inverse(g)); }
  Element power(Element x, std::uint64_t e) const;
  unsigned element_order(Element x) const;

  GroupKind kind() const;
  // Short spec string, e.g. "s4", "wreath:3", "psl2:13", "power:s3^2".
  std::string name() const;
  // Cycle notation for permutations, "(pi|sigma|b)" for wreath triples,
  // "[[a,b],[c,d]]" for projective/special linear matrices.
  std::string format(Element x) const;
  bool has_table() const { return !table_.empty(); }

  // Generating set used for orbit computations.
  const std::vector<Element>& generators() const { return generators_; }
  const detail::GroupModel& model() const { return *model_; }

  bool operator==(const FiniteGroup& other) const { return model_ == other.model_; }

 private:
  std::shared_ptr<const detail::GroupModel> model_;
  std::size_t order_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<Element> generators_;
};

// Subgroup of a parent group given by its sorted element ids. Construction
// rejects sets that are not closed under composition and inverse or miss the identity.
class Subgroup {
 public:
  Subgroup(FiniteGroup parent, std::vector<Element> elements);

  static Subgroup trivial(const FiniteGroup& g);
  static Subgroup whole(const FiniteGroup& g);
  static Subgroup generated_by(const FiniteGroup& g, const std::vector<Element>& generators);

  const FiniteGroup& parent() const { return parent_; }
  const std::vector<Element>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(Element x) const;
  bool is_normal() const;

 private:
  FiniteGroup parent_;
  std::vector<Element> elements_;
};

struct ConjugacyClass {
  Element representative;  // smallest id in the class
  std::vector<Element> members;
  std::size_t size() const { return members.size(); }
};

// --- constructors --------------------------------------------------------

FiniteGroup make_symmetric(unsigned n);          // 1 <= n <= 8
FiniteGroup make_wreath_s2(unsigned n);          // 2 <= n <= 5
FiniteGroup make_dihedral(unsigned n);           // order 2n
FiniteGroup make_cyclic(unsigned n);
FiniteGroup make_psl2(unsigned q);               // q in {4,5,7,8,9,11,13} (any small prime power accepted)
FiniteGroup make_sl2(unsigned q);                // faithful action on nonzero vectors of F_q^2
FiniteGroup make_direct_power(const FiniteGroup& base, unsigned k);

// --- queries -------------------------------------------------------------

std::vector<Element> conjugacy_class(const FiniteGroup& g, Element x);
std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g);  // sorted by size, then representative
// Class index of every element, aligned with conjugacy_classes(g).
std::vector<std::size_t> class_index_map(const FiniteGroup& g, const std::vector<ConjugacyClass>& classes);
Subgroup centralizer(const FiniteGroup& g, Element x);
Subgroup conjugate_subgroup(const Subgroup& h, Element g);
std::vector<Element> involutions(const FiniteGroup& g);
bool is_central(const FiniteGroup& g, Element x);
// The swap (e, e, 1) for wreath groups, the reflection with id n for D_n,
// otherwise the smallest non-central involution (or the smallest involution).
// Throws std::invalid_argument if the group has no involution.
Element default_involution(const FiniteGroup& g);

// --- concrete decodings --------------------------------------------------

struct WreathTriple {
  Permutation pi, sigma;
  int b = 0;
  bool operator==(const WreathTriple&) const = default;
};

Permutation symmetric_permutation(const FiniteGroup& g, Element x);
Element symmetric_element(const FiniteGroup& g, const Permutation& p);

WreathTriple wreath_decode(const FiniteGroup& g, Element x);
Element wreath_encode(const FiniteGroup& g, const WreathTriple& t);
Element wreath_swap(const FiniteGroup& g);  // h = (e, e, 1)
// Image of a wreath element in S_{2n}: pi, sigma act on the two halves for
// b = 0; for b = 1 the halves are exchanged.
Permutation wreath_to_s2n(const FiniteGroup& g, Element x);
// The factor group S_n of S_n wr S_2.
FiniteGroup wreath_base(const FiniteGroup& g);

// Matrix [[a,b],[c,d]] over F_q representing an element of psl2/sl2.
std::array<unsigned, 4> linear_matrix(const FiniteGroup& g, Element x);
Element linear_element(const FiniteGroup& g, const std::array<unsigned, 4>& m);
// Canonical projection SL(2,q) -> PSL(2,q); both groups must share q.
std::vector<Element> sl2_to_psl2_map(const FiniteGroup& sl, const FiniteGroup& psl);

FiniteGroup power_base(const FiniteGroup& g);
std::vector<Element> power_decode(const FiniteGroup& g, Element x);
Element power_encode(const FiniteGroup& g, const std::vector<Element>& coords);

// Parses an element: "#<id>" for any group, cycle notation for symmetric
// groups, "(pi|sigma|b)" with cycle notation for wreath groups,
// "[[a,b],[c,d]]" for psl2/sl2. Throws
// std::invalid_argument on malformed input.
Element parse_element(const FiniteGroup& g, const std::string& text);

}  // namespace hsp
