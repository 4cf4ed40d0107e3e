#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hsp/combinatorics.hpp"
#include "hsp/irrep.hpp"

namespace hsp {

// Degree and character value at the hidden involution for one irrep, or for
// `count` irreps sharing both values.
struct CharacterRow {
  std::string label;
  Integer degree;
  Integer chi_h;
  Integer count = 1;
};

struct CharacterData {
  Integer group_order;
  std::vector<CharacterRow> rows;

  Integer irrep_count() const;
  Integer sum_squared_degrees() const;
  Integer sum_degrees() const;
};

// Character values of an involution are integers; throws std::runtime_error
// if a computed value is more than 1e-6 from one.
CharacterData character_data(const IrrepList& irreps, Element h);

// epsilon = base^(1/root). Keeping the root symbolic makes membership tests
// such as |chi|/d >= epsilon exact for epsilon = n^(-a n / b).
struct Epsilon {
  Rational base;
  unsigned root = 1;

  static Epsilon of(const Rational& value) { return {value, 1}; }
  long double value() const;
  bool at_most(const Rational& x) const;       // epsilon <= x
  bool times_below_one(const Rational& factor) const;  // factor * epsilon < 1
  std::string to_string() const;
};

struct BoundParams {
  Epsilon epsilon;
  Integer group_order;
  std::vector<std::string> s_epsilon_labels;
  Integer d_epsilon;   // sum of d^2 over S_eps
  Integer sum_dchi;    // sum of d |chi(h)| over S_eps
  Integer sum_d;       // sum of d over all irreps
  Integer irrep_count;
  long double delta1 = 0;
  std::optional<Rational> delta1_exact;  // present when epsilon is rational

  long double epsilon_value() const { return epsilon.value(); }
  // eps + sum_dchi * sqrt(|irreps| / |G|)
  long double delta1_cauchy_schwarz() const;
  // 2^k (1 + 2k eps) sqrt(delta1) + 3k eps + 3k D_eps / |G|
  long double delta2(unsigned k) const;
  bool hypothesis_ok(unsigned k) const;  // 2k eps < 1
};

// Throws std::invalid_argument on epsilon <= 0 or when sum count*d^2 != |G|.
BoundParams bound_params(const CharacterData& data, const Epsilon& epsilon);

// Assembles the parameters from precomputed sums (used by the family bounds,
// whose irreps are too numerous to list).
BoundParams bound_params_from_sums(const Epsilon& epsilon, const Integer& group_order,
                                   std::vector<std::string> s_epsilon_labels, const Integer& d_epsilon,
                                   const Integer& sum_dchi, const Integer& sum_d, const Integer& irrep_count);

// Largest k >= 1 with sqrt(t delta2(k)) < threshold and 2k eps < 1; 0 if none.
// Requires 0 < threshold < 1.
unsigned entanglement_lower_bound(const BoundParams& params, long double threshold, unsigned states);

struct GallagherEntry {
  std::string label;
  Rational ratio;      // |chi(h)| / d
  bool in_lambda = false;  // |chi(h)| = d
  bool strict = true;      // ratio < 1 - 2|C(h)|/|G| (only meaningful outside Lambda)
};

// Checks that each irrep has |chi(h)| = d or |chi(h)|/d <= 1 - 2|C(h)|/|G|.
// Throws std::logic_error naming the first irrep that fails both.
std::vector<GallagherEntry> gallagher_check(const CharacterData& data, const Integer& centralizer_order);

// (1/|G|) sum d |chi(h)|
Rational trace_norm_eta(const CharacterData& data);
// (2^t/|G|) sum d |chi(h)|
Rational trace_norm_bound(const CharacterData& data, unsigned t);
// Smallest t >= 1 whose bound reaches the threshold.
unsigned trace_norm_t_min(const CharacterData& data, const Rational& threshold);

}  // namespace hsp
