#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hsp/bounds.hpp"
#include "hsp/group.hpp"

namespace hsp {

struct BoundOptions {
  unsigned k_max = 10;
  long double threshold = 1.0L / 3;  // TV threshold theta
  unsigned states = 1;               // t, the number of coset states
};

struct Delta2Entry {
  unsigned k = 0;
  long double value = 0;
  bool hypothesis_ok = false;
};

struct FamilyReport {
  std::string family;
  nlohmann::json params = nlohmann::json::object();
  bool applicable = true;
  std::string inapplicable_reason;
  std::optional<BoundParams> bounds;
  BoundOptions options;
  std::vector<Delta2Entry> delta2_by_k;
  unsigned k_lower_bound = 0;
  std::optional<long double> asymptotic;
  std::string asymptotic_formula;
  std::vector<std::string> notes;
  nlohmann::json details = nlohmann::json::object();
};

// Fills delta2_by_k and k_lower_bound from bounds.
void finish_report(FamilyReport& report);

// S_n wr S_2 with epsilon = n^(-alpha n). 2 <= n <= 40, alpha = a/b with
// 1 <= a*n and b <= 64.
FamilyReport wreath_bound(unsigned n, const Rational& alpha, const BoundOptions& options);
FamilyReport psl_bound(unsigned q, const BoundOptions& options);
// PSL branch for q given as p^e with p prime (q may exceed 64 bits).
FamilyReport psl_bound_prime_power(unsigned p, unsigned e, const BoundOptions& options);
// Maximum of the S_{n/2} wr S_2 branch and the PSL(2, p^(floor(n/2) m)) branch.
FamilyReport gl_bound(unsigned n, unsigned p, unsigned m, const BoundOptions& options);

struct DirectPowerOptions {
  std::optional<Rational> c;      // searched over 2..16 when empty
  std::optional<Rational> kappa;  // defaults to the midpoint of the admissible range
};
// G^n with hidden (h, ..., h). |G| <= 2000.
FamilyReport direct_power_bound(const FiniteGroup& g, Element h, unsigned n, const DirectPowerOptions& dp,
                                const BoundOptions& options);

nlohmann::json to_json(const FamilyReport& report);
// Two-column "key,value" summary.
std::string to_csv(const FamilyReport& report);
std::string to_text(const FamilyReport& report);

}  // namespace hsp
