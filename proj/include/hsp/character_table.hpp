#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hsp/irrep.hpp"

namespace hsp {

struct CharacterTable {
  std::string group_name;
  std::size_t group_order = 0;
  std::vector<std::string> class_reps;  // formatted representatives
  std::vector<std::size_t> class_sizes;
  std::vector<Element> class_rep_ids;
  std::vector<std::string> labels;
  std::vector<std::size_t> degrees;
  std::vector<std::vector<Complex>> values;  // values[irrep][class]
};

// Classes are ordered by size, then representative id.
CharacterTable character_table(const IrrepList& irreps);

// max |(1/|G|) sum_g chi_a(g) conj chi_b(g) - delta_ab| over irrep pairs.
double row_orthogonality_error(const CharacterTable& table);
// max |sum_rho chi_rho(x) conj chi_rho(y) - delta_xy |C(x)|| over class pairs,
// where |C(x)| = |G| / class size is the centralizer order.
double column_orthogonality_error(const CharacterTable& table);

// "a+bi" with 12 significant digits; parts below 1e-12 in magnitude print as 0.
std::string format_complex(Complex z);

// Header "class_rep,class_size,<irrep labels...>", one row per class.
std::string to_csv(const CharacterTable& table);
nlohmann::json to_json(const CharacterTable& table);

}  // namespace hsp
