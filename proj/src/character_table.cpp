#include "hsp/character_table.hpp"

#include <cmath>
#include <cstdio>

namespace hsp {

CharacterTable character_table(const IrrepList& irreps) {
  if (irreps.empty()) throw std::invalid_argument("character_table needs at least one irrep");
  const FiniteGroup& g = irreps.front().group();
  CharacterTable t;
  t.group_name = g.name();
  t.group_order = g.order();
  for (const auto& c : conjugacy_classes(g)) {
    t.class_reps.push_back(g.format(c.representative));
    t.class_sizes.push_back(c.size());
    t.class_rep_ids.push_back(c.representative);
  }
  for (const auto& rho : irreps) {
    t.labels.push_back(rho.label());
    t.degrees.push_back(rho.degree());
    std::vector<Complex> row;
    for (Element rep : t.class_rep_ids) row.push_back(rho.character(rep));
    t.values.push_back(std::move(row));
  }
  return t;
}

double row_orthogonality_error(const CharacterTable& t) {
  double worst = 0;
  for (std::size_t a = 0; a < t.values.size(); ++a)
    for (std::size_t b = 0; b < t.values.size(); ++b) {
      Complex s = 0;
      for (std::size_t c = 0; c < t.class_sizes.size(); ++c)
        s += static_cast<double>(t.class_sizes[c]) * t.values[a][c] * std::conj(t.values[b][c]);
      s /= static_cast<double>(t.group_order);
      worst = std::max(worst, std::abs(s - Complex(a == b ? 1.0 : 0.0)));
    }
  return worst;
}

double column_orthogonality_error(const CharacterTable& t) {
  double worst = 0;
  for (std::size_t x = 0; x < t.class_sizes.size(); ++x)
    for (std::size_t y = 0; y < t.class_sizes.size(); ++y) {
      Complex s = 0;
      for (const auto& row : t.values) s += row[x] * std::conj(row[y]);
      const double expected =
          x == y ? static_cast<double>(t.group_order) / static_cast<double>(t.class_sizes[x]) : 0.0;
      worst = std::max(worst, std::abs(s - expected));
    }
  return worst;
}

std::string format_complex(Complex z) {
  double re = std::abs(z.real()) < 1e-12 ? 0.0 : z.real();
  double im = std::abs(z.imag()) < 1e-12 ? 0.0 : z.imag();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", re + 0.0, im + 0.0);
  return buf;
}

namespace {
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}
}  // namespace

std::string to_csv(const CharacterTable& t) {
  std::string out = "class_rep,class_size";
  for (const auto& l : t.labels) out += "," + csv_field(l);
  out += "\n";
  for (std::size_t c = 0; c < t.class_sizes.size(); ++c) {
    out += csv_field(t.class_reps[c]) + "," + std::to_string(t.class_sizes[c]);
    for (const auto& row : t.values) out += "," + format_complex(row[c]);
    out += "\n";
  }
  return out;
}

nlohmann::json to_json(const CharacterTable& t) {
  nlohmann::json classes = nlohmann::json::array();
  for (std::size_t c = 0; c < t.class_sizes.size(); ++c)
    classes.push_back({{"class_rep", t.class_reps[c]}, {"class_size", t.class_sizes[c]}});
  nlohmann::json irreps = nlohmann::json::array();
  for (std::size_t r = 0; r < t.labels.size(); ++r) {
    nlohmann::json values = nlohmann::json::array();
    for (const auto& v : t.values[r]) values.push_back(format_complex(v));
    irreps.push_back({{"label", t.labels[r]}, {"degree", t.degrees[r]}, {"values", values}});
  }
  return {{"group", t.group_name}, {"group_order", t.group_order}, {"classes", classes}, {"irreps", irreps}};
}

}  // namespace hsp
