#include <doctest.h>

#include <numeric>

#include "hsp/character_table.hpp"
#include "hsp/group.hpp"
#include "hsp/group_spec.hpp"
#include "hsp/irrep.hpp"

using namespace hsp;

TEST_CASE("constructed irreps are unitary homomorphisms with a complete table") {
  for (const char* spec : {"s3", "s4", "s5", "dihedral:4", "dihedral:5", "cyclic:6", "wreath:2", "wreath:3", "psl2:5",
                           "psl2:7", "psl2:4", "sl2:3", "power:s3^2"}) {
    CAPTURE(spec);
    const FiniteGroup g = parse_group_spec(spec);
    const IrrepList irreps = irreps_for(g);
    std::size_t sum = 0;
    for (const auto& rho : irreps) {
      CHECK(homomorphism_error(rho) < 1e-9);
      CHECK(unitarity_error(rho) < 1e-9);
      CHECK(character_norm(rho) == doctest::Approx(1.0).epsilon(1e-9));
      sum += rho.degree() * rho.degree();
    }
    CHECK(sum == g.order());
    CHECK(irreps.size() == conjugacy_classes(g).size());
    const CharacterTable table = character_table(irreps);
    CHECK(row_orthogonality_error(table) < 1e-8);
    CHECK(column_orthogonality_error(table) < 1e-8);
  }
}

TEST_CASE("wreath irreps are labeled theta, theta' then kappa") {
  const IrrepList irreps = irreps_for(make_wreath_s2(3));
  std::vector<std::string> labels;
  for (const auto& rho : irreps) labels.push_back(rho.label());
  const std::vector<std::string> expected{"theta[3]",        "theta[2,1]",       "theta[1,1,1]",
                                          "theta'[3]",       "theta'[2,1]",      "theta'[1,1,1]",
                                          "kappa[3|2,1]",    "kappa[3|1,1,1]",   "kappa[2,1|1,1,1]"};
  CHECK(labels == expected);
  // theta' differs from theta by the sign of the swap.
  const FiniteGroup& g = irreps.front().group();
  const Element h = wreath_swap(g);
  CHECK(irreps[1].character(h).real() == doctest::Approx(2));
  CHECK(irreps[4].character(h).real() == doctest::Approx(-2));
  CHECK(std::abs(irreps[6].character(h)) < 1e-12);
}

TEST_CASE("symmetric irreps have hook-length degrees") {
  const IrrepList irreps = irreps_symmetric(5);
  std::vector<std::size_t> degrees;
  for (const auto& rho : irreps) degrees.push_back(rho.degree());
  CHECK(degrees == std::vector<std::size_t>{1, 4, 5, 6, 5, 4, 1});
}

TEST_CASE("generic decomposition agrees with the Young construction on characters") {
  const FiniteGroup s4 = make_symmetric(4);
  const IrrepList young = irreps_symmetric(s4);
  const IrrepList generic = irreps_generic(s4);
  REQUIRE(generic.size() == young.size());
  for (const auto& a : young) {
    bool matched = false;
    for (const auto& b : generic) {
      double err = 0;
      for (Element x = 0; x < 24; ++x) err = std::max(err, std::abs(a.character(x) - b.character(x)));
      matched = matched || err < 1e-8;
    }
    CHECK(matched);
  }
}

TEST_CASE("cyclic irreps are the discrete Fourier characters") {
  const FiniteGroup z6 = make_cyclic(6);
  const IrrepList irreps = irreps_for(z6);
  REQUIRE(irreps.size() == 6);
  for (std::size_t j = 0; j < 6; ++j) {
    CHECK(irreps[j].label() == "chi[" + std::to_string(j) + "]");
    const double angle = 2 * 3.14159265358979323846 * static_cast<double>(j) / 6.0;
    CHECK(std::abs(irreps[j].character(1) - std::polar(1.0, angle)) < 1e-12);
  }
}
