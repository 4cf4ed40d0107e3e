#include <doctest.h>

#include <cmath>

#include "hsp/bounds.hpp"
#include "hsp/families.hpp"
#include "hsp/group.hpp"
#include "hsp/group_spec.hpp"
#include "hsp/irrep.hpp"
#include "hsp/psl_tables.hpp"

using namespace hsp;

namespace {

long double delta2_formula(long double eps, long double delta1, long double d_eps_over_g, unsigned k) {
  return std::pow(2.0L, k) * (1 + 2 * k * eps) * std::sqrt(delta1) + 3 * k * eps + 3 * k * d_eps_over_g;
}

}  // namespace

TEST_CASE("k lower bound scans delta2") {
  const Integer order = Integer(1000000) * 1000000;
  const Rational eps(Integer(1), boost::multiprecision::pow(Integer(10), 30));
  const BoundParams p = bound_params_from_sums(Epsilon::of(eps), order, {}, 0, 1, 1, 1);
  CHECK(static_cast<double>(p.delta1) == doctest::Approx(1e-12).epsilon(1e-9));
  for (unsigned k = 1; k <= 20; ++k)
    CHECK(static_cast<double>(p.delta2(k)) ==
          doctest::Approx(static_cast<double>(delta2_formula(1e-30L, p.delta1, 0, k))).epsilon(1e-12));
  CHECK(entanglement_lower_bound(p, 1.0L / 3, 1) == 16);
  CHECK(entanglement_lower_bound(p, 1.0L / 3, 2) == 15);
}

TEST_CASE("delta1 for PSL(2,13) matches enumeration") {
  const FamilyReport r = psl_bound(13, BoundOptions{});
  REQUIRE(r.bounds);
  REQUIRE(r.bounds->delta1_exact);
  CHECK(*r.bounds->delta1_exact == Rational(1, 6) + Rational(92, 1092));
  const FiniteGroup g = make_psl2(13);
  const BoundParams direct = bound_params(character_data(irreps_for(g), default_involution(g)), Epsilon::of(Rational(1, 6)));
  CHECK(*direct.delta1_exact == *r.bounds->delta1_exact);
  CHECK(direct.d_epsilon == r.bounds->d_epsilon);
}

TEST_CASE("wreath family sums match constructed irreps") {
  for (unsigned n : {2u, 3u, 4u}) {
    CAPTURE(n);
    const FamilyReport r = wreath_bound(n, Rational(1, 4), BoundOptions{});
    const FiniteGroup g = make_wreath_s2(n);
    const IrrepList irreps = irreps_wreath(g);
    // Direct recount from the matrices.
    const Element h = wreath_swap(g);
    // theta-type irreps have chi(h) = +-d_lambda; kappa-type vanish at h.
    const Integer nn = boost::multiprecision::pow(Integer(n), n);
    Integer sum_dchi = 0, d_eps = 0, sum_d = 0;
    for (const auto& rho : irreps) {
      const long long chi = std::llabs(std::llround(rho.character(h).real()));
      sum_d += rho.degree();
      if (chi > 0 && boost::multiprecision::pow(Integer(chi), 4) <= nn) {
        sum_dchi += Integer(rho.degree()) * chi;
        d_eps += Integer(rho.degree()) * rho.degree();
      }
    }
    CHECK(r.bounds->sum_dchi == sum_dchi);
    CHECK(r.bounds->d_epsilon == d_eps);
    CHECK(r.bounds->sum_d == sum_d);
    CHECK(r.bounds->irrep_count == irreps.size());
    CHECK(r.bounds->group_order == g.order());
  }
}

TEST_CASE("Gallagher dichotomy for S4 at a transposition") {
  const FiniteGroup g = make_symmetric(4);
  const Element h = parse_element(g, "(1 2)");
  const CharacterData data = character_data(irreps_for(g), h);
  const auto entries = gallagher_check(data, centralizer(g, h).order());
  std::vector<Rational> outside;
  for (const auto& e : entries)
    if (!e.in_lambda) outside.push_back(e.ratio);
  std::sort(outside.begin(), outside.end());
  CHECK(outside == std::vector<Rational>{0, Rational(1, 3), Rational(1, 3)});
  for (const auto& r : outside) CHECK(r < Rational(2, 3));
}

TEST_CASE("trace-norm bound constants") {
  const FiniteGroup d4 = make_dihedral(4);
  const CharacterData dd = character_data(irreps_for(d4), default_involution(d4));
  Integer sum = 0;
  for (const auto& row : dd.rows) sum += row.count * row.degree * (row.chi_h < 0 ? -row.chi_h : row.chi_h);
  CHECK(sum == 4);
  CHECK(trace_norm_eta(dd) == Rational(1, 2));

  const FiniteGroup w = make_wreath_s2(3);
  const CharacterData wd = character_data(irreps_for(w), wreath_swap(w));
  CHECK(trace_norm_bound(wd, 2) == Rational(80, 72));
}

TEST_CASE("epsilon stored as a root compares exactly") {
  const Epsilon e{Rational(1, 27), 4};
  CHECK(e.value() == doctest::Approx(std::pow(27.0, -0.25)));
  CHECK(e.at_most(Rational(1, 2)));
  CHECK_FALSE(e.at_most(Rational(2, 5)));
  CHECK(e.times_below_one(2));
  CHECK_FALSE(e.times_below_one(3));
}

TEST_CASE("PSL tables square-sum to the group order") {
  for (unsigned q : {4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 17u, 19u, 23u, 25u, 27u, 29u, 31u, 32u, 49u}) {
    CAPTURE(q);
    const PslTable t = psl_table(q);
    const Integer qq = q;
    const Integer order = qq * (qq * qq - 1) / (q % 2 ? 2 : 1);
    CHECK(t.data.group_order == order);
    CHECK(t.data.sum_squared_degrees() == order);
    CHECK(t.data.irrep_count() == (q % 2 ? Integer((q + 5) / 2) : Integer(q + 1)));
    // Second orthogonality: sum chi(h)^2 = |C(h)|.
    Integer col = 0;
    for (const auto& row : t.data.rows) col += row.count * row.chi_h * row.chi_h;
    CHECK(col == t.centralizer_order);
  }
  CHECK_THROWS(psl_table(6));
}

TEST_CASE("direct power bound for S4") {
  const FiniteGroup g = make_symmetric(4);
  const FamilyReport r = direct_power_bound(g, parse_element(g, "(1 2)"), 10, DirectPowerOptions{}, BoundOptions{});
  CHECK(r.applicable);
  CHECK(r.details["direct2"]["holds"].get<bool>());
  CHECK(r.details["lambda"].get<long long>() == 2);
  const FamilyReport s3 = direct_power_bound(make_symmetric(3), 1, 5, DirectPowerOptions{}, BoundOptions{});
  CHECK_FALSE(s3.applicable);
}
