#include <doctest.h>

#include "hsp/group.hpp"
#include "hsp/lemmas.hpp"
#include "hsp/measurement.hpp"
#include "hsp/psl_tables.hpp"
#include "hsp/transfer.hpp"

using namespace hsp;

TEST_CASE("PSL tables pass their checks against enumeration") {
  for (unsigned q : {4u, 5u, 7u, 8u, 9u, 11u, 13u}) {
    CAPTURE(q);
    for (const auto& c : check_psl_table(q, q <= 9)) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      if (c.name == "involution_count_statement") continue;
      CHECK(c.status == "PASS");
    }
  }
}

TEST_CASE("involution-count statement differs from enumeration at q = 5") {
  bool found = false;
  for (const auto& c : check_psl_table(5, false))
    if (c.name == "involution_count_statement") {
      found = true;
      CHECK(c.status == "WARN");
    }
  CHECK(found);
}

TEST_CASE("transfer lemma spectra") {
  for (unsigned n : {2u, 3u}) CHECK(transfer_wreath_in_symmetric(n).pass());
  for (unsigned q : {3u, 5u}) CHECK(transfer_sl2_to_psl2(q).pass());
}

TEST_CASE("lemma suite on small groups") {
  const FiniteGroup g = make_dihedral(4);
  const HiddenInvolution s(irreps_for(g), default_involution(g));
  LemmaSuiteOptions o;
  o.k = 2;
  o.seeds = {1, 2};
  for (const auto& r : lemma_suite(s, o)) {
    CAPTURE(r.lemma);
    CAPTURE(r.detail);
    CHECK(r.pass());
  }
  const FiniteGroup w = make_wreath_s2(2);
  for (const auto& r : facts_suite(irreps_for(w), 10, 3)) {
    CAPTURE(r.lemma);
    CHECK(r.status == "pass");
    CHECK(r.lhs == doctest::Approx(r.rhs).epsilon(1e-10));
  }
}
