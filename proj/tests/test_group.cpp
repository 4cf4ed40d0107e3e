#include <doctest.h>

#include <map>
#include <set>

#include "hsp/group.hpp"
#include "hsp/group_spec.hpp"
#include "hsp/perm.hpp"

using namespace hsp;

namespace {

void check_group_axioms(const FiniteGroup& g) {
  const auto n = static_cast<Element>(g.order());
  const Element step = n > 200 ? n / 97 + 1 : 1;
  for (Element x = 0; x < n; x += step) {
    CHECK(g.compose(x, g.identity()) == x);
    CHECK(g.compose(g.identity(), x) == x);
    CHECK(g.compose(x, g.inverse(x)) == g.identity());
    for (Element y = 0; y < n; y += step)
      for (Element z = 0; z < n; z += 7 * step) CHECK(g.compose(g.compose(x, y), z) == g.compose(x, g.compose(y, z)));
  }
}

std::size_t class_count(const FiniteGroup& g) { return conjugacy_classes(g).size(); }

}  // namespace

TEST_CASE("group orders and axioms") {
  const std::map<std::string, std::size_t> orders{{"s3", 6},        {"s4", 24},     {"dihedral:4", 8}, {"cyclic:6", 6},
                                                  {"wreath:3", 72}, {"psl2:5", 60}, {"psl2:7", 168},   {"sl2:5", 120},
                                                  {"psl2:8", 504},  {"psl2:4", 60}, {"power:s3^2", 36}};
  for (const auto& [spec, order] : orders) {
    CAPTURE(spec);
    const FiniteGroup g = parse_group_spec(spec);
    CHECK(g.order() == order);
    check_group_axioms(g);
  }
}

TEST_CASE("symmetric group composes right to left") {
  const FiniteGroup s4 = make_symmetric(4);
  for (Element x = 0; x < 24; ++x)
    for (Element y = 0; y < 24; ++y) {
      const Permutation p = lex_unrank(x, 4), q = lex_unrank(y, 4);
      Permutation pq(4);
      for (std::size_t i = 0; i < 4; ++i) pq[i] = p[q[i]];
      CHECK(symmetric_permutation(s4, s4.compose(x, y)) == pq);
    }
}

TEST_CASE("conjugacy classes partition the group") {
  const std::map<std::string, std::size_t> counts{{"s4", 5}, {"dihedral:4", 5}, {"cyclic:6", 6}, {"wreath:3", 9},
                                                  {"psl2:5", 5}, {"psl2:7", 6}, {"sl2:5", 9}};
  for (const auto& [spec, count] : counts) {
    CAPTURE(spec);
    const FiniteGroup g = parse_group_spec(spec);
    const auto classes = conjugacy_classes(g);
    CHECK(classes.size() == count);
    std::size_t total = 0;
    std::set<Element> seen;
    for (const auto& c : classes) {
      total += c.size();
      seen.insert(c.members.begin(), c.members.end());
    }
    CHECK(total == g.order());
    CHECK(seen.size() == g.order());
  }
}

TEST_CASE("involutions and centralizers") {
  const FiniteGroup psl5 = make_psl2(5);
  CHECK(involutions(psl5).size() == 15);
  const FiniteGroup w = make_wreath_s2(3);
  const Element h = wreath_swap(w);
  CHECK(default_involution(w) == h);
  CHECK(w.compose(h, h) == w.identity());
  CHECK(centralizer(w, h).order() * conjugacy_class(w, h).size() == 72);
  CHECK(centralizer(w, h).order() == 12);
  const FiniteGroup d4 = make_dihedral(4);
  CHECK(default_involution(d4) == 4);
  CHECK_THROWS_AS(default_involution(make_cyclic(5)), std::invalid_argument);
}

TEST_CASE("wreath embedding into S_2n is an injective homomorphism") {
  const FiniteGroup w = make_wreath_s2(3);
  std::set<Permutation> images;
  for (Element x = 0; x < w.order(); ++x) {
    images.insert(wreath_to_s2n(w, x));
    for (Element y = 0; y < w.order(); y += 5)
      CHECK(wreath_to_s2n(w, w.compose(x, y)) == compose(wreath_to_s2n(w, x), wreath_to_s2n(w, y)));
  }
  CHECK(images.size() == 72);
}

TEST_CASE("group spec errors") {
  CHECK_THROWS_AS(parse_group_spec("bogus:3"), GroupSpecError);
  CHECK_THROWS_AS(parse_group_spec("psl2:6"), GroupSpecError);
  CHECK_THROWS_AS(parse_group_spec("wreath:9"), GroupSpecError);
  CHECK_THROWS(parse_element(make_symmetric(3), "(1 5)"));
  CHECK(parse_element(make_symmetric(3), "()") == 0);
}
