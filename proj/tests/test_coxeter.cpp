#include <doctest.h>

#include "orbitgr/coxeter.hpp"
#include "orbitgr/oracles.hpp"

using namespace orbitgr;

TEST_CASE("group orders") {
  for (const char* name : {"A1", "A2", "A3", "A4", "B2", "B3", "C3", "D3", "D4"}) {
    const WeylGroup g = WeylGroup::parse(name);
    CHECK(g.size() == weyl_group_order(LieType::parse(name)));
  }
  CHECK(WeylGroup::dihedral(6).size() == 12);
  CHECK(WeylGroup::parse("I2(5)").size() == 10);
}

TEST_CASE("lengths") {
  const WeylGroup b2 = WeylGroup::parse("B2");
  CHECK(b2.length(b2.parse_element("s1s2s1")) == 3);
  CHECK(b2.length(b2.longest()) == 4);
  CHECK(b2.length(b2.identity()) == 0);
  for (const char* name : {"A3", "B3", "D4"}) {
    const WeylGroup g = WeylGroup::parse(name);
    for (ElementId w = 0; w < g.size(); ++w) {
      CHECK(g.inversion_length(w) == g.length(w));
      CHECK(static_cast<int>(g.reduced_word(w).size()) == g.length(w));
      CHECK(g.from_word(g.reduced_word(w)) == w);
      CHECK(g.length(g.inverse(w)) == g.length(w));
    }
  }
  CHECK(WeylGroup::parse("D4").length(WeylGroup::parse("D4").longest()) == 12);
}

TEST_CASE("element parsing and printing") {
  const WeylGroup a2 = WeylGroup::parse("A2");
  const ElementId w = a2.parse_element("s1s2");
  CHECK(a2.parse_element("1.2") == w);
  CHECK(a2.parse_element(a2.str(w)) == w);
  CHECK(a2.parse_element("w0") == a2.longest());
  CHECK(a2.word_str(a2.identity()) == "e");
  CHECK_THROWS(a2.parse_element("s1s1s4"));
}

TEST_CASE("Bruhat order") {
  const WeylGroup a2 = WeylGroup::parse("A2");
  CHECK(a2.bruhat_leq(a2.parse_element("s1"), a2.parse_element("s2s1")));
  CHECK_FALSE(a2.bruhat_leq(a2.parse_element("s1"), a2.parse_element("s2")));
  CHECK(a2.bruhat_leq(a2.identity(), a2.longest()));
}

TEST_CASE("Bruhat order agrees with the reflection closure") {
  for (const char* name : {"A3", "B3", "D4", "I2(5)"}) {
    const WeylGroup g = WeylGroup::parse(name);
    const auto leq = oracle::bruhat_reflection_closure(g);
    int mismatches = 0;
    for (ElementId x = 0; x < g.size(); ++x)
      for (ElementId w = 0; w < g.size(); ++w) mismatches += g.bruhat_leq(x, w) != static_cast<bool>(leq[x][w]);
    CHECK(mismatches == 0);
  }
}

TEST_CASE("descents and cosets") {
  const WeylGroup a2 = WeylGroup::parse("A2");
  CHECK(a2.coset_min_reps(mask_of({1})).size() == 3);
  CHECK(a2.coset_min_reps(mask_of({1}), Side::Left).size() == 3);
  const WeylGroup b3 = WeylGroup::parse("B3");
  for (GeneratorMask j = 0; j <= b3.all_generators(); ++j) {
    const auto reps = b3.coset_min_reps(j);
    const auto sub = b3.parabolic_subgroup(j);
    CHECK(reps.size() * sub.size() == static_cast<std::size_t>(b3.size()));
    for (ElementId u : reps)
      for (ElementId v : sub) CHECK(b3.length(b3.multiply(u, v)) == b3.length(u) + b3.length(v));
  }
  CHECK(parse_mask("{s1,s3}", 3) == mask_of({1, 3}));
  CHECK(parse_mask("", 3) == 0);
}

TEST_CASE("longest element has every descent") {
  for (const char* name : {"A4", "C3", "D4", "I2(6)"}) {
    const WeylGroup g = WeylGroup::parse(name);
    CHECK(g.descents_left(g.longest()) == g.all_generators());
    CHECK(g.descents_right(g.longest()) == g.all_generators());
    CHECK(g.inverse(g.longest()) == g.longest());
  }
}
