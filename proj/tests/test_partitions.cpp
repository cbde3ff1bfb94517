#include <doctest.h>

#include "orbitgr/oracles.hpp"
#include "orbitgr/partition.hpp"

using namespace orbitgr;

namespace {
Partition P(const char* s) { return Partition::parse(s); }
}  // namespace

TEST_CASE("partition parsing and normal form") {
  CHECK(P("3^1,2^2") == P("3,2,2"));
  CHECK(Partition({1, 3, 0, 2}).str() == "3,2,1");
  CHECK(P("3,2,2").size() == 7);
  CHECK_THROWS_AS(Partition({-1, 2}), DomainError);
}

TEST_CASE("transpose") {
  CHECK(transpose(P("3,1,1")) == P("3,1,1"));
  CHECK(transpose(P("5")) == P("1,1,1,1,1"));
  CHECK(transpose(P("2,2")) == P("2,2"));
  for (int n = 0; n <= 10; ++n)
    for (const Partition& p : all_partitions(n)) CHECK(transpose(transpose(p)) == p);
}

TEST_CASE("dominance order") {
  CHECK(dominance_leq(P("2,2"), P("3,1")));
  CHECK(dominance_leq(P("3,1"), P("3,1")));
  CHECK_FALSE(dominance_leq(P("3,1"), P("2,2")));
  CHECK_THROWS_AS(dominance_leq(P("3"), P("2,2")), DomainError);
}

TEST_CASE("transpose reverses dominance") {
  for (int n = 1; n <= 9; ++n) {
    const auto all = all_partitions(n);
    for (const Partition& p : all)
      for (const Partition& q : all) CHECK(dominance_leq(p, q) == dominance_leq(transpose(q), transpose(p)));
  }
}

TEST_CASE("type tests") {
  CHECK(is_type(P("3,1,1"), LieType(Family::B, 2)));
  CHECK_FALSE(is_type(P("4,3"), LieType(Family::B, 3)));
  CHECK(is_type(P("2,2"), LieType(Family::C, 2)));
  CHECK_FALSE(is_type(P("3,1"), LieType(Family::C, 2)));
  CHECK(is_type(P("3,1"), LieType(Family::D, 2)));
  CHECK_FALSE(is_type(P("2,1,1"), LieType(Family::D, 2)));
  CHECK_THROWS(is_type(P("3,1"), LieType(Family::B, 2)));
}

TEST_CASE("collapses") {
  CHECK(collapse(P("4,3"), LieType(Family::B, 3)) == P("3,3,1"));
  CHECK(collapse(P("3,1"), LieType(Family::C, 2)) == P("2,2"));
  CHECK(collapse(P("3,1,1"), LieType(Family::B, 2)) == P("3,1,1"));
  CHECK(collapse(P("2,1,1"), LieType(Family::D, 2)) == P("1,1,1,1"));
}

TEST_CASE("collapse agrees with the dominance-maximum oracle") {
  for (int n = 1; n <= 10; ++n)
    for (const Partition& p : all_partitions(n))
      for (Family f : {Family::B, Family::C, Family::D}) {
        if (f == Family::B && n % 2 == 0) continue;
        if (f != Family::B && n % 2 == 1) continue;
        const Partition c = collapse(p, f);
        CHECK(c == oracle::collapse(p, f));
        CHECK(collapse(c, f) == c);
      }
}

TEST_CASE("collapse is monotone") {
  for (int n = 2; n <= 8; n += 2) {
    const auto all = all_partitions(n);
    for (const Partition& p : all)
      for (const Partition& q : all)
        if (dominance_leq(p, q)) CHECK(dominance_leq(collapse(p, Family::C), collapse(q, Family::C)));
  }
}

TEST_CASE("special partitions") {
  CHECK(is_special(P("3,1,1"), LieType(Family::B, 2)));
  CHECK_FALSE(is_special(P("2,2,1"), LieType(Family::B, 2)));
  CHECK(is_special(P("1,1,1,1,1"), LieType(Family::B, 2)));
  CHECK(is_special(P("1,1,1,1"), LieType(Family::C, 2)));
  CHECK(is_special(P("1,1,1,1"), LieType(Family::D, 2)));
  CHECK_THROWS_AS(is_special(P("4,3"), LieType(Family::B, 3)), DomainError);
  for (int n = 2; n <= 12; ++n)
    for (const Partition& p : all_partitions(n)) {
      const LieType t(n % 2 ? Family::B : Family::C, n / 2);
      if (is_type(p, t) && is_special(p, t)) CHECK(has_family_parity(p, t.family));
    }
}

TEST_CASE("single box moves") {
  CHECK(dominance_covers_below(P("2")) == std::vector<Partition>{P("1,1")});
  CHECK(dominance_covers_below(P("3,1")) == std::vector<Partition>{P("2,2"), P("2,1,1")});
  CHECK(dominance_covers_below(P("1,1,1")).empty());
  for (const Partition& p : all_partitions(7))
    for (const Partition& q : dominance_covers_below(p)) CHECK(dominance_leq(q, p));
}

TEST_CASE("partition counts") {
  CHECK(all_partitions(0).size() == 1);
  CHECK(all_partitions(5).size() == 7);
  CHECK(all_partitions(12).size() == 77);
}
