#include <doctest.h>

#include "orbitgr/oracles.hpp"
#include "orbitgr/orbits.hpp"

using namespace orbitgr;

namespace {
OrbitLabel O(const char* s) { return OrbitLabel::parse(s); }
Partition P(const char* s) { return Partition::parse(s); }
}  // namespace

TEST_CASE("orbit labels") {
  CHECK(O("B2:3,1,1").str() == "B2:3,1,1");
  CHECK(O("D4:2,2,2,2").tag == VeryEvenTag::I);
  CHECK(O("D4:2,2,2,2:II").tag == VeryEvenTag::II);
  CHECK_THROWS_AS(O("B2:2,2,1,1"), DomainError);
  CHECK(zero_orbit(LieType(Family::C, 3)).partition == P("1,1,1,1,1,1"));
  CHECK(regular_orbit(LieType(Family::D, 3)).partition == P("5,1"));
  CHECK(all_orbits(LieType(Family::A, 3)).size() == 5);
  CHECK(all_orbits(LieType(Family::B, 2)).size() == 4);
  CHECK(all_orbits(LieType(Family::C, 2)).size() == 4);
}

TEST_CASE("orbit dimensions") {
  CHECK(orbit_dimension(O("A2:2,1")) == 4);
  CHECK(orbit_dimension(O("B2:5")) == 8);
  CHECK(orbit_dimension(O("B2:1,1,1,1,1")) == 0);
  CHECK(orbit_dimension(O("C2:2,2")) == 6);
  CHECK(orbit_dimension(O("C2:2,1,1")) == 4);
  // regular orbit: dim g - rank
  for (const LieType t : {LieType(Family::A, 4), LieType(Family::B, 3), LieType(Family::C, 4), LieType(Family::D, 4)}) {
    const int rank = t.family == Family::A ? t.rank + 1 : t.rank;
    CHECK(orbit_dimension(regular_orbit(t)) == t.algebra_dim() - rank);
  }
}

TEST_CASE("orbit dimensions are even and monotone in dominance") {
  for (const LieType t : {LieType(Family::B, 3), LieType(Family::C, 3), LieType(Family::D, 4)}) {
    const auto all = all_orbits(t);
    for (const auto& a : all) {
      CHECK(orbit_dimension(a) % 2 == 0);
      for (const auto& b : all)
        if (a.partition != b.partition && dominance_leq(a.partition, b.partition))
          CHECK(orbit_dimension(a) < orbit_dimension(b));
    }
  }
}

TEST_CASE("Lusztig-Spaltenstein induction") {
  const LieType b2(Family::B, 2);
  CHECK(ls_induce(b2, LeviDescriptor::parse(Family::B, "1|1"), P("1,1,1")).partition == P("3,1,1"));
  CHECK(ls_induce(b2, LeviDescriptor::parse(Family::B, "2|0"), P("1")).partition == P("3,1,1"));
  CHECK(ls_induce(b2, LeviDescriptor::parse(Family::B, "1,1|0"), P("1")).partition == P("5"));
  // induction from the zero orbit of a type A Levi is the Richardson orbit: transpose of the sorted composition
  const LieType a3(Family::A, 3);
  CHECK(ls_induce(a3, LeviDescriptor::parse(Family::A, "2|2"), P("1,1")).partition == P("2,2"));
  CHECK(ls_induce(a3, LeviDescriptor::parse(Family::A, "1,1|2"), P("1,1")).partition == P("3,1"));
}

TEST_CASE("induction preserves codimension") {
  const LieType c3(Family::C, 3);
  for (const char* levi : {"1|2", "2|1", "1,1|1"}) {
    const LeviDescriptor l = LeviDescriptor::parse(Family::C, levi);
    const LieType res(Family::C, l.residual_rank);
    for (const auto& seed : all_orbits(res)) {
      const OrbitLabel ind = ls_induce(c3, l, seed.partition);
      const int levi_codim = l.dimension() - (l.residual_rank ? orbit_dimension(seed) : 0);
      CHECK(c3.algebra_dim() - orbit_dimension(ind) == levi_codim);
    }
  }
}

TEST_CASE("BVS duality") {
  CHECK(bvs_dual(O("B2:1,1,1,1,1")).str() == "C2:4");
  CHECK(bvs_dual(O("B2:3,1,1")).str() == "C2:2,2");
  CHECK(bvs_dual(O("B2:5")).str() == "C2:1,1,1,1");
  CHECK(bvs_dual(O("A3:3,1")).str() == "A3:2,1,1");
  CHECK_THROWS_AS(bvs_dual(O("B2:2,2,1")), DomainError);
}

TEST_CASE("duality is order reversing and an involution on special orbits") {
  for (const LieType t : {LieType(Family::B, 3), LieType(Family::C, 3), LieType(Family::D, 4), LieType(Family::B, 4)}) {
    std::vector<OrbitLabel> special;
    for (const auto& o : all_orbits(t))
      if (is_special(o.partition, t)) special.push_back(o);
    for (const auto& a : special) {
      const OrbitLabel d = bvs_dual(a);
      CHECK(is_special(d.partition, d.type));
      CHECK(bvs_dual(d).partition == a.partition);
      for (const auto& b : special)
        if (dominance_leq(a.partition, b.partition)) CHECK(dominance_leq(bvs_dual(b).partition, d.partition));
    }
  }
}

TEST_CASE("weakly rigid pattern") {
  CHECK(is_weakly_rigid_pattern(O("B4:3,2,2,1,1")));
  CHECK(is_weakly_rigid_pattern(O("C3:2,2,1,1")));
  CHECK_FALSE(is_weakly_rigid_pattern(O("C2:2,2")));
  CHECK(is_weakly_rigid_pattern(O("A2:1,1,1")));
  CHECK_FALSE(is_weakly_rigid_pattern(O("A2:2,1")));
}

TEST_CASE("component groups") {
  CHECK(component_group_order(O("B2:3,1,1"), GroupForm::Full) == 4);
  CHECK(component_group_order(O("B2:3,1,1"), GroupForm::Adjoint) == 2);
  CHECK(component_group_order(O("C2:2,2"), GroupForm::Full) == 2);
  CHECK(component_group_order(O("A3:2,2"), GroupForm::Adjoint) == 1);
  CHECK(component_group_order(O("A3:2,2"), GroupForm::Special) == 2);
  CHECK(component_group_order(O("A3:2,2"), GroupForm::Full) == 1);
  for (const char* zero : {"B2:1,1,1,1,1", "C2:1,1,1,1", "D3:1,1,1,1,1,1", "A3:1,1,1,1"})
    CHECK(component_group_order(O(zero), GroupForm::Adjoint) == 1);
  // the full orthogonal group itself has two components
  CHECK(component_group_order(O("B2:1,1,1,1,1"), GroupForm::Full) == 2);
}

TEST_CASE("component groups agree with the oracle") {
  for (const LieType t : {LieType(Family::B, 3), LieType(Family::C, 3), LieType(Family::D, 4), LieType(Family::A, 5)})
    for (const auto& o : all_orbits(t))
      for (GroupForm form : {GroupForm::Full, GroupForm::Adjoint})
        CHECK(component_group_order(o, form) == oracle::component_group(o, form));
}

TEST_CASE("reductive centralizer") {
  const auto f = reductive_centralizer(O("B2:3,1,1"));
  REQUIRE(f.size() == 2);
  CHECK(f[0] == CentralizerFactor{FactorKind::Orthogonal, 3, 1});
  CHECK(f[1] == CentralizerFactor{FactorKind::Orthogonal, 1, 2});
  CHECK(reductive_centralizer(O("C2:2,2"))[0] == CentralizerFactor{FactorKind::Orthogonal, 2, 2});
}

TEST_CASE("ABV weight and evenness") {
  CHECK(abv_weight(O("B2:1,1,1,1,1")) == Weight::parse("3/2,1/2"));
  CHECK(is_even_orbit(O("C2:4")));
  CHECK_FALSE(is_even_orbit(O("A2:2,1")));
  CHECK(is_even_orbit(O("A2:3")));
  CHECK(h_eigenvalues(P("3,2")) == std::vector<int>{2, 1, 0, -1, -2});
}

TEST_CASE("Richardson codimension") {
  CHECK(richardson_min_codim({2, 1}) == 2);
  CHECK(richardson_min_codim({1, 1}) == 1);
  CHECK_FALSE(richardson_min_codim({4}).has_value());
}
