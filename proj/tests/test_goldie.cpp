#include <doctest.h>

#include "orbitgr/goldie.hpp"

using namespace orbitgr;

namespace {

TripleData triple(std::int64_t abar, std::int64_t ax, std::int64_t ay, std::int64_t axy, std::int64_t dim_v = 1) {
  TripleData t;
  t.abar_order = abar;
  t.a_x_order = ax;
  t.a_y_order = ay;
  t.a_xy_order = axy;
  t.dim_v = dim_v;
  return t;
}

}  // namespace

TEST_CASE("scale factors") {
  CHECK(scale_factor(TripleData{}) == 1);
  CHECK(scale_factor(triple(4, 4, 4, 2)) == 2);
  CHECK(scale_factor(TripleData::duflo(3, 4, 2)) == 1);
  CHECK(scale_factor(triple(4, 2, 4, 2, 3)) == 6);
  CHECK_THROWS_AS(scale_factor(triple(4, 4, 4, 3)), DomainError);
  CHECK_THROWS_AS(scale_factor(triple(2, 4, 4, 2)), DomainError);
}

TEST_CASE("scale factor is one exactly for trivial V and A_y = A_(x,y)") {
  for (std::int64_t dv : {1, 2})
    for (std::int64_t ay : {1, 2, 4})
      for (std::int64_t axy : {1, 2}) {
        if (ay % axy) continue;
        const std::int64_t z = scale_factor(triple(4, 4, ay, axy, dv));
        CHECK(z >= 1);
        CHECK((z == 1) == (dv == 1 && ay == axy));
      }
}

TEST_CASE("bimodule multiplicities") {
  CHECK(bimodule_multiplicity(triple(2, 2, 2, 2)) == 1);
  CHECK(bimodule_multiplicity(triple(2, 1, 1, 1)) == 2);
  TripleData a;
  a.d_x = 3;
  a.d_y = 5;
  CHECK(bimodule_multiplicity(a) == 15);
}

TEST_CASE("Premet scale factors") {
  const TripleData t = triple(4, 4, 4, 2, 3);
  CHECK(scale_factor_via_premet(1, 1, t) == Rational(scale_factor(t)));
  CHECK(scale_factor_via_premet(2, 1, TripleData{}) == Rational(2));
  for (const Rational& px : {Rational(1), Rational(3, 2), Rational(2)})
    for (const Rational& py : {Rational(1), Rational(5, 4)})
      CHECK(scale_factor_via_premet(px, py, t) * py / px == Rational(scale_factor(t)));
  CHECK_THROWS_AS(scale_factor_via_premet(Rational(1, 2), 1, t), DomainError);
}

TEST_CASE("proportion identity") {
  for (const Rational& px : {Rational(1), Rational(2), Rational(7, 3)})
    for (const Rational& py : {Rational(1), Rational(3, 2)})
      for (const TripleData& base : {triple(4, 4, 4, 2, 3), triple(2, 1, 2, 1), TripleData{}}) {
        TripleData t = base;
        t.d_x = 6;
        t.d_y = 10;
        const auto [lhs, rhs] = proportion_sides(px, py, t);
        CHECK(lhs == rhs);
      }
}

TEST_CASE("Premet ratios are constant on left cells") {
  const WeylGroup g = WeylGroup::parse("B2");
  const KLTable t(g);
  PremetByCell pr(compute_cells(t, CellKind::Left));
  pr.set_cell(1, Rational(2));
  for (ElementId w = 0; w < g.size(); ++w)
    CHECK(pr.at(w) == (pr.cells().cell_of[w] == 1 ? Rational(2) : Rational(1)));
  CHECK_THROWS_AS(pr.set_cell(1, Rational(1, 2)), DomainError);
  CHECK_THROWS_AS(PremetByCell(compute_cells(t, CellKind::Right)), DomainError);
}

TEST_CASE("reports") {
  const CharacterPipeline sl2(LieType(Family::A, 1), LeviNilpotent::zero(LeviDescriptor::parse(Family::A, "1|1")));
  const GoldieReport r = goldie_report(sl2, 0, TripleData{});
  CHECK(r.dimension == 1);
  CHECK(r.goldie_rank == Rational(1));
  CHECK(r.scale_factor == 1);
  CHECK(r.theorem_applies);
  CHECK_THROWS_AS(goldie_report(sl2, 1, TripleData{}), DomainError);

  const CharacterPipeline b2(LieType(Family::B, 2), LeviNilpotent::zero(LeviDescriptor::parse(Family::B, "1,1|0")),
                             Weight::parse("5/2,1/2"));
  const GoldieReport v = goldie_report(b2, 0, triple(2, 2, 2, 1));
  CHECK(v.dimension == weyl_dimension(b2.roots().positive_roots(), b2.rho0()));
  CHECK(v.multiplicity == 2 * v.dimension * v.dimension);
  CHECK(v.scale_factor == 2);

  const GoldieReport flagged = goldie_report(b2, 0, TripleData{}, {}, Rational(2));
  CHECK_FALSE(flagged.theorem_applies);
  CHECK_FALSE(flagged.note.empty());
  CHECK(flagged.goldie_rank == Rational(5, 2));
}
