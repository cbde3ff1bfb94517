#include <doctest.h>

#include <algorithm>

#include "orbitgr/matrixlie.hpp"
#include "orbitgr/oracles.hpp"

using namespace orbitgr;

namespace {
OrbitLabel O(const char* s) { return OrbitLabel::parse(s); }
}  // namespace

TEST_CASE("matrix algebras have the right dimension") {
  for (const char* t : {"A2", "B2", "C3", "D4", "B3"}) {
    const LieType type = LieType::parse(t);
    const MatrixAlgebra g(type);
    CHECK(g.dimension() == type.algebra_dim());
    for (const QMatrix& x : g.basis()) CHECK(g.contains(x));
  }
}

TEST_CASE("realized triples") {
  const SL2Triple t = realize_nilpotent(O("B2:3,1,1"));
  CHECK(commutator(t.h, t.e) == t.e.scaled(2));
  CHECK(commutator(t.h, t.f) == t.f.scaled(-2));
  CHECK(commutator(t.e, t.f) == t.h);
  CHECK(t.e.rank() == 2);
  CHECK((t.e * t.e).rank() == 1);
  CHECK(t.h.is_diagonal());
}

TEST_CASE("ad(h) eigenvalues of the regular sl2 triple") {
  CHECK(ad_theta_eigenvalues(O("C1:2")) == std::vector<int>{2, 0, -2});
  CHECK(ad_theta_eigenvalues(O("A1:2")) == std::vector<int>{2, 0, 0, -2});
}

TEST_CASE("centralizer dimensions") {
  CHECK(centralizer_dimension(O("A2:2,1")) == 5);
  for (const LieType t : {LieType(Family::A, 3), LieType(Family::B, 3), LieType(Family::C, 3), LieType(Family::D, 4)})
    for (const auto& o : all_orbits(t)) {
      const int z = centralizer_dimension(o);
      CHECK(z == t.algebra_dim() - orbit_dimension(o));
      CHECK(z == centralizer_dimension(o, Execution::Parallel));
      if (t.family == Family::A) CHECK(z == oracle::centralizer_dimension_gl(o));
    }
}

TEST_CASE("even orbits have even ad(h) eigenvalues") {
  for (const auto& o : all_orbits(LieType(Family::C, 3))) {
    const auto ev = ad_theta_eigenvalues(o);
    const bool all_even = std::all_of(ev.begin(), ev.end(), [](int v) { return v % 2 == 0; });
    CHECK(all_even == is_even_orbit(o));
  }
}

TEST_CASE("rank bound") {
  CHECK(matrix_rank_bound() >= 1);
  CHECK_THROWS_AS(realize_nilpotent(O("A9:10")), DomainError);
}

TEST_CASE("centralizer grading of a gl2 x gl1 Levi") {
  const LieType a2(Family::A, 2);
  const LeviDescriptor levi = LeviDescriptor::parse(Family::A, "2|1");
  const CentralizerGrading reg = centralizer_grading(a2, LeviNilpotent::regular(levi));
  CHECK(reg.total_dimension() == 5);
  CHECK(reg.negative_weights().size() == 1);
  const CentralizerGrading zero = centralizer_grading(a2, LeviNilpotent::zero(levi));
  CHECK(zero.total_dimension() == 9);
  CHECK(zero.negative_weights().size() == 2);
  CHECK(LeviNilpotent::regular(levi).ambient_partition() == Partition::parse("2,1"));
}

TEST_CASE("grading dimensions match the centralizer") {
  const LieType c3(Family::C, 3);
  for (const char* l : {"1|2", "2|1", "1,1|1", "3|0"}) {
    const LeviDescriptor levi = LeviDescriptor::parse(Family::C, l);
    for (const LeviNilpotent& n : {LeviNilpotent::zero(levi), LeviNilpotent::regular(levi)}) {
      const CentralizerGrading g = centralizer_grading(c3, n);
      CHECK(g.total_dimension() == centralizer_dimension(OrbitLabel(c3, n.ambient_partition())));
      int positive = 0, negative = 0;
      for (const auto& e : g.entries) {
        if (e.theta_eigenvalue > 0) positive += e.multiplicity;
        if (e.theta_eigenvalue < 0) negative += e.multiplicity;
      }
      CHECK(positive == negative);
    }
  }
}
