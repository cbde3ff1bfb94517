#include <doctest.h>

#include <climits>

#include "orbitgr/qmatrix.hpp"
#include "orbitgr/weight.hpp"

using namespace orbitgr;

TEST_CASE("rational arithmetic is exact and normalized") {
  const Rational a(6, -4);
  CHECK(a.num() == -3);
  CHECK(a.den() == 2);
  CHECK(a + Rational(3, 2) == Rational(0));
  CHECK(Rational(1, 3) * Rational(3, 5) == Rational(1, 5));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(Rational(-7, 3).str() == "-7/3");
  CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("rational overflow throws instead of wrapping") {
  const Rational big(INT64_MAX);
  CHECK_THROWS_AS(big + Rational(1), std::overflow_error);
  CHECK_THROWS_AS(big * Rational(2), std::overflow_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("matrix rank and inverse") {
  QMatrix m(3, 3);
  int v = 1;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = v++;
  CHECK(m.rank() == 2);
  CHECK(m.rank(Execution::Parallel) == 2);
  m(2, 2) = 10;
  CHECK(m.rank() == 3);
  CHECK(m * m.inverse() == QMatrix::identity(3));
  CHECK(QMatrix(2, 5).rank() == 0);
}

TEST_CASE("serial and parallel rank agree on structured matrices") {
  for (int n = 1; n <= 12; ++n) {
    QMatrix m(n, n + 2);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n + 2; ++j) m(i, j) = Rational((i * 7 + j * 3) % 5 - 2, 1 + (i + j) % 3);
    CHECK(m.rank(Execution::Serial) == m.rank(Execution::Parallel));
  }
}

TEST_CASE("commutator") {
  const QMatrix e = QMatrix::unit(2, 0, 1), f = QMatrix::unit(2, 1, 0);
  QMatrix h(2, 2);
  h(0, 0) = 1;
  h(1, 1) = -1;
  CHECK(commutator(e, f) == h);
  CHECK(commutator(h, e) == e.scaled(2));
}

TEST_CASE("weights in half-integer coordinates") {
  const Weight w = Weight::parse("3/2,1/2");
  CHECK(w.doubled() == std::vector<int>{3, 1});
  CHECK(w.is_half_odd());
  CHECK_FALSE(w.is_integral());
  CHECK((w + w).is_integral());
  CHECK(w.str() == "(3/2,1/2)");
}

TEST_CASE("root systems") {
  const RootSystem b2(LieType(Family::B, 2));
  CHECK(b2.positive_roots().size() == 4);
  CHECK(b2.rho() == Weight::parse("3/2,1/2"));
  const RootSystem c3(LieType(Family::C, 3));
  CHECK(c3.positive_roots().size() == 9);
  const RootSystem d4(LieType(Family::D, 4));
  CHECK(d4.positive_roots().size() == 12);
  CHECK(d4.rho() == Weight::integral({3, 2, 1, 0}));
  const RootSystem a2(LieType(Family::A, 2));
  CHECK(a2.coords() == 3);
  CHECK(RootSystem::coroot_pairing(a2.rho(), a2.simple_roots()[0]) == Rational(1));
  CHECK(b2.in_weight_lattice(Weight::parse("1/2,1/2")));
  CHECK_FALSE(RootSystem(LieType(Family::C, 2)).in_weight_lattice(Weight::parse("1/2,1/2")));
}
