#include <doctest.h>

#include <algorithm>
#include <set>

#include "orbitgr/cells.hpp"

using namespace orbitgr;

namespace {

std::vector<std::size_t> cell_sizes(const CellPartition& c) {
  std::vector<std::size_t> out;
  for (const auto& cell : c.cells()) out.push_back(cell.size());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("RSK") {
  const RSKPair p = rsk({3, 1, 2});
  CHECK(p.insertion == std::vector<std::vector<int>>{{1, 2}, {3}});
  CHECK(p.recording == std::vector<std::vector<int>>{{1, 3}, {2}});
  CHECK(p.shape() == Partition::parse("2,1"));
  CHECK(rsk({1, 2, 3}).shape() == Partition::parse("3"));
  CHECK_THROWS_AS(rsk_label(WeylGroup::parse("B2"), 0), DomainError);
}

TEST_CASE("cells of A2") {
  const WeylGroup g = WeylGroup::parse("A2");
  const KLTable t(g);
  CHECK(cell_sizes(compute_cells(t, CellKind::Left)) == std::vector<std::size_t>{1, 1, 2, 2});
  CHECK(cell_sizes(compute_cells(t, CellKind::TwoSided)) == std::vector<std::size_t>{1, 1, 4});
  CHECK(compute_cells(t, CellKind::Left).cell_of[0] == 0);
}

TEST_CASE("type A cells match Robinson-Schensted") {
  for (const char* name : {"A3", "A4"}) {
    const WeylGroup g = WeylGroup::parse(name);
    const KLTable t(g);
    const CellPartition left = compute_cells(t, CellKind::Left);
    const CellPartition right = compute_cells(t, CellKind::Right);
    const CellPartition two = compute_cells(t, CellKind::TwoSided);
    for (ElementId x = 0; x < g.size(); ++x)
      for (ElementId y = 0; y < g.size(); ++y) {
        const RSKPair a = rsk_label(g, x), b = rsk_label(g, y);
        CHECK((left.cell_of[x] == left.cell_of[y]) == (a.recording == b.recording));
        CHECK((right.cell_of[x] == right.cell_of[y]) == (a.insertion == b.insertion));
        CHECK((two.cell_of[x] == two.cell_of[y]) == (a.shape() == b.shape()));
      }
  }
}

TEST_CASE("left and right cells are exchanged by inversion") {
  for (const char* name : {"B3", "D4"}) {
    const WeylGroup g = WeylGroup::parse(name);
    const KLTable t(g);
    const CellPartition left = compute_cells(t, CellKind::Left);
    const CellPartition right = compute_cells(t, CellKind::Right);
    for (ElementId x = 0; x < g.size(); ++x)
      for (ElementId y = 0; y < g.size(); ++y)
        CHECK((left.cell_of[x] == left.cell_of[y]) == (right.cell_of[g.inverse(x)] == right.cell_of[g.inverse(y)]));
  }
}

TEST_CASE("cell counts") {
  const WeylGroup b2 = WeylGroup::parse("B2");
  CHECK(compute_cells(KLTable(b2), CellKind::TwoSided).count() == 3);
  CHECK(compute_cells(KLTable(b2), CellKind::Left).count() == 4);
  const WeylGroup b3 = WeylGroup::parse("B3");
  const KLTable t3(b3);
  const CellPartition left = compute_cells(t3, CellKind::Left);
  const CellPartition right = compute_cells(t3, CellKind::Right);
  const CellPartition two = compute_cells(t3, CellKind::TwoSided);
  CHECK(left.count() == right.count());
  for (ElementId x = 0; x < b3.size(); ++x)
    for (ElementId y = 0; y < b3.size(); ++y) {
      if (left.cell_of[x] == left.cell_of[y]) CHECK(two.cell_of[x] == two.cell_of[y]);
      if (right.cell_of[x] == right.cell_of[y]) CHECK(two.cell_of[x] == two.cell_of[y]);
    }
}

TEST_CASE("two-sided cells of A3 and their orbits") {
  const WeylGroup g = WeylGroup::parse("A3");
  const KLTable t(g);
  const auto cells = compute_cells(t, CellKind::TwoSided).cells();
  CHECK(cells.size() == 5);
  std::set<std::string> orbits;
  for (const auto& c : cells) orbits.insert(cell_orbit_type_A(g, c).str());
  CHECK(orbits == std::set<std::string>{"A3:1,1,1,1", "A3:2,1,1", "A3:2,2", "A3:3,1", "A3:4"});
  CHECK(cell_orbit_type_A(g, cells[0]).is_zero());
}

TEST_CASE("one involution per left cell in type A") {
  const WeylGroup g = WeylGroup::parse("A4");
  const KLTable t(g);
  const auto inv = left_cell_involutions(g, compute_cells(t, CellKind::Left));
  CHECK(inv.size() == 26);
  for (const auto& v : inv) CHECK(v.size() == 1);
}

TEST_CASE("left cells of B2 can hold two involutions") {
  const WeylGroup g = WeylGroup::parse("B2");
  const KLTable t(g);
  const auto inv = left_cell_involutions(g, compute_cells(t, CellKind::Left));
  std::vector<std::size_t> counts;
  for (const auto& v : inv) counts.push_back(v.size());
  std::sort(counts.begin(), counts.end());
  CHECK(counts == std::vector<std::size_t>{1, 1, 2, 2});
}
