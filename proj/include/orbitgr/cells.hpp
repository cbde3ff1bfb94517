#pragma once

#include <vector>

#include "orbitgr/kl.hpp"
#include "orbitgr/orbits.hpp"

namespace orbitgr {

enum class CellKind { Left, Right, TwoSided };

/// Cells of a Weyl group: cell_of[w] is the cell id of w. Ids are numbered by the
/// smallest element they contain, so the identity always lies in cell 0.
struct CellPartition {
  CellKind kind = CellKind::Left;
  std::vector<int> cell_of;

  int count() const;
  /// Elements of each cell, increasing.
  std::vector<std::vector<ElementId>> cells() const;
};

/// Cells from the mu-graph. For the left preorder, x <=_L y is generated by pairs with
/// mu(x, y) or mu(y, x) nonzero and a left descent of x that is not a left descent of y;
/// right cells use right descents; two-sided cells are the components of both relations.
CellPartition compute_cells(const KLTable& table, CellKind kind);

/// Robinson-Schensted pair of a permutation: row insertion of w(1), ..., w(n) gives
/// the insertion tableau P, the positions of the new boxes give the recording tableau Q.
struct RSKPair {
  std::vector<std::vector<int>> insertion;
  std::vector<std::vector<int>> recording;

  Partition shape() const;
};

RSKPair rsk(const std::vector<int>& word);
/// RSK pair of a type A element; DomainError for other groups.
RSKPair rsk_label(const WeylGroup& g, ElementId w);

/// Orbit attached to a type A two-sided cell: the transpose of the common RSK shape,
/// so the cell of the identity gives the zero orbit and that of w0 the regular orbit.
OrbitLabel cell_orbit_type_A(const WeylGroup& g, const std::vector<ElementId>& cell);

/// The involutions of each left cell (type A: exactly one per cell, the Duflo involution).
std::vector<std::vector<ElementId>> left_cell_involutions(const WeylGroup& g, const CellPartition& left);

}  // namespace orbitgr
