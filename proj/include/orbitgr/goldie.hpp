#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "orbitgr/cells.hpp"
#include "orbitgr/characters.hpp"

namespace orbitgr {

/// Numeric data of a triple (x, y, V): dimensions d_x, d_y of the irreducibles over
/// the two annihilators, the orders of Abar, A_x, A_y, A_(x,y), and dim V.
struct TripleData {
  std::int64_t d_x = 1, d_y = 1;
  std::int64_t abar_order = 1, a_x_order = 1, a_y_order = 1, a_xy_order = 1;
  std::int64_t dim_v = 1;

  /// DomainError unless all entries are positive, A_(x,y) divides A_x and A_y, and
  /// A_x, A_y divide Abar.
  void validate() const;
  /// The triple (x, x, triv) of a Duflo involution.
  static TripleData duflo(std::int64_t d, std::int64_t abar_order, std::int64_t a_x_order);
};

/// z = dim V |A_y| / |A_(x,y)|; DomainError if not an integer.
std::int64_t scale_factor(const TripleData& t);
/// d_x d_y |Abar| dim V / |A_(x,y)|; DomainError if not an integer.
std::int64_t bimodule_multiplicity(const TripleData& t);
/// (pr_x / pr_y) (|A_y| / |A_(x,y)|) dim V. DomainError unless pr_x, pr_y >= 1.
Rational scale_factor_via_premet(const Rational& pr_x, const Rational& pr_y, const TripleData& t);

/// Both sides of m_{x,y,V} / Goldie_{x,y,V} = m_{y,y,triv} / Goldie_{y,y,triv}, where
/// Goldie_{x,y,V} = z Goldie_x, Goldie_w = d_w / pr_w and z is the Premet scale factor.
std::pair<Rational, Rational> proportion_sides(const Rational& pr_x, const Rational& pr_y, const TripleData& t);

/// Premet ratios pr = d / Goldie rank, stored per left cell so that every element of
/// a cell reads the same value. Unset cells default to 1.
class PremetByCell {
public:
  explicit PremetByCell(CellPartition left_cells);
  void set_cell(int cell, const Rational& pr);
  /// The ratio of the left cell containing w.
  const Rational& at(ElementId w) const;
  const CellPartition& cells() const { return cells_; }

private:
  CellPartition cells_;
  std::vector<Rational> pr_;
};

struct GoldieReport {
  ElementId w = 0;
  std::int64_t dimension = 0;
  /// dimension / pr; equal to the dimension when the dimension theorem applies.
  Rational goldie_rank;
  Rational pr = 1;
  bool theorem_applies = true;
  std::int64_t scale_factor = 1;
  Rational premet_scale_factor;
  std::int64_t multiplicity = 1;
  std::string note;
};

/// Dimension of the finite-dimensional simple L(w rho0) from the character pipeline,
/// with the Goldie rank, scale factor and multiplicity of the triple. The triple's
/// d_x and d_y are replaced by the computed dimension. DomainError for an infinite
/// character. pr != 1 marks the dimension theorem as not applicable.
GoldieReport goldie_report(const CharacterPipeline& pipeline, ElementId w, const TripleData& t,
                           const GroupFactors& factors = {}, const Rational& pr = 1);

}  // namespace orbitgr
