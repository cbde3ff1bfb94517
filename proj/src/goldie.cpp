#include "orbitgr/goldie.hpp"

namespace orbitgr {

namespace {

std::int64_t exact(const Rational& r, const char* what) {
  if (!r.is_integer()) throw DomainError(std::string(what) + " " + r.str() + " is not an integer");
  return r.num();
}

}  // namespace

void TripleData::validate() const {
  for (std::int64_t v : {d_x, d_y, abar_order, a_x_order, a_y_order, a_xy_order, dim_v})
    if (v < 1) throw DomainError("triple data entries must be positive");
  if (a_x_order % a_xy_order != 0 || a_y_order % a_xy_order != 0)
    throw DomainError("|A_(x,y)| must divide |A_x| and |A_y|");
  if (abar_order % a_x_order != 0 || abar_order % a_y_order != 0)
    throw DomainError("|A_x| and |A_y| must divide |Abar|");
}

TripleData TripleData::duflo(std::int64_t d, std::int64_t abar_order, std::int64_t a_x_order) {
  TripleData t;
  t.d_x = t.d_y = d;
  t.abar_order = abar_order;
  t.a_x_order = t.a_y_order = t.a_xy_order = a_x_order;
  t.dim_v = 1;
  return t;
}

std::int64_t scale_factor(const TripleData& t) {
  t.validate();
  return exact(Rational(t.dim_v) * Rational(t.a_y_order, t.a_xy_order), "scale factor");
}

std::int64_t bimodule_multiplicity(const TripleData& t) {
  t.validate();
  return exact(Rational(t.d_x) * t.d_y * t.dim_v * Rational(t.abar_order, t.a_xy_order), "multiplicity");
}

Rational scale_factor_via_premet(const Rational& pr_x, const Rational& pr_y, const TripleData& t) {
  t.validate();
  if (pr_x < 1 || pr_y < 1) throw DomainError("Premet ratios must be at least 1");
  return pr_x / pr_y * Rational(t.a_y_order, t.a_xy_order) * t.dim_v;
}

std::pair<Rational, Rational> proportion_sides(const Rational& pr_x, const Rational& pr_y, const TripleData& t) {
  const Rational z = scale_factor_via_premet(pr_x, pr_y, t);
  const Rational goldie_x = Rational(t.d_x) / pr_x;
  const Rational goldie_y = Rational(t.d_y) / pr_y;
  const Rational lhs = Rational(bimodule_multiplicity(t)) / (z * goldie_x);
  const TripleData yy = TripleData::duflo(t.d_y, t.abar_order, t.a_y_order);
  const Rational rhs = Rational(bimodule_multiplicity(yy)) / goldie_y;
  return {lhs, rhs};
}

PremetByCell::PremetByCell(CellPartition left_cells) : cells_(std::move(left_cells)) {
  if (cells_.kind != CellKind::Left) throw DomainError("Premet ratios are keyed by left cells");
  pr_.assign(cells_.count(), Rational(1));
}

void PremetByCell::set_cell(int cell, const Rational& pr) {
  if (cell < 0 || cell >= static_cast<int>(pr_.size())) throw DomainError("cell id out of range");
  if (pr < 1) throw DomainError("Premet ratios must be at least 1");
  pr_[cell] = pr;
}

const Rational& PremetByCell::at(ElementId w) const {
  if (w < 0 || w >= static_cast<int>(cells_.cell_of.size())) throw DomainError("element id out of range");
  return pr_[cells_.cell_of[w]];
}

GoldieReport goldie_report(const CharacterPipeline& pipeline, ElementId w, const TripleData& t,
                           const GroupFactors& factors, const Rational& pr) {
  if (pr < 1) throw DomainError("Premet ratio must be at least 1");
  const auto dim = finite_dimension(pipeline.simple_character(w, factors));
  if (!dim)
    throw DomainError("the simple module L(" + pipeline.group().str(w) + ") has an infinite character");
  if (*dim == 0) throw DomainError("the character of L(" + pipeline.group().str(w) + ") vanishes");
  GoldieReport r;
  r.w = w;
  r.dimension = *dim;
  r.pr = pr;
  r.goldie_rank = Rational(*dim) / pr;
  r.theorem_applies = pr == Rational(1);
  if (!r.theorem_applies)
    r.note = "pr != 1: the Goldie rank need not equal the dimension (type C counterexample regime)";
  TripleData data = t;
  data.d_x = data.d_y = *dim;
  r.scale_factor = scale_factor(data);
  r.premet_scale_factor = scale_factor_via_premet(pr, pr, data);
  r.multiplicity = bimodule_multiplicity(data);
  return r;
}

}  // namespace orbitgr
