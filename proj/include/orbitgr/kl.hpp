#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "orbitgr/coxeter.hpp"
#include "orbitgr/qmatrix.hpp"

namespace orbitgr {

/// Polynomial in q with integer coefficients; coeffs[k] is the coefficient of q^k,
/// stored without trailing zeros (the zero polynomial is empty).
struct KLPolynomial {
  std::vector<std::int64_t> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  std::int64_t coefficient(int k) const {
    return k >= 0 && k < static_cast<int>(coeffs.size()) ? coeffs[k] : 0;
  }
  std::int64_t at_one() const;
  void trim();
  /// "1+q", "1+2q+q^2", "0".
  std::string str() const;

  friend bool operator==(const KLPolynomial&, const KLPolynomial&) = default;
};

/// Every Kazhdan-Lusztig polynomial P_{x,w} of a finite Coxeter group.
///
/// Built once, w in increasing length, from the recursion: for a right descent s of w,
/// v = ws and c = [xs < x],
///   P_{x,w} = q^{1-c} P_{xs,v} + q^c P_{x,v} - sum_{z: zs < z} mu(z,v) q^{(l(w)-l(z))/2} P_{x,z}.
/// With Execution::Parallel the x-loop of each row runs as an OpenMP loop; rows only
/// read earlier rows, so the table is identical either way and read-only afterwards.
class KLTable {
public:
  explicit KLTable(const WeylGroup& group, Execution execution = Execution::Serial);

  const WeylGroup& group() const { return *group_; }
  /// P_{x,w}; the zero polynomial unless x <= w.
  const KLPolynomial& poly(ElementId x, ElementId w) const;
  /// Coefficient of q^{(l(w)-l(x)-1)/2} in P_{x,w} for x < w, 0 otherwise.
  int mu(ElementId x, ElementId w) const;
  /// All z < w with mu(z, w) != 0.
  const std::vector<std::pair<ElementId, int>>& mu_below(ElementId w) const { return mu_below_[w]; }

  friend bool operator==(const KLTable& a, const KLTable& b) { return a.rows_ == b.rows_; }

private:
  const WeylGroup* group_;
  std::vector<std::vector<KLPolynomial>> rows_;  // rows_[w][x]
  std::vector<std::vector<std::pair<ElementId, int>>> mu_below_;
  KLPolynomial zero_;
};

/// Integer combination of basis classes, keyed by element id (sorted, no zero entries).
struct DecompositionRow {
  ElementId w = 0;
  std::vector<std::pair<ElementId, std::int64_t>> entries;

  std::int64_t coefficient(ElementId u) const;
};

/// Composition multiplicity [Delta(w) : L(x)] = P_{w,x}(1), nonzero only for x >= w.
///
/// Labels follow the block of a regular integral dominant weight: element x stands
/// for the highest weight x . lambda, so Delta(e) is the dominant Verma module and
/// L(e) is finite dimensional.
std::int64_t verma_multiplicity(const KLTable& table, ElementId w, ElementId x);

/// L(w) = sum_{x >= w} (-1)^{l(x)-l(w)} P_{w0 x, w0 w}(1) Delta(x). In A_1: L(e) = Delta(e) - Delta(s).
DecompositionRow inverse_kl_decomposition(const KLTable& table, ElementId w);

/// Coefficients c_{wu} of L(w) = sum_u c_{wu} Delta_P(u) for the parabolic subgroup W_J.
///
/// u runs over elements without left descents in J (the labels of J-dominant weights),
/// and Delta_P(u) = sum_{v in W_J} (-1)^{l(v)} Delta(vu). L(w) lies in the parabolic
/// category iff w has no left descent in J; otherwise DomainError. The read-off is
/// checked against the full ordinary row (throws std::logic_error on mismatch).
DecompositionRow parabolic_verma_decomposition(const KLTable& table, ElementId w, GeneratorMask j);

/// Square matrix M[a][b] = verma_multiplicity(labels[a], labels[b]) as exact rationals.
QMatrix multiplicity_matrix(const KLTable& table, const std::vector<ElementId>& labels);

}  // namespace orbitgr
