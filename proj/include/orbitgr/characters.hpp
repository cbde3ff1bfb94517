#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "orbitgr/kl.hpp"
#include "orbitgr/matrixlie.hpp"
#include "orbitgr/weight.hpp"

namespace orbitgr {

/// A character N / prod_i (1 - e^{mu_i}) with a finite numerator N = sum c_nu e^nu.
/// Weights are vectors on the centre t of the Levi; every mu_i is strictly negative on theta.
class FormalCharacter {
public:
  FormalCharacter() = default;
  /// Throws DomainError when some mu_i has <theta, mu_i> >= 0.
  FormalCharacter(std::vector<int> theta, std::vector<Weight> denominators);

  const std::vector<int>& theta() const { return theta_; }
  const std::vector<Weight>& denominators() const { return denominators_; }
  const std::map<Weight, Rational>& numerator() const { return numerator_; }

  void add_term(const Weight& nu, const Rational& c);
  FormalCharacter scaled(const Rational& c) const;
  /// Sum of two characters with the same theta and denominator multiset.
  FormalCharacter operator+(const FormalCharacter& o) const;
  FormalCharacter operator-(const FormalCharacter& o) const;
  bool numerator_is_zero() const { return numerator_.empty(); }

  /// Twice the pairing <theta, nu>.
  int pairing_doubled(const Weight& nu) const;
  /// Largest <theta, .> over the numerator support (doubled); nullopt for zero.
  std::optional<int> top_doubled() const;
  /// Series coefficients of every weight with <theta, nu> >= top - depth,
  /// by expanding each (1 - e^mu)^{-1} as a geometric series.
  std::map<Weight, Rational> expand(int depth) const;
  /// Same, relative to an explicit top pairing (doubled), for comparing characters.
  std::map<Weight, Rational> expand_from(int top_doubled, int depth) const;
  /// Graded dimensions: entry d sums the coefficients at depth d, d = 0..depth.
  std::vector<Rational> graded_dimensions(int depth) const;

  /// Numerator multiplied by every denominator factor (1 - e^mu) of `factors`.
  std::map<Weight, Rational> cleared(const std::vector<Weight>& factors) const;

private:
  std::vector<int> theta_;
  std::vector<Weight> denominators_;
  std::map<Weight, Rational> numerator_;
};

/// Exact equality N_a prod(1 - e^{mu_b}) = N_b prod(1 - e^{mu_a}).
bool same_character(const FormalCharacter& a, const FormalCharacter& b);

/// e^{mu0} dim0 prod_i (1 - e^{mu_i})^{-1} over the theta-negative part of the grading.
FormalCharacter verma_character(const Weight& mu0, std::int64_t dim0, const CentralizerGrading& grading);
/// Same with the denominator weights given directly.
FormalCharacter verma_character(const Weight& mu0, std::int64_t dim0, const std::vector<int>& theta,
                                const std::vector<Weight>& denominators);

/// Weyl dimension formula prod <lambda, a^vee> / <rho_L, a^vee> over the given positive
/// roots of a Levi factor (rho_L is half their sum). DomainError unless every
/// <lambda, a^vee> is positive; an empty root list gives 1.
std::int64_t weyl_dimension(const std::vector<Weight>& levi_positive_roots, const Weight& lambda);

/// Exact quotient of the character when it is a finite sum, by successive division of
/// the numerator by each (1 - e^{mu_i}); nullopt when some division leaves a remainder.
std::optional<std::map<Weight, Rational>> exact_quotient(const FormalCharacter& ch);
/// Dimension of a finite character (sum of the quotient's coefficients), or nullopt
/// for an infinite one. DomainError when the dimension is not an integer.
std::optional<std::int64_t> finite_dimension(const FormalCharacter& ch);

/// Group-theoretic prefactor data |H_0|, |Abar_0|, dim V.
struct GroupFactors {
  std::int64_t h0_order = 1;
  std::int64_t abar0_order = 1;
  std::int64_t dim_v = 1;
};

/// The character recipe for one choice of (g, g_0, e) with e zero or regular on each
/// block of a block Levi g_0, and a regular integral weight rho0 dominant for g.
///
/// J is the set of simple roots of g_0(0), the blocks of g_0 on which e vanishes.
/// Labels follow the kl module: w stands for L(w rho0) with highest weight w rho0 - rho.
class CharacterPipeline {
public:
  /// rho0 defaults to rho. Throws DomainError if e is neither zero nor regular on a
  /// block, or rho0 is not regular dominant integral.
  CharacterPipeline(const LieType& ambient, const LeviNilpotent& nilpotent,
                    std::optional<Weight> rho0 = std::nullopt, Execution execution = Execution::Serial);

  const LieType& ambient() const { return ambient_; }
  const RootSystem& roots() const { return roots_; }
  const WeylGroup& group() const { return *group_; }
  const KLTable& table() const { return *table_; }
  const CentralizerGrading& grading() const { return grading_; }
  const Weight& rho0() const { return rho0_; }
  GeneratorMask j() const { return j_; }
  /// Positive roots of g_0(0).
  const std::vector<Weight>& levi_roots() const { return levi_roots_; }
  /// Elements u with u rho0 strictly dominant for g_0(0) (no left descent in J).
  std::vector<ElementId> labels() const;
  /// Whether L(w rho0) lies in the parabolic category.
  bool is_label(ElementId w) const { return (group_->descents_left(w) & j_) == 0; }

  /// w lambda in epsilon coordinates.
  Weight act(ElementId w, const Weight& lambda) const;
  /// Restriction of an epsilon-coordinate weight to t (block sums).
  Weight restrict(const Weight& nu) const;

  /// e^{lambda - rho} dim L_00(lambda) prod (1 - e^{mu_i})^{-1}, restricted to t.
  FormalCharacter parabolic_verma_image(const Weight& lambda) const;
  /// (|H_0| / (|Abar_0| dim V)) sum_u c_{wu} e^{u rho0 - rho} dim L_00(u rho0) prod (1 - e^{mu_i})^{-1}.
  /// Expands to check_depth and throws DomainError on a negative or non-integral coefficient.
  FormalCharacter simple_character(ElementId w, const GroupFactors& factors = {}, int check_depth = 8) const;

private:
  LieType ambient_;
  LeviNilpotent nilpotent_;
  RootSystem roots_;
  std::shared_ptr<const WeylGroup> group_;
  std::shared_ptr<const KLTable> table_;
  CentralizerGrading grading_;
  Weight rho0_;
  GeneratorMask j_ = 0;
  std::vector<Weight> levi_roots_;
  std::vector<int> block_of_coord_;  // t-coordinate of each epsilon coordinate, -1 for none
};

/// simple_character written against an explicit decomposition row (the c_{wu}).
FormalCharacter simple_character(const CharacterPipeline& pipeline, const DecompositionRow& c_row,
                                 const GroupFactors& factors, int check_depth = 8);

}  // namespace orbitgr
