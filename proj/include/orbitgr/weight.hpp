#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "orbitgr/partition.hpp"
#include "orbitgr/rational.hpp"

namespace orbitgr {

/// A vector with coordinates in (1/2)Z, stored as twice its value so that all
/// arithmetic stays in integers.
class Weight {
public:
  Weight() = default;
  explicit Weight(std::size_t n) : twice_(n, 0) {}
  /// From integer coordinates.
  static Weight integral(const std::vector<int>& coords);
  /// From doubled coordinates: coordinate i equals doubled[i] / 2.
  static Weight from_doubled(std::vector<int> doubled);
  /// Parses "3/2,1/2" or "1,-1" (comma separated integers or halves).
  static Weight parse(std::string_view text);

  std::size_t size() const { return twice_.size(); }
  const std::vector<int>& doubled() const { return twice_; }
  Rational operator[](std::size_t i) const { return Rational(twice_[i], 2); }

  bool is_integral() const;
  /// All coordinates in Z + 1/2.
  bool is_half_odd() const;
  bool is_zero() const;

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight scaled(int k) const;

  /// Standard inner product of the doubled vectors (i.e. 4 * (a, b)).
  friend long long dot_doubled(const Weight& a, const Weight& b);

  std::string str() const;  // "(3/2,1/2)"

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight& a, const Weight& b) { return a.twice_ <=> b.twice_; }
  friend std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.str(); }

private:
  std::vector<int> twice_;
};

/// Root datum of a classical Lie algebra in epsilon coordinates, with the
/// Borel subalgebra of upper triangular matrices for the anti-diagonal form.
///
///   A(r): gl_{r+1}, coordinates e_1..e_{r+1}, positive roots e_i - e_j (i < j)
///   B(r): e_i +- e_j, e_i          simple: e_i - e_{i+1}, e_r
///   C(r): e_i +- e_j, 2 e_i        simple: e_i - e_{i+1}, 2 e_r
///   D(r): e_i +- e_j               simple: e_i - e_{i+1}, e_{r-1} + e_r
class RootSystem {
public:
  explicit RootSystem(const LieType& type);

  const LieType& type() const { return type_; }
  /// Number of epsilon coordinates (rank + 1 in type A, rank otherwise).
  int coords() const { return coords_; }
  const std::vector<Weight>& positive_roots() const { return positive_; }
  /// Simple roots ordered as the Coxeter generators s_1..s_r.
  const std::vector<Weight>& simple_roots() const { return simple_; }
  /// Half the sum of the positive roots.
  const Weight& rho() const { return rho_; }

  /// <lambda, alpha^vee> = 2 (lambda, alpha) / (alpha, alpha).
  static Rational coroot_pairing(const Weight& lambda, const Weight& alpha);

  /// Positive roots lying in the span of the given simple roots (0-based generator indices).
  std::vector<Weight> parabolic_positive_roots(const std::vector<int>& generators) const;

  /// Whether the weight belongs to the weight lattice of the simply connected
  /// group (type A: pairwise integral differences; B, D: Z^r or (Z+1/2)^r; C: Z^r).
  bool in_weight_lattice(const Weight& w) const;
  /// Whether <w, alpha^vee> >= 0 for every simple root.
  bool is_dominant(const Weight& w) const;

private:
  LieType type_;
  int coords_ = 0;
  std::vector<Weight> positive_;
  std::vector<Weight> simple_;
  Weight rho_;
};

}  // namespace orbitgr
