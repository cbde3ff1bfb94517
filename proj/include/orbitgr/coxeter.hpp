#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "orbitgr/partition.hpp"

namespace orbitgr {

/// Index of an element inside its WeylGroup. Ids are sorted by (length, one-line form),
/// so the identity is 0 and the longest element is size() - 1.
using ElementId = int;

/// Bit i set means generator s_{i+1} belongs to the set.
using GeneratorMask = std::uint64_t;

enum class Side { Left, Right };

/// A finite Coxeter group given by a faithful permutation action, enumerated once.
///
/// Classical groups act on the signed points +-1..+-n (type A_n on 1..n+1):
///   s_i swaps i and i+1 (and -i, -(i+1)) for i < n,
///   s_n negates n in B/C and sends (n-1, n) to (-n, -(n-1)) in D.
/// The dihedral group I_2(m) acts on its 2m roots.
class WeylGroup {
public:
  /// Weyl group of a classical type (A(r) is the symmetric group S_{r+1}).
  static WeylGroup classical(const LieType& type);
  /// Dihedral group I_2(m), m >= 2 (A_1 x A_1 for m = 2, A_2 for 3, B_2 for 4, G_2 for 6).
  static WeylGroup dihedral(int m);
  /// "A2", "B3", "D4", or "I2(6)".
  static WeylGroup parse(std::string_view text);

  std::string name() const { return name_; }
  /// Family of a classical group (meaningless when is_dihedral()).
  bool is_dihedral() const { return dihedral_; }
  Family family() const { return family_; }
  int rank() const { return rank_; }
  int size() const { return static_cast<int>(length_.size()); }
  /// Coxeter matrix entry m(s_i, s_j), 0-based generator indices.
  int coxeter_entry(int i, int j) const;

  ElementId identity() const { return 0; }
  ElementId longest() const { return size() - 1; }
  int length(ElementId w) const { return length_[w]; }
  ElementId right_mul(ElementId w, int s) const { return right_[static_cast<std::size_t>(w) * rank_ + s]; }
  ElementId left_mul(int s, ElementId w) const { return left_[static_cast<std::size_t>(w) * rank_ + s]; }
  ElementId inverse(ElementId w) const { return inverse_[w]; }
  ElementId multiply(ElementId a, ElementId b) const;
  GeneratorMask descents_right(ElementId w) const { return right_descents_[w]; }
  GeneratorMask descents_left(ElementId w) const { return left_descents_[w]; }
  GeneratorMask descents(ElementId w, Side side) const {
    return side == Side::Left ? descents_left(w) : descents_right(w);
  }
  GeneratorMask all_generators() const { return (GeneratorMask{1} << rank_) - 1; }

  /// Lexicographically first reduced word, as 0-based generator indices.
  std::vector<int> reduced_word(ElementId w) const;
  ElementId from_word(const std::vector<int>& word) const;

  /// Signed one-line notation w(1), ..., w(n) (root permutation for dihedral groups).
  std::vector<int> one_line(ElementId w) const;
  /// Number of positive roots sent to negative roots, counted on the one-line form.
  /// With eps_v = sign(v) eps_{|v|} and signed values ordered 1 > 2 > ... > n > -n > ... > -1:
  /// pairs i < j with w(i) < w(j) (root eps_i - eps_j), pairs with w(i) < -w(j)
  /// (eps_i + eps_j), and in B/C the negative entries (eps_i). Type A counts ordinary
  /// inversions; dihedral groups count positive roots mapped to negative ones.
  int inversion_length(ElementId w) const;

  /// Bruhat order by descent recursion: for a right descent s of w,
  /// x <= w iff min(x, xs) <= ws. O(length(w)) steps, no tables.
  bool bruhat_leq(ElementId x, ElementId w) const;

  /// Elements with no descent in J on the given side. Side::Right gives the
  /// minimal representatives of W/W_J, Side::Left those of W_J\W.
  std::vector<ElementId> coset_min_reps(GeneratorMask j, Side side = Side::Right) const;
  /// Elements of the standard parabolic subgroup W_J.
  std::vector<ElementId> parabolic_subgroup(GeneratorMask j) const;

  /// "[2,-1,3]" one-line form, "e", "w0", or a word "s1s2s1" / "1.2.1".
  ElementId parse_element(std::string_view text) const;
  std::string str(ElementId w) const;
  /// Reduced word as "s1s2s1", "e" for the identity.
  std::string word_str(ElementId w) const;

private:
  WeylGroup() = default;
  void build(std::vector<std::vector<int>> generators, std::vector<std::vector<int>> coxeter);
  ElementId find_perm(const std::vector<int>& perm) const;
  std::vector<int> perm_of(ElementId w) const;

  std::string name_;
  bool dihedral_ = false;
  Family family_ = Family::A;
  int rank_ = 0;
  int points_ = 0;
  std::vector<std::vector<int>> coxeter_;
  std::vector<int> perms_;  // size() * points_, permutation of each element
  std::vector<int> length_;
  std::vector<ElementId> right_, left_, inverse_;
  std::vector<GeneratorMask> right_descents_, left_descents_;
  std::map<std::vector<int>, ElementId> index_;
};

/// Expected order of a classical Weyl group: (r+1)!, 2^r r!, 2^{r-1} r!.
long long weyl_group_order(const LieType& type);

/// Mask from 1-based generator indices.
GeneratorMask mask_of(const std::vector<int>& generators_one_based);
/// "1,2" or "{s1,s2}" or "" into a mask.
GeneratorMask parse_mask(std::string_view text, int rank);

}  // namespace orbitgr
