#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbitgr/partition.hpp"
#include "orbitgr/weight.hpp"

namespace orbitgr {

/// Which of the two SO_{2n}-orbits a very even type D partition denotes.
/// Purely informational: every invariant computed here ignores it.
enum class VeryEvenTag { None, I, II };

/// A nilpotent orbit in a classical Lie algebra, labelled by its Jordan type.
struct OrbitLabel {
  LieType type;
  Partition partition;
  VeryEvenTag tag = VeryEvenTag::None;

  OrbitLabel() = default;
  /// Validates is_type(partition, type); assigns tag I to very even D partitions
  /// when none is given.
  OrbitLabel(LieType t, Partition p, VeryEvenTag tag = VeryEvenTag::None);

  /// "B2:3,1,1", with an optional ":I"/":II" suffix for very even type D.
  static OrbitLabel parse(std::string_view text);
  std::string str() const;

  bool is_zero() const;
  bool is_regular() const;
  bool is_very_even() const;

  friend bool operator==(const OrbitLabel& a, const OrbitLabel& b) {
    return a.type == b.type && a.partition == b.partition && a.tag == b.tag;
  }
};

OrbitLabel zero_orbit(const LieType& t);
OrbitLabel regular_orbit(const LieType& t);
/// Every orbit label of the given type, partitions in reverse lexicographic order.
std::vector<OrbitLabel> all_orbits(const LieType& t);

/// Levi subalgebra gl_{n_k} x ... x gl_{n_1} x g(n_0) of a classical algebra.
/// Blocks are listed outermost first (the order in which they occupy the first
/// basis vectors); the residual factor is so_{2 n_0 + 1}, sp_{2 n_0}, so_{2 n_0}
/// or, in type A, one more gl_{n_0}.
struct LeviDescriptor {
  Family family = Family::A;
  std::vector<int> gl_blocks;
  int residual_rank = 0;

  /// Ambient type for these blocks.
  LieType ambient() const;
  /// Natural dimension of the residual factor (2 n_0 + 1, 2 n_0, or n_0).
  int residual_natural_dim() const;
  /// Dimension of the Levi subalgebra (gl blocks + residual factor).
  int dimension() const;
  /// Throws DomainError unless the blocks fit the ambient type.
  void validate_against(const LieType& ambient) const;

  /// "2,1|1" : gl blocks, then the residual rank.
  static LeviDescriptor parse(Family family, std::string_view text);
  std::string str() const;
};

/// Dimension of the orbit: type A n^2 - sum (p^t_i)^2, B/D dim g - (sum (p^t_i)^2 - #odd parts)/2,
/// C dim g - (sum (p^t_i)^2 + #odd parts)/2.
int orbit_dimension(const OrbitLabel& o);

/// Lusztig-Spaltenstein induction from the orbit (0, ..., 0, seed) of a Levi,
/// one gl block at a time from the innermost outward: pad, add 2 (1 in type A)
/// to the first m parts, collapse.
OrbitLabel ls_induce(const LieType& ambient, const LeviDescriptor& levi, const Partition& seed);

/// Barbasch-Vogan-Spaltenstein duality on special orbits.
///   B -> C: [l(p^t)]_C, C -> B: [r(p^t)]_B, D -> D: [p^t]_D, A -> A: p^t.
OrbitLabel bvs_dual(const OrbitLabel& o);

/// Necessary partition pattern for weak rigidity:
///   B: ((2k+1)^{odd}, (2k)^{even > 0}, ..., 1^{even > 0}),
///   C/D: (n^{d_n}, ..., 1^{d_1}) with every d_i positive and even,
///   A: only the zero orbit.
bool is_weakly_rigid_pattern(const OrbitLabel& o);

enum class FactorKind { Orthogonal, Symplectic, General };

struct CentralizerFactor {
  FactorKind kind;
  int part;          // the part value lambda_i
  int multiplicity;  // n_i, the size of the classical group factor

  friend bool operator==(const CentralizerFactor&, const CentralizerFactor&) = default;
};

/// Reductive part of Z_G(e): one factor per distinct part. In types B/D odd parts give
/// O_{n_i} and even parts Sp_{n_i}; type C swaps the rule; type A gives GL_{n_i}.
std::vector<CentralizerFactor> reductive_centralizer(const OrbitLabel& o);

enum class GroupForm { Full, Adjoint, Special };

/// Order of the component group A(e). Full form means O_N / Sp_{2n} / GL_n, adjoint means
/// SO_{2n+1}, PSp_{2n}, PSO_{2n}, PGL_n, and Special (type A only) means SL_n.
long long component_group_order(const OrbitLabel& o, GroupForm form);

/// The weight h^vee / 2 attached to a special orbit, where h^vee is the dominant
/// semisimple element of the BVS-dual orbit, in epsilon coordinates of the dual type.
Weight abv_weight(const OrbitLabel& o);

/// Evenness of the orbit (all ad(h) eigenvalues even), via the parity of the parts.
bool is_even_orbit(const OrbitLabel& o);

/// Eigenvalues of h on the natural representation: each part m contributes
/// m-1, m-3, ..., 1-m. Sorted decreasingly.
std::vector<int> h_eigenvalues(const Partition& p);

/// Half the smallest drop in orbit dimension from the Richardson orbit of the type A
/// parabolic with this composition to an orbit in its closure. nullopt when the
/// Richardson orbit is already zero (composition with a single part).
std::optional<int> richardson_min_codim(const std::vector<int>& composition);

}  // namespace orbitgr
