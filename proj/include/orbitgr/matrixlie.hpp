#pragma once

#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <vector>

#include "orbitgr/orbits.hpp"
#include "orbitgr/qmatrix.hpp"

namespace orbitgr {

/// Largest rank accepted by the explicit matrix models. Defaults to 8 and can be
/// overridden with the ORBIT_GOLDIE_RANK_BOUND environment variable.
int matrix_rank_bound();

/// A classical Lie algebra realised as N x N matrices.
///
/// gl_N in type A. Otherwise the algebra preserving the anti-diagonal form with
/// Gram matrix J: J(k, N+1-k) = 1 for every k in the orthogonal case, and
/// J(k, N+1-k) = 1 for k <= N/2, -1 for k > N/2 in the symplectic case. With this
/// convention the diagonal matrices form a Cartan subalgebra and the upper triangular
/// ones a Borel subalgebra; diag(x_1, ..., x_n, [0], -x_n, ..., -x_1) has epsilon
/// coordinates (x_1, ..., x_n).
class MatrixAlgebra {
public:
  explicit MatrixAlgebra(const LieType& type);

  const LieType& type() const { return type_; }
  int natural_dim() const { return n_; }
  int dimension() const { return static_cast<int>(basis_.size()); }
  /// Gram matrix of the invariant form (identity in type A, unused there).
  const QMatrix& gram() const { return gram_; }
  /// Basis of weight vectors: E_ab in type A, J^{-1}(E_ab -+ E_ba) otherwise.
  const std::vector<QMatrix>& basis() const { return basis_; }
  /// For basis element k, the matrix-unit indices (a, b) it was built from.
  const std::vector<std::pair<int, int>>& basis_indices() const { return indices_; }

  bool contains(const QMatrix& x) const;

private:
  LieType type_;
  int n_;
  QMatrix gram_;
  std::vector<QMatrix> basis_;
  std::vector<std::pair<int, int>> indices_;
};

struct SL2Triple {
  QMatrix e, h, f;
};

/// Explicit sl_2-triple for the orbit, with h diagonal and dominant. Checks the
/// triple relations and membership exactly; throws DomainError when the rank
/// exceeds matrix_rank_bound().
SL2Triple realize_nilpotent(const OrbitLabel& o);

/// Dimension of the kernel of ad(e) on the matrix algebra.
int centralizer_dimension(const OrbitLabel& o, Execution execution = Execution::Serial);

/// Eigenvalues of ad(h) on the algebra for the realised triple, sorted decreasingly.
std::vector<int> ad_theta_eigenvalues(const OrbitLabel& o);

/// A nilpotent element of a block Levi: one partition per gl block (same order as
/// LeviDescriptor::gl_blocks) and one for the residual factor.
struct LeviNilpotent {
  LeviDescriptor levi;
  std::vector<Partition> block_orbits;
  Partition residual_orbit;

  /// e = 0 in every factor.
  static LeviNilpotent zero(const LeviDescriptor& levi);
  /// e regular in every factor (distinguished in the Levi).
  static LeviNilpotent regular(const LeviDescriptor& levi);
  /// Jordan type of e in the ambient algebra.
  Partition ambient_partition() const;
};

/// One weight space of z_g(e) under the centre t of the Levi.
struct GradingEntry {
  std::vector<int> t_weight;
  int theta_eigenvalue = 0;
  int multiplicity = 0;
};

struct CentralizerGrading {
  /// theta in the coordinates of t (one per gl block, plus the residual gl block in type A).
  std::vector<int> theta;
  std::vector<GradingEntry> entries;

  int total_dimension() const;
  /// The weights mu_1, ..., mu_k negative on theta, repeated with multiplicity.
  std::vector<std::vector<int>> negative_weights() const;
};

/// t-weights of z_g(e) for e in the block Levi, graded by ad(theta), where theta takes
/// the value j on the j-th gl block counted from the residual factor outward and 0
/// on the residual factor.
CentralizerGrading centralizer_grading(const LieType& ambient, const LeviNilpotent& nilpotent);

/// The nilpotent e of the Levi embedded in the ambient matrix algebra.
QMatrix levi_nilpotent_matrix(const LieType& ambient, const LeviNilpotent& nilpotent);

/// Read-mostly memo for realised triples: concurrent lookups, serialised construction.
class RealizationCache {
public:
  std::shared_ptr<const SL2Triple> get(const OrbitLabel& o);

private:
  std::shared_mutex mutex_;
  std::map<std::string, std::shared_ptr<const SL2Triple>> entries_;
};

}  // namespace orbitgr
