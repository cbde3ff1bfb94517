#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace orbitgr {

/// Raised when an argument violates a mathematical precondition (wrong size,
/// wrong type, non-special orbit, ...). The CLI maps it to exit code 2.
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class Family { A, B, C, D };

char family_letter(Family f);

/// Classical Lie type. A(r) is gl_{r+1}, B(r) so_{2r+1}, C(r) sp_{2r}, D(r) so_{2r}.
struct LieType {
  Family family = Family::A;
  int rank = 1;

  LieType() = default;
  LieType(Family f, int r);

  /// Size of the natural representation, i.e. the size of the partitions labelling orbits.
  int natural_dim() const;
  /// Dimension of the matrix Lie algebra (gl_n in type A).
  int algebra_dim() const;
  /// Langlands dual type (B <-> C, others self-dual).
  LieType dual() const;

  std::string str() const;  // e.g. "B2"
  static LieType parse(std::string_view text);

  friend bool operator==(const LieType&, const LieType&) = default;
};

/// A partition stored as weakly decreasing strictly positive parts.
class Partition {
public:
  Partition() = default;
  /// Sorts and drops zero parts; throws DomainError on negative parts.
  explicit Partition(std::vector<int> parts);

  static Partition parse(std::string_view text);  // "3,2,2" or "3^1,2^2"
  static Partition single_row(int n);             // (n)
  static Partition single_column(int n);          // (1^n)

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  /// i-th part (0-based), zero beyond the length.
  int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  /// Multiplicity of the value k among the parts.
  int multiplicity(int k) const;
  /// Distinct part values, decreasing.
  std::vector<int> distinct_parts() const;

  std::string str() const;  // "3,1,1"

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }
  friend std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Column lengths of the Young diagram.
Partition transpose(const Partition& p);

/// Dominance order p <= q (all partial sums of p bounded by those of q).
/// Throws DomainError when the sizes differ.
bool dominance_leq(const Partition& p, const Partition& q);

/// Whether p labels an orbit of type t: B/D even parts have even multiplicity,
/// C odd parts have even multiplicity; A imposes nothing. Size must match.
bool is_type(const Partition& p, const LieType& t);

/// Family-only parity test without the size check.
bool has_family_parity(const Partition& p, Family f);

/// Dominance-largest partition of type t below p (B/C/D collapse; identity in type A).
Partition collapse(const Partition& p, const LieType& t);
/// Same, keyed on the family only (used for intermediate sizes in induction/duality).
Partition collapse(const Partition& p, Family f);

/// Lusztig's special-orbit test: B: p^t is of type B, C: p^t of type C, D: p^t of type C.
/// Every orbit is special in type A. Throws DomainError unless is_type(p, t).
bool is_special(const Partition& p, const LieType& t);

/// All partitions reachable from p by moving a single box from a higher row to a
/// lower one, deduplicated and sorted decreasingly.
std::vector<Partition> dominance_covers_below(const Partition& p);

/// All partitions of n in reverse lexicographic order (n = 0 gives the empty partition).
std::vector<Partition> all_partitions(int n);

}  // namespace orbitgr
