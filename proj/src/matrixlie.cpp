#include "orbitgr/matrixlie.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace orbitgr {

int matrix_rank_bound() {
  const char* env = std::getenv("ORBIT_GOLDIE_RANK_BOUND");
  if (env == nullptr || *env == '\0') return 8;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 64)
    throw std::invalid_argument("ORBIT_GOLDIE_RANK_BOUND must be a positive integer");
  return static_cast<int>(v);
}

namespace {

int form_sign(Family f) { return f == Family::C ? -1 : 1; }

QMatrix antidiagonal_gram(int n, int eps) {
  QMatrix j(n, n);
  for (int k = 0; k < n; ++k) j(k, n - 1 - k) = (eps < 0 && 2 * k >= n) ? -1 : 1;
  return j;
}

void check_rank(const LieType& t) {
  const int bound = matrix_rank_bound();
  if (t.rank > bound)
    throw DomainError("rank " + std::to_string(t.rank) + " exceeds the matrix rank bound " +
                      std::to_string(bound));
}

// A nilpotent in block form before the change to the anti-diagonal basis.
struct BlockModel {
  int n = 0;
  QMatrix e, h, f, gram;
  std::vector<int> weight;   // h-eigenvalue of each block basis vector
  std::vector<int> partner;  // the unique vector pairing nontrivially with it
  std::vector<std::pair<int, int>> hyperbolic_centres;  // (u, phi) of odd pair blocks
  std::vector<std::pair<int, int>> singleton_centres;   // (index, norm) of odd self-dual blocks
};

struct BlockPlan {
  int m;
  bool pair;
};

// Self-dual block of size m: e w_{i+1} = w_i, h w_i = (m+1-2i) w_i,
// f w_i = i(m-i) w_{i+1}, <w_i, w_{m+1-i}> = (-1)^{i-1} b_1.
void add_self_dual(BlockModel& b, int offset, int m, int norm) {
  for (int i = 1; i <= m; ++i) {
    const int p = offset + i - 1;
    b.weight[p] = m + 1 - 2 * i;
    b.h(p, p) = m + 1 - 2 * i;
    if (i < m) {
      b.e(p, p + 1) = 1;
      b.f(p + 1, p) = i * (m - i);
    }
    b.partner[p] = offset + m - i;
  }
  int b1 = 1;
  if (m % 2 == 1) b1 = ((m - 1) / 2) % 2 == 0 ? norm : -norm;
  for (int i = 1; i <= m; ++i) {
    const int sign = (i - 1) % 2 == 0 ? 1 : -1;
    b.gram(offset + i - 1, offset + m - i) = sign * b1;
  }
  if (m % 2 == 1) b.singleton_centres.push_back({offset + (m - 1) / 2, norm});
}

// U + U^*, with U a Jordan block of size m and U^* its contragredient.
void add_pair(BlockModel& b, int offset, int m, int eps) {
  const int du = offset, dp = offset + m;
  for (int i = 1; i <= m; ++i) {
    const int u = du + i - 1, p = dp + i - 1;
    b.weight[u] = m + 1 - 2 * i;
    b.weight[p] = -(m + 1 - 2 * i);
    b.h(u, u) = m + 1 - 2 * i;
    b.h(p, p) = -(m + 1 - 2 * i);
    if (i < m) {
      b.e(u, u + 1) = 1;
      b.e(p + 1, p) = -1;
      b.f(u + 1, u) = i * (m - i);
      b.f(p, p + 1) = -i * (m - i);
    }
    b.gram(u, p) = 1;
    b.gram(p, u) = eps;
    b.partner[u] = p;
    b.partner[p] = u;
  }
  if (m % 2 == 1) b.hyperbolic_centres.push_back({du + (m - 1) / 2, dp + (m - 1) / 2});
}

void check_triple(const SL2Triple& t) {
  if (!(commutator(t.h, t.e) == t.e.scaled(2)) || !(commutator(t.h, t.f) == t.f.scaled(-2)) ||
      !(commutator(t.e, t.f) == t.h))
    throw std::logic_error("realised sl2-triple violates the bracket relations");
  if (!t.h.is_diagonal()) throw std::logic_error("realised h is not diagonal");
}

SL2Triple gl_triple(const Partition& p) {
  const int n = p.size();
  BlockModel b;
  b.n = n;
  b.e = b.h = b.f = b.gram = QMatrix(n, n);
  b.weight.assign(n, 0);
  b.partner.assign(n, 0);
  int offset = 0;
  for (int m : p.parts()) {
    add_self_dual(b, offset, m, 1);
    offset += m;
  }
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int c) { return b.weight[a] > b.weight[c]; });
  QMatrix s(n, n);
  for (int k = 0; k < n; ++k) s(order[k], k) = 1;
  const QMatrix si = s.transposed();
  SL2Triple t{si * b.e * s, si * b.h * s, si * b.f * s};
  check_triple(t);
  return t;
}

SL2Triple classical_triple(Family family, const Partition& p) {
  const int n = p.size();
  const int eps = form_sign(family);
  if (!has_family_parity(p, family))
    throw DomainError("partition " + p.str() + " is not of type " + std::string(1, family_letter(family)));

  // Odd-size blocks of the symmetric case and even-size blocks of the symplectic
  // case carry an invariant form themselves; the rest come in dual pairs.
  std::vector<BlockPlan> plan;
  for (int m : p.distinct_parts()) {
    int mult = p.multiplicity(m);
    const bool self_dual = (m % 2 == 1) == (eps > 0);
    if (self_dual && eps < 0) {
      for (int i = 0; i < mult; ++i) plan.push_back({m, false});
      continue;
    }
    for (; mult >= 2; mult -= 2) plan.push_back({m, true});
    if (mult == 1) {
      if (!self_dual) throw std::logic_error("unpaired block without invariant form");
      plan.push_back({m, false});
    }
  }

  BlockModel b;
  b.n = n;
  b.e = b.h = b.f = b.gram = QMatrix(n, n);
  b.weight.assign(n, 0);
  b.partner.assign(n, 0);
  int offset = 0, singletons = 0;
  for (const BlockPlan& bp : plan) {
    if (bp.pair) {
      add_pair(b, offset, bp.m, eps);
      offset += 2 * bp.m;
    } else {
      const int norm = (bp.m % 2 == 1) ? (singletons++ % 2 == 0 ? 1 : -1) : 1;
      add_self_dual(b, offset, bp.m, norm);
      offset += bp.m;
    }
  }

  // Columns of the change of basis, in block coordinates.
  QMatrix s(n, n);
  auto set_col = [&](int col, int vec, const Rational& c) { s(vec, col) += c; };
  std::vector<int> positive;
  for (int i = 0; i < n; ++i)
    if (b.weight[i] > 0) positive.push_back(i);
  std::stable_sort(positive.begin(), positive.end(),
                   [&](int a, int c) { return b.weight[a] > b.weight[c]; });
  int pos = 0;
  for (int v : positive) {
    const int q = b.partner[v];
    set_col(pos, v, 1);
    set_col(n - 1 - pos, q, Rational(1) / b.gram(v, q));
    ++pos;
  }
  for (auto [u, phi] : b.hyperbolic_centres) {
    set_col(pos, u, 1);
    set_col(n - 1 - pos, phi, Rational(1) / b.gram(u, phi));
    ++pos;
  }
  const auto& sc = b.singleton_centres;
  std::size_t k = 0;
  for (; k + 1 < sc.size(); k += 2) {
    // norms +1 and -1: x = a + b and y = (a - b)/2 are isotropic with <x, y> = 1
    set_col(pos, sc[k].first, 1);
    set_col(pos, sc[k + 1].first, 1);
    set_col(n - 1 - pos, sc[k].first, Rational(1, 2));
    set_col(n - 1 - pos, sc[k + 1].first, Rational(-1, 2));
    ++pos;
  }
  if (k < sc.size()) {
    if (2 * pos + 1 != n || sc[k].second != 1) throw std::logic_error("unexpected anisotropic centre");
    set_col(pos, sc[k].first, 1);
    ++pos;
  }
  if (2 * pos < n) throw std::logic_error("basis change incomplete");

  const QMatrix j = antidiagonal_gram(n, eps);
  if (!(s.transposed() * b.gram * s == j)) throw std::logic_error("basis change does not reach the anti-diagonal form");
  const QMatrix si = s.inverse();
  SL2Triple t{si * b.e * s, si * b.h * s, si * b.f * s};
  check_triple(t);
  return t;
}

SL2Triple triple_for(Family family, const Partition& p) {
  return family == Family::A ? gl_triple(p) : classical_triple(family, p);
}

std::vector<Rational> flatten(const QMatrix& m) {
  std::vector<Rational> v;
  v.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

// Rank of ad(e) restricted to the span of the given basis elements.
int ad_rank(const QMatrix& e, const std::vector<QMatrix>& basis, const std::vector<int>& which,
            Execution execution) {
  if (which.empty()) return 0;
  const int n = e.rows();
  QMatrix m(static_cast<int>(which.size()), n * n);
  for (std::size_t r = 0; r < which.size(); ++r) {
    const std::vector<Rational> v = flatten(commutator(e, basis[which[r]]));
    for (int c = 0; c < n * n; ++c) m(static_cast<int>(r), c) = v[c];
  }
  return m.rank(execution);
}

}  // namespace

MatrixAlgebra::MatrixAlgebra(const LieType& type) : type_(type), n_(type.natural_dim()) {
  if (type.family == Family::A) {
    gram_ = QMatrix::identity(n_);
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        basis_.push_back(QMatrix::unit(n_, a, b));
        indices_.push_back({a, b});
      }
    return;
  }
  const int eps = form_sign(type.family);
  gram_ = antidiagonal_gram(n_, eps);
  // J^{-1} = J for the symmetric form and -J for the symplectic one.
  const QMatrix jinv = eps > 0 ? gram_ : gram_.scaled(-1);
  for (int a = 0; a < n_; ++a)
    for (int b = a; b < n_; ++b) {
      if (eps > 0 && a == b) continue;
      QMatrix x = QMatrix::unit(n_, a, b);
      if (a != b) x = eps > 0 ? x - QMatrix::unit(n_, b, a) : x + QMatrix::unit(n_, b, a);
      basis_.push_back(jinv * x);
      indices_.push_back({a, b});
    }
}

bool MatrixAlgebra::contains(const QMatrix& x) const {
  if (x.rows() != n_ || x.cols() != n_) return false;
  if (type_.family == Family::A) return true;
  return (x.transposed() * gram_ + gram_ * x).is_zero();
}

SL2Triple realize_nilpotent(const OrbitLabel& o) {
  check_rank(o.type);
  SL2Triple t = triple_for(o.type.family, o.partition);
  const MatrixAlgebra g(o.type);
  if (!g.contains(t.e) || !g.contains(t.h) || !g.contains(t.f))
    throw std::logic_error("realised triple is not in " + o.type.str());
  return t;
}

int centralizer_dimension(const OrbitLabel& o, Execution execution) {
  const MatrixAlgebra g(o.type);
  const SL2Triple t = realize_nilpotent(o);
  std::vector<int> all(g.dimension());
  for (int i = 0; i < g.dimension(); ++i) all[i] = i;
  return g.dimension() - ad_rank(t.e, g.basis(), all, execution);
}

std::vector<int> ad_theta_eigenvalues(const OrbitLabel& o) {
  const MatrixAlgebra g(o.type);
  const SL2Triple t = realize_nilpotent(o);
  std::vector<int> out;
  for (const QMatrix& x : g.basis()) {
    const QMatrix c = commutator(t.h, x);
    Rational lambda;
    bool found = false;
    for (int i = 0; i < x.rows() && !found; ++i)
      for (int j = 0; j < x.cols() && !found; ++j)
        if (!x(i, j).is_zero()) {
          lambda = c(i, j) / x(i, j);
          found = true;
        }
    if (!found || !(c == x.scaled(lambda)) || !lambda.is_integer())
      throw std::logic_error("basis element is not an ad(h) eigenvector");
    out.push_back(static_cast<int>(lambda.num()));
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

LeviNilpotent LeviNilpotent::zero(const LeviDescriptor& levi) {
  LeviNilpotent n;
  n.levi = levi;
  for (int m : levi.gl_blocks) n.block_orbits.push_back(Partition::single_column(m));
  n.residual_orbit = Partition::single_column(levi.residual_natural_dim());
  return n;
}

LeviNilpotent LeviNilpotent::regular(const LeviDescriptor& levi) {
  LeviNilpotent n;
  n.levi = levi;
  for (int m : levi.gl_blocks) n.block_orbits.push_back(Partition::single_row(m));
  const int n0 = levi.residual_natural_dim();
  switch (levi.family) {
    case Family::A:
    case Family::B:
    case Family::C: n.residual_orbit = Partition::single_row(n0); break;
    case Family::D:
      // the regular orbit of so_{2m} has Jordan type (2m-1, 1)
      n.residual_orbit = n0 >= 2 ? Partition({n0 - 1, 1}) : Partition::single_column(n0);
      break;
  }
  return n;
}

Partition LeviNilpotent::ambient_partition() const {
  std::vector<int> parts;
  const int copies = levi.family == Family::A ? 1 : 2;
  for (const Partition& p : block_orbits)
    for (int c = 0; c < copies; ++c) parts.insert(parts.end(), p.parts().begin(), p.parts().end());
  parts.insert(parts.end(), residual_orbit.parts().begin(), residual_orbit.parts().end());
  return Partition(parts);
}

namespace {

void validate_levi_nilpotent(const LieType& ambient, const LeviNilpotent& nil) {
  nil.levi.validate_against(ambient);
  if (nil.block_orbits.size() != nil.levi.gl_blocks.size())
    throw DomainError("one orbit per gl block is required");
  for (std::size_t i = 0; i < nil.block_orbits.size(); ++i)
    if (nil.block_orbits[i].size() != nil.levi.gl_blocks[i])
      throw DomainError("block orbit " + nil.block_orbits[i].str() + " does not fit gl_" +
                        std::to_string(nil.levi.gl_blocks[i]));
  if (nil.residual_orbit.size() != nil.levi.residual_natural_dim())
    throw DomainError("residual orbit " + nil.residual_orbit.str() + " has the wrong size");
  if (!has_family_parity(nil.residual_orbit, ambient.family))
    throw DomainError("residual orbit " + nil.residual_orbit.str() + " is not of the residual type");
}

void place(QMatrix& target, const QMatrix& block, int offset) {
  for (int i = 0; i < block.rows(); ++i)
    for (int j = 0; j < block.cols(); ++j) target(offset + i, offset + j) = block(i, j);
}

}  // namespace

QMatrix levi_nilpotent_matrix(const LieType& ambient, const LeviNilpotent& nil) {
  validate_levi_nilpotent(ambient, nil);
  check_rank(ambient);
  const int n = ambient.natural_dim();
  QMatrix e(n, n);
  int offset = 0;
  if (ambient.family == Family::A) {
    for (const Partition& p : nil.block_orbits) {
      place(e, gl_triple(p).e, offset);
      offset += p.size();
    }
    place(e, gl_triple(nil.residual_orbit).e, offset);
    return e;
  }
  const int eps = form_sign(ambient.family);
  const QMatrix j = antidiagonal_gram(n, eps);
  const QMatrix jinv = eps > 0 ? j : j.scaled(-1);
  for (const Partition& p : nil.block_orbits) {
    QMatrix a(n, n);
    place(a, gl_triple(p).e, offset);
    // X on W, -X^* on the dual block W^*: A - J^{-1} A^T J
    e = e + a - jinv * a.transposed() * j;
    offset += p.size();
  }
  place(e, classical_triple(ambient.family, nil.residual_orbit).e, offset);
  if (!MatrixAlgebra(ambient).contains(e)) throw std::logic_error("Levi nilpotent is not in the algebra");
  return e;
}

int CentralizerGrading::total_dimension() const {
  int d = 0;
  for (const GradingEntry& g : entries) d += g.multiplicity;
  return d;
}

std::vector<std::vector<int>> CentralizerGrading::negative_weights() const {
  std::vector<std::vector<int>> out;
  for (const GradingEntry& g : entries)
    if (g.theta_eigenvalue < 0)
      for (int i = 0; i < g.multiplicity; ++i) out.push_back(g.t_weight);
  return out;
}

CentralizerGrading centralizer_grading(const LieType& ambient, const LeviNilpotent& nil) {
  const QMatrix e = levi_nilpotent_matrix(ambient, nil);
  const LeviDescriptor& levi = nil.levi;
  const int n = ambient.natural_dim();
  const int k = static_cast<int>(levi.gl_blocks.size());
  const bool type_a = ambient.family == Family::A;
  const int coords = k + ((type_a && levi.residual_rank > 0) ? 1 : 0);

  CentralizerGrading out;
  out.theta.assign(coords, 0);
  for (int i = 0; i < k; ++i) out.theta[i] = k - i;

  // t-coordinate and sign of each basis position of the natural representation
  std::vector<std::pair<int, int>> pos(n, {-1, 0});
  int offset = 0;
  for (int i = 0; i < k; ++i) {
    for (int c = 0; c < levi.gl_blocks[i]; ++c, ++offset) {
      pos[offset] = {i, 1};
      if (!type_a) pos[n - 1 - offset] = {i, -1};
    }
  }
  if (type_a)
    for (; offset < n; ++offset) pos[offset] = {k, 1};

  const MatrixAlgebra g(ambient);
  std::map<std::vector<int>, std::vector<int>> classes;
  for (int idx = 0; idx < g.dimension(); ++idx) {
    const QMatrix& x = g.basis()[idx];
    std::vector<int> w(coords, 0);
    bool found = false;
    for (int r = 0; r < n && !found; ++r)
      for (int c = 0; c < n && !found; ++c)
        if (!x(r, c).is_zero()) {
          if (pos[r].first >= 0) w[pos[r].first] += pos[r].second;
          if (pos[c].first >= 0) w[pos[c].first] -= pos[c].second;
          found = true;
        }
    classes[w].push_back(idx);
  }
  for (auto it = classes.rbegin(); it != classes.rend(); ++it) {
    const int kernel = static_cast<int>(it->second.size()) - ad_rank(e, g.basis(), it->second, Execution::Serial);
    if (kernel == 0) continue;
    GradingEntry entry;
    entry.t_weight = it->first;
    for (int c = 0; c < coords; ++c) entry.theta_eigenvalue += out.theta[c] * it->first[c];
    entry.multiplicity = kernel;
    out.entries.push_back(entry);
  }
  return out;
}

std::shared_ptr<const SL2Triple> RealizationCache::get(const OrbitLabel& o) {
  const std::string key = o.str();
  {
    std::shared_lock lock(mutex_);
    auto it = entries_.find(key);
    if (it != entries_.end()) return it->second;
  }
  std::unique_lock lock(mutex_);
  auto it = entries_.find(key);
  if (it != entries_.end()) return it->second;
  auto t = std::make_shared<const SL2Triple>(realize_nilpotent(o));
  entries_.emplace(key, t);
  return t;
}

}  // namespace orbitgr
