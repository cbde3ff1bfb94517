#include "orbitgr/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "orbitgr/matrixlie.hpp"

namespace orbitgr::oracle {

Partition collapse(const Partition& p, Family f) {
  std::vector<Partition> below;
  for (const Partition& q : all_partitions(p.size()))
    if (has_family_parity(q, f) && dominance_leq(q, p)) below.push_back(q);
  if (below.empty()) throw std::logic_error("no partition of the family below " + p.str());
  std::vector<Partition> maxima;
  for (const Partition& q : below) {
    bool dominated = false;
    for (const Partition& r : below)
      if (!(r == q) && dominance_leq(q, r)) {
        dominated = true;
        break;
      }
    if (!dominated) maxima.push_back(q);
  }
  if (maxima.size() != 1) throw std::logic_error("collapse maximum of " + p.str() + " is not unique");
  return maxima.front();
}

namespace {

// Laurent polynomial sum_k c[k] q^{lo + k}
struct Laurent {
  int lo = 0;
  std::vector<std::int64_t> c;

  bool is_zero() const {
    return std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v == 0; });
  }
  void add(const Laurent& a, int shift, std::int64_t factor) {
    if (a.c.empty()) return;
    const int alo = a.lo + shift, ahi = alo + static_cast<int>(a.c.size());
    if (c.empty()) {
      lo = alo;
      c.assign(a.c.size(), 0);
    }
    const int hi = lo + static_cast<int>(c.size());
    const int nlo = std::min(lo, alo), nhi = std::max(hi, ahi);
    if (nlo < lo || nhi > hi) {
      std::vector<std::int64_t> n(nhi - nlo, 0);
      std::copy(c.begin(), c.end(), n.begin() + (lo - nlo));
      c = std::move(n);
      lo = nlo;
    }
    for (std::size_t k = 0; k < a.c.size(); ++k) c[alo - lo + k] += factor * a.c[k];
  }
  std::int64_t at(int k) const {
    const int i = k - lo;
    return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : 0;
  }
};

}  // namespace

std::vector<std::vector<KLPolynomial>> kl_bar_involution(const WeylGroup& g) {
  const int n = g.size();
  // bar[w][x]: coefficient of T_x in bar(T_w)
  std::vector<std::vector<Laurent>> bar(n, std::vector<Laurent>(n));
  bar[0][0].c = {1};
  for (ElementId w = 1; w < n; ++w) {
    const GeneratorMask d = g.descents_right(w);
    int s = 0;
    while (!((d >> s) & 1)) ++s;
    const ElementId v = g.right_mul(w, s);
    Laurent one;
    one.c = {1};
    for (ElementId x = 0; x < n; ++x) {
      const Laurent& a = bar[v][x];
      if (a.c.empty() || a.is_zero()) continue;
      const ElementId xs = g.right_mul(x, s);
      if (g.length(xs) < g.length(x)) {
        bar[w][xs].add(a, 0, 1);
      } else {
        // T_x T_s^{-1} = q^{-1} T_{xs} + (q^{-1} - 1) T_x
        bar[w][xs].add(a, -1, 1);
        bar[w][x].add(a, -1, 1);
        bar[w][x].add(a, 0, -1);
      }
    }
  }
  // R_{x,w} = eps_x eps_w q^{l(w)} [T_x] bar(T_w), stored as polynomials
  std::vector<std::vector<Laurent>> r(n, std::vector<Laurent>(n));
  for (ElementId w = 0; w < n; ++w)
    for (ElementId x = 0; x < n; ++x) {
      if (bar[w][x].c.empty() || bar[w][x].is_zero()) continue;
      const int sign = (g.length(w) + g.length(x)) % 2 == 0 ? 1 : -1;
      r[w][x].add(bar[w][x], g.length(w), sign);
    }
  bar.clear();

  std::vector<std::vector<KLPolynomial>> table(n, std::vector<KLPolynomial>(n));
  for (ElementId w = 0; w < n; ++w) {
    table[w][w].coeffs = {1};
    std::vector<ElementId> interval{w};  // y <= w with P_{y,w} != 0, decreasing
    for (ElementId x = w - 1; x >= 0; --x) {
      if (r[w][x].c.empty() || r[w][x].is_zero()) continue;  // x not below w
      Laurent sum;
      for (ElementId y : interval) {
        const Laurent& rxy = r[y][x];
        if (rxy.c.empty()) continue;
        Laurent py;
        py.c = table[w][y].coeffs;
        for (std::size_t k = 0; k < rxy.c.size(); ++k)
          if (rxy.c[k] != 0) sum.add(py, rxy.lo + static_cast<int>(k), rxy.c[k]);
      }
      const int lwx = g.length(w) - g.length(x);
      const int deg = (lwx - 1) / 2;
      KLPolynomial p;
      for (int k = 0; k <= deg; ++k) p.coeffs.push_back(-sum.at(k));
      p.trim();
      // the remaining terms must be q^{l(w)-l(x)} P(1/q)
      for (int k = deg + 1; k <= lwx; ++k)
        if (sum.at(k) != p.coefficient(lwx - k))
          throw std::logic_error("bar-involution solve is inconsistent");
      if (p.is_zero()) throw std::logic_error("vanishing KL polynomial inside a Bruhat interval");
      table[w][x] = std::move(p);
      interval.push_back(x);
    }
  }
  return table;
}

std::vector<std::vector<char>> bruhat_reflection_closure(const WeylGroup& g) {
  const int n = g.size();
  std::set<ElementId> reflections;
  for (ElementId w = 0; w < n; ++w)
    for (int s = 0; s < g.rank(); ++s) reflections.insert(g.multiply(g.right_mul(w, s), g.inverse(w)));
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (ElementId x = n - 1; x >= 0; --x) {
    leq[x][x] = 1;
    for (ElementId t : reflections) {
      const ElementId xt = g.multiply(x, t);
      if (g.length(xt) != g.length(x) + 1) continue;
      for (ElementId w = 0; w < n; ++w)
        if (leq[xt][w]) leq[x][w] = 1;
    }
  }
  return leq;
}

std::map<std::vector<int>, std::int64_t> pbw_monomial_count(const std::vector<std::vector<int>>& weights,
                                                             const std::vector<int>& theta, int depth) {
  std::vector<int> cost;
  for (const auto& mu : weights) {
    int pairing = 0;
    for (std::size_t c = 0; c < mu.size(); ++c) pairing += theta.at(c) * mu[c];
    if (pairing >= 0) throw DomainError("PBW generator weight is not negative on theta");
    cost.push_back(-pairing);
  }
  std::map<std::vector<int>, std::int64_t> count;
  std::vector<int> exps(weights.size(), 0);
  const std::size_t dim = theta.size();
  // odometer over exponent vectors with bounded total cost
  auto recurse = [&](auto&& self, std::size_t i, int budget) -> void {
    if (i == weights.size()) {
      std::vector<int> w(dim, 0);
      for (std::size_t k = 0; k < weights.size(); ++k)
        for (std::size_t c = 0; c < dim; ++c) w[c] += exps[k] * weights[k][c];
      ++count[w];
      return;
    }
    for (int e = 0; e * cost[i] <= budget; ++e) {
      exps[i] = e;
      self(self, i + 1, budget - e * cost[i]);
    }
    exps[i] = 0;
  };
  recurse(recurse, 0, depth);
  return count;
}

namespace {

// rank over F2 of bit-vector rows
int f2_rank(std::vector<std::uint64_t> rows) {
  int rank = 0;
  for (int bit = 0; bit < 64; ++bit) {
    auto it = std::find_if(rows.begin() + rank, rows.end(), [bit](std::uint64_t r) { return (r >> bit) & 1; });
    if (it == rows.end()) continue;
    std::swap(*it, rows[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (static_cast<int>(i) != rank && ((rows[i] >> bit) & 1)) rows[i] ^= rows[rank];
    ++rank;
  }
  return rank;
}

}  // namespace

long long component_group(const OrbitLabel& o, GroupForm form) {
  const Partition& p = o.partition;
  if (o.type.family == Family::A) {
    if (form != GroupForm::Special) return 1;
    // n-th roots of unity z with z^{lambda_i} = 1 for every part: the scalars of SL_n
    // meeting every factor GL_{n_i} in a finite subgroup
    const int n = p.size();
    long long count = 0;
    for (int j = 0; j < n; ++j) {
      bool ok = true;
      for (int v : p.parts()) ok = ok && (static_cast<long long>(j) * v) % n == 0;
      count += ok;
    }
    return count;
  }
  if (form == GroupForm::Special) throw DomainError("the SL_n form only applies to type A");
  // orthogonal factors O_{n_i}: one F2 coordinate each (the determinant of the factor)
  std::vector<std::pair<int, int>> orth;  // (part, multiplicity)
  for (const CentralizerFactor& f : reductive_centralizer(o))
    if (f.kind == FactorKind::Orthogonal) orth.push_back({f.part, f.multiplicity});
  const int a = static_cast<int>(orth.size());
  if (form == GroupForm::Full) return 1LL << a;

  // subgroup: for SO, det on V = prod det(g_i)^{lambda_i} must be 1
  std::vector<std::uint64_t> basis;
  for (int i = 0; i < a; ++i) basis.push_back(std::uint64_t{1} << i);
  int dim = a;
  std::uint64_t det_functional = 0;
  for (int i = 0; i < a; ++i)
    if (orth[i].first % 2 == 1) det_functional |= std::uint64_t{1} << i;
  const bool orthogonal_ambient = o.type.family != Family::C;
  if (orthogonal_ambient && det_functional != 0) dim -= 1;
  // image of -1 (centre of SO_{2n} and Sp_{2n}; SO_{2n+1} has trivial centre)
  std::uint64_t minus_one = 0;
  for (int i = 0; i < a; ++i)
    if (orth[i].second % 2 == 1) minus_one |= std::uint64_t{1} << i;
  int quotient = 0;
  if (o.type.family != Family::B && minus_one != 0) {
    if (orthogonal_ambient && __builtin_popcountll(minus_one & det_functional) % 2 != 0)
      throw std::logic_error("-1 does not have determinant one");
    quotient = f2_rank({minus_one});
  }
  return 1LL << (dim - quotient);
}

int centralizer_dimension_gl(const OrbitLabel& o) {
  const SL2Triple t = realize_nilpotent(o);
  const int n = o.type.natural_dim();
  const MatrixAlgebra alg(o.type);
  const QMatrix& j = alg.gram();
  const bool type_a = o.type.family == Family::A;
  // unknown X = sum x_{ab} E_ab; equations [e, X] = 0 and X^T J + J X = 0
  const int eqs = type_a ? n * n : 2 * n * n;
  QMatrix m(eqs, n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const QMatrix u = QMatrix::unit(n, a, b);
      const QMatrix c = commutator(t.e, u);
      const int col = a * n + b;
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) m(i * n + k, col) = c(i, k);
      if (!type_a) {
        const QMatrix f = u.transposed() * j + j * u;
        for (int i = 0; i < n; ++i)
          for (int k = 0; k < n; ++k) m(n * n + i * n + k, col) = f(i, k);
      }
    }
  // the kernel of the stacked system is z_g(e)
  return n * n - m.rank();
}

}  // namespace orbitgr::oracle
