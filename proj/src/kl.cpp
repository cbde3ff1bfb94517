#include "orbitgr/kl.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbitgr {

std::int64_t KLPolynomial::at_one() const {
  std::int64_t s = 0;
  for (std::int64_t c : coeffs) s += c;
  return s;
}

void KLPolynomial::trim() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

std::string KLPolynomial::str() const {
  if (coeffs.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    std::int64_t c = coeffs[k];
    if (c == 0) continue;
    if (!s.empty()) s += c > 0 ? "+" : "-";
    else if (c < 0) s += "-";
    const std::int64_t a = c < 0 ? -c : c;
    if (k == 0) {
      s += std::to_string(a);
      continue;
    }
    if (a != 1) s += std::to_string(a);
    s += "q";
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s;
}

namespace {

// p += factor * q^shift * a
void add_shifted(KLPolynomial& p, const KLPolynomial& a, int shift, std::int64_t factor) {
  if (a.is_zero()) return;
  if (p.coeffs.size() < a.coeffs.size() + shift) p.coeffs.resize(a.coeffs.size() + shift, 0);
  for (std::size_t k = 0; k < a.coeffs.size(); ++k) p.coeffs[k + shift] += factor * a.coeffs[k];
}

int first_bit(GeneratorMask m) {
  int s = 0;
  while (!((m >> s) & 1)) ++s;
  return s;
}

}  // namespace

KLTable::KLTable(const WeylGroup& group, Execution execution) : group_(&group) {
  const WeylGroup& g = group;
  const int n = g.size();
  rows_.assign(n, std::vector<KLPolynomial>(n));
  mu_below_.assign(n, {});
  rows_[0][0].coeffs = {1};

  for (ElementId w = 1; w < n; ++w) {
    const int s = first_bit(g.descents_right(w));
    const ElementId v = g.right_mul(w, s);
    const int lw = g.length(w);
    std::vector<std::pair<ElementId, int>> terms;
    for (const auto& [z, m] : mu_below_[v])
      if (g.length(g.right_mul(z, s)) < g.length(z)) terms.push_back({z, m});
    const std::vector<KLPolynomial>& row_v = rows_[v];
    std::vector<KLPolynomial>& row_w = rows_[w];

    auto compute = [&](ElementId x) {
      if (g.length(x) > lw || !g.bruhat_leq(x, w)) return;
      const ElementId xs = g.right_mul(x, s);
      const int c = g.length(xs) < g.length(x) ? 1 : 0;
      KLPolynomial p;
      add_shifted(p, row_v[xs], 1 - c, 1);
      add_shifted(p, row_v[x], c, 1);
      for (const auto& [z, m] : terms) {
        const KLPolynomial& pxz = rows_[z][x];
        if (!pxz.is_zero()) add_shifted(p, pxz, (lw - g.length(z)) / 2, -m);
      }
      p.trim();
      row_w[x] = std::move(p);
    };
    if (execution == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
      for (ElementId x = 0; x <= w; ++x) compute(x);
    } else {
      for (ElementId x = 0; x <= w; ++x) compute(x);
    }

    for (ElementId x = 0; x < w; ++x) {
      const int d = lw - g.length(x);
      if (d % 2 == 0 || row_w[x].is_zero()) continue;
      const std::int64_t m = row_w[x].coefficient((d - 1) / 2);
      if (m != 0) mu_below_[w].push_back({x, static_cast<int>(m)});
    }
  }
}

const KLPolynomial& KLTable::poly(ElementId x, ElementId w) const {
  if (x < 0 || w < 0 || x >= group_->size() || w >= group_->size())
    throw DomainError("element id out of range");
  return rows_[w][x];
}

int KLTable::mu(ElementId x, ElementId w) const {
  const int d = group_->length(w) - group_->length(x);
  if (d <= 0 || d % 2 == 0) return 0;
  return static_cast<int>(poly(x, w).coefficient((d - 1) / 2));
}

std::int64_t DecompositionRow::coefficient(ElementId u) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), std::pair<ElementId, std::int64_t>{u, INT64_MIN});
  return (it != entries.end() && it->first == u) ? it->second : 0;
}

std::int64_t verma_multiplicity(const KLTable& table, ElementId w, ElementId x) {
  return table.poly(w, x).at_one();
}

DecompositionRow inverse_kl_decomposition(const KLTable& table, ElementId w) {
  const WeylGroup& g = table.group();
  DecompositionRow row;
  row.w = w;
  const ElementId w0 = g.longest();
  const ElementId w0w = g.multiply(w0, w);
  for (ElementId x = 0; x < g.size(); ++x) {
    const KLPolynomial& p = table.poly(g.multiply(w0, x), w0w);
    if (p.is_zero()) continue;
    const std::int64_t sign = (g.length(x) - g.length(w)) % 2 == 0 ? 1 : -1;
    row.entries.push_back({x, sign * p.at_one()});
  }
  return row;
}

DecompositionRow parabolic_verma_decomposition(const KLTable& table, ElementId w, GeneratorMask j) {
  const WeylGroup& g = table.group();
  if ((j & ~g.all_generators()) != 0) throw DomainError("generator set out of range");
  if ((g.descents_left(w) & j) != 0)
    throw DomainError("L(" + g.str(w) + ") is not in the parabolic category: left descent in J");
  const DecompositionRow ordinary = inverse_kl_decomposition(table, w);
  DecompositionRow row;
  row.w = w;
  for (const auto& [x, c] : ordinary.entries)
    if ((g.descents_left(x) & j) == 0) row.entries.push_back({x, c});

  // every x = v u with v in W_J must carry (-1)^{l(v)} c_{wu}
  for (ElementId x = 0; x < g.size(); ++x) {
    ElementId u = x;
    int lv = 0;
    for (GeneratorMask d = g.descents_left(u) & j; d != 0; d = g.descents_left(u) & j) {
      u = g.left_mul(first_bit(d), u);
      ++lv;
    }
    const std::int64_t expected = (lv % 2 == 0 ? 1 : -1) * row.coefficient(u);
    if (ordinary.coefficient(x) != expected)
      throw std::logic_error("parabolic decomposition inconsistent at " + g.str(x));
  }
  return row;
}

QMatrix multiplicity_matrix(const KLTable& table, const std::vector<ElementId>& labels) {
  const int n = static_cast<int>(labels.size());
  QMatrix m(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m(a, b) = verma_multiplicity(table, labels[a], labels[b]);
  return m;
}

}  // namespace orbitgr
