#include "orbitgr/orbits.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

namespace orbitgr {

namespace {

int sum_of_squares(const Partition& p) {
  int s = 0;
  for (int v : p.parts()) s += v * v;
  return s;
}

int count_odd_parts(const Partition& p) {
  return static_cast<int>(std::count_if(p.parts().begin(), p.parts().end(), [](int v) { return v % 2 == 1; }));
}

void require_special(const OrbitLabel& o, const char* op) {
  if (!is_special(o.partition, o.type))
    throw DomainError(std::string(op) + ": orbit " + o.str() + " is not special");
}

}  // namespace

OrbitLabel::OrbitLabel(LieType t, Partition p, VeryEvenTag tg) : type(t), partition(std::move(p)), tag(tg) {
  if (!is_type(partition, type))
    throw DomainError("partition " + partition.str() + " is not of type " + type.str());
  if (is_very_even()) {
    if (tag == VeryEvenTag::None) tag = VeryEvenTag::I;
  } else {
    tag = VeryEvenTag::None;
  }
}

bool OrbitLabel::is_very_even() const {
  if (type.family != Family::D) return false;
  for (int v : partition.parts())
    if (v % 2 != 0) return false;
  return true;
}

bool OrbitLabel::is_zero() const {
  return partition.empty() || partition.parts().front() == 1;
}

bool OrbitLabel::is_regular() const { return partition == collapse(Partition::single_row(type.natural_dim()), type); }

OrbitLabel OrbitLabel::parse(std::string_view text) {
  std::size_t colon = text.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("orbit label needs the form TYPE:PARTS, got '" + std::string(text) + "'");
  LieType t = LieType::parse(text.substr(0, colon));
  std::string_view rest = text.substr(colon + 1);
  VeryEvenTag tag = VeryEvenTag::None;
  std::size_t colon2 = rest.find(':');
  if (colon2 != std::string_view::npos) {
    std::string_view tg = rest.substr(colon2 + 1);
    if (tg == "I") tag = VeryEvenTag::I;
    else if (tg == "II") tag = VeryEvenTag::II;
    else throw std::invalid_argument("very even tag must be I or II");
    rest = rest.substr(0, colon2);
  }
  return OrbitLabel(t, Partition::parse(rest), tag);
}

std::string OrbitLabel::str() const {
  std::string s = type.str() + ":" + partition.str();
  if (tag == VeryEvenTag::I) s += ":I";
  if (tag == VeryEvenTag::II) s += ":II";
  return s;
}

OrbitLabel zero_orbit(const LieType& t) { return {t, Partition::single_column(t.natural_dim())}; }

OrbitLabel regular_orbit(const LieType& t) {
  return {t, collapse(Partition::single_row(t.natural_dim()), t)};
}

std::vector<OrbitLabel> all_orbits(const LieType& t) {
  std::vector<OrbitLabel> out;
  for (const Partition& p : all_partitions(t.natural_dim()))
    if (has_family_parity(p, t.family)) out.emplace_back(t, p);
  return out;
}

LieType LeviDescriptor::ambient() const {
  int r = residual_rank + std::accumulate(gl_blocks.begin(), gl_blocks.end(), 0);
  if (family == Family::A) return {Family::A, r - 1};
  return {family, r};
}

int LeviDescriptor::residual_natural_dim() const {
  switch (family) {
    case Family::A: return residual_rank;
    case Family::B: return 2 * residual_rank + 1;
    case Family::C:
    case Family::D: return 2 * residual_rank;
  }
  return 0;
}

int LeviDescriptor::dimension() const {
  int d = 0;
  for (int m : gl_blocks) d += m * m;
  const int n0 = residual_natural_dim();
  switch (family) {
    case Family::A: return d + n0 * n0;
    case Family::B:
    case Family::D: return d + n0 * (n0 - 1) / 2;
    case Family::C: return d + n0 * (n0 + 1) / 2;
  }
  return d;
}

void LeviDescriptor::validate_against(const LieType& amb) const {
  if (family != amb.family) throw DomainError("Levi family does not match the ambient type");
  for (int m : gl_blocks)
    if (m <= 0) throw DomainError("gl blocks must be positive");
  if (residual_rank < 0) throw DomainError("residual rank must be nonnegative");
  const LieType a = ambient();
  if (a.rank != amb.rank) throw DomainError("Levi " + str() + " does not fit in " + amb.str());
}

LeviDescriptor LeviDescriptor::parse(Family family, std::string_view text) {
  LeviDescriptor l;
  l.family = family;
  std::size_t bar = text.find('|');
  std::string_view blocks = text.substr(0, bar);
  auto read = [](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
      throw std::invalid_argument("bad Levi block '" + std::string(s) + "'");
    return v;
  };
  std::size_t pos = 0;
  while (!blocks.empty() && pos <= blocks.size()) {
    std::size_t next = blocks.find(',', pos);
    if (next == std::string_view::npos) next = blocks.size();
    l.gl_blocks.push_back(read(blocks.substr(pos, next - pos)));
    pos = next + 1;
  }
  if (bar != std::string_view::npos) l.residual_rank = read(text.substr(bar + 1));
  return l;
}

std::string LeviDescriptor::str() const {
  std::string s;
  for (std::size_t i = 0; i < gl_blocks.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(gl_blocks[i]);
  }
  return s + "|" + std::to_string(residual_rank);
}

int orbit_dimension(const OrbitLabel& o) {
  const Partition pt = transpose(o.partition);
  const int sq = sum_of_squares(pt);
  const int odd = count_odd_parts(o.partition);
  const int dim_g = o.type.algebra_dim();
  switch (o.type.family) {
    case Family::A: return dim_g - sq;
    case Family::B:
    case Family::D: return dim_g - (sq - odd) / 2;
    case Family::C: return dim_g - (sq + odd) / 2;
  }
  return 0;
}

OrbitLabel ls_induce(const LieType& ambient, const LeviDescriptor& levi, const Partition& seed) {
  levi.validate_against(ambient);
  if (seed.size() != levi.residual_natural_dim())
    throw DomainError("seed partition " + seed.str() + " does not have size " +
                      std::to_string(levi.residual_natural_dim()));
  if (!has_family_parity(seed, ambient.family))
    throw DomainError("seed partition " + seed.str() + " is not an orbit of the residual factor");
  const int step = ambient.family == Family::A ? 1 : 2;
  Partition current = seed;
  for (auto it = levi.gl_blocks.rbegin(); it != levi.gl_blocks.rend(); ++it) {
    const int m = *it;
    std::vector<int> parts = current.parts();
    if (parts.size() < static_cast<std::size_t>(m) + 1) parts.resize(m + 1, 0);
    for (int i = 0; i < m; ++i) parts[i] += step;
    current = collapse(Partition(parts), ambient.family);
  }
  if (current.size() != ambient.natural_dim())
    throw DomainError("induction bookkeeping failed: size " + std::to_string(current.size()));
  return {ambient, current};
}

OrbitLabel bvs_dual(const OrbitLabel& o) {
  require_special(o, "bvs_dual");
  std::vector<int> t = transpose(o.partition).parts();
  switch (o.type.family) {
    case Family::A: return {o.type, Partition(t)};
    case Family::B: {
      t.back() -= 1;  // l(): lower the smallest part
      return {o.type.dual(), collapse(Partition(t), Family::C)};
    }
    case Family::C: {
      if (t.empty()) t.push_back(0);
      t.front() += 1;  // r(): raise the largest part
      return {o.type.dual(), collapse(Partition(t), Family::B)};
    }
    case Family::D: return {o.type, collapse(Partition(t), Family::D)};
  }
  return o;
}

bool is_weakly_rigid_pattern(const OrbitLabel& o) {
  require_special(o, "is_weakly_rigid_pattern");
  const Partition& p = o.partition;
  if (o.type.family == Family::A) return o.is_zero();
  const int top = p.parts().front();
  // Every value top, top-1, ..., 1 must occur.
  for (int v = top; v >= 1; --v)
    if (p.multiplicity(v) == 0) return false;
  if (o.type.family == Family::B) {
    if (top % 2 == 0) return false;
    if (p.multiplicity(top) % 2 != 1) return false;
    for (int v = top - 1; v >= 1; --v)
      if (p.multiplicity(v) % 2 != 0) return false;
    return true;
  }
  for (int v = top; v >= 1; --v)
    if (p.multiplicity(v) % 2 != 0) return false;
  return true;
}

std::vector<CentralizerFactor> reductive_centralizer(const OrbitLabel& o) {
  std::vector<CentralizerFactor> out;
  for (int v : o.partition.distinct_parts()) {
    FactorKind kind = FactorKind::General;
    if (o.type.family == Family::B || o.type.family == Family::D)
      kind = v % 2 == 1 ? FactorKind::Orthogonal : FactorKind::Symplectic;
    else if (o.type.family == Family::C)
      kind = v % 2 == 0 ? FactorKind::Orthogonal : FactorKind::Symplectic;
    out.push_back({kind, v, o.partition.multiplicity(v)});
  }
  return out;
}

long long component_group_order(const OrbitLabel& o, GroupForm form) {
  const Partition& p = o.partition;
  if (o.type.family == Family::A) {
    // GL_n and PGL_n centralizers are connected; SL_n gives Z/gcd(parts).
    if (form != GroupForm::Special) return 1;
    int g = 0;
    for (int v : p.parts()) g = std::gcd(g, v);
    return g;
  }
  if (form == GroupForm::Special) throw DomainError("the SL_n form only applies to type A");
  // Orthogonal factors: odd parts in B/D, even parts in C. Each contributes one Z/2.
  const int orth_parity = o.type.family == Family::C ? 0 : 1;
  int a = 0;
  bool some_odd_multiplicity = false;
  for (int v : p.distinct_parts()) {
    if (v % 2 != orth_parity) continue;
    ++a;
    if (p.multiplicity(v) % 2 == 1) some_odd_multiplicity = true;
  }
  if (form == GroupForm::Full) return 1LL << a;
  // Adjoint forms. Quotient table:
  //   B  SO_{2n+1}: determinant-one subgroup, 2^{a-1}.
  //   C  PSp_{2n}:  divide by the image of -1, nontrivial iff some even part has odd multiplicity.
  //   D  PSO_{2n}:  determinant-one subgroup, then divide by the image of -1 (nontrivial iff
  //                 some odd part has odd multiplicity).
  switch (o.type.family) {
    case Family::B: return 1LL << std::max(0, a - 1);
    case Family::C: return 1LL << (some_odd_multiplicity ? a - 1 : a);
    case Family::D: {
      int e = std::max(0, a - 1);
      if (some_odd_multiplicity) e -= 1;
      return 1LL << std::max(0, e);
    }
    default: return 1;
  }
}

std::vector<int> h_eigenvalues(const Partition& p) {
  std::vector<int> h;
  for (int m : p.parts())
    for (int k = m - 1; k >= 1 - m; k -= 2) h.push_back(k);
  std::sort(h.begin(), h.end(), std::greater<>());
  return h;
}

Weight abv_weight(const OrbitLabel& o) {
  const OrbitLabel dual = bvs_dual(o);
  const std::vector<int> h = h_eigenvalues(dual.partition);
  const int coords = o.type.family == Family::A ? o.type.rank + 1 : o.type.rank;
  // h is symmetric about 0; its dominant representative in epsilon coordinates is
  // the first `coords` entries of the decreasing list. Halving h doubles nothing.
  std::vector<int> doubled(h.begin(), h.begin() + coords);
  return Weight::from_doubled(doubled);
}

bool is_even_orbit(const OrbitLabel& o) {
  const auto& parts = o.partition.parts();
  const bool all_odd = std::all_of(parts.begin(), parts.end(), [](int v) { return v % 2 == 1; });
  const bool all_even = std::all_of(parts.begin(), parts.end(), [](int v) { return v % 2 == 0; });
  if (o.type.family == Family::B) return all_odd;
  return all_odd || all_even;
}

std::optional<int> richardson_min_codim(const std::vector<int>& composition) {
  for (int s : composition)
    if (s <= 0) throw DomainError("composition parts must be positive");
  const Partition rows(composition);
  const int n = rows.size();
  if (n == 0) throw DomainError("empty composition");
  auto dim = [&](const Partition& orbit) { return n * n - sum_of_squares(transpose(orbit)); };
  const Partition richardson = transpose(rows);
  std::optional<int> best;
  for (const Partition& below : dominance_covers_below(richardson)) {
    const int drop = dim(richardson) - dim(below);
    if (!best || drop < *best) best = drop;
  }
  if (!best) return std::nullopt;
  return *best / 2;
}

}  // namespace orbitgr
