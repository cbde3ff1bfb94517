// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "orbitgr/cells.hpp"
#include "orbitgr/characters.hpp"
#include "orbitgr/goldie.hpp"
#include "orbitgr/kl.hpp"
#include "orbitgr/matrixlie.hpp"
#include "orbitgr/oracles.hpp"
#include "orbitgr/orbits.hpp"

using namespace orbitgr;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Records the first failure; later failures only bump the count.
struct Tally {
  long long compared = 0;
  long long failures = 0;
  std::string first;

  void check(bool cond, const std::string& what) {
    ++compared;
    if (cond) return;
    if (failures++ == 0) first = what;
  }
  Outcome outcome(const std::string& summary) const {
    if (failures == 0) return {true, summary + " (" + std::to_string(compared) + " checks)"};
    return {false, std::to_string(failures) + " of " + std::to_string(compared) + " checks failed; first: " + first};
  }
};

std::vector<LieType> bcd_types(int max_rank) {
  std::vector<LieType> out;
  for (int r = 1; r <= max_rank; ++r) {
    out.emplace_back(Family::B, r);
    out.emplace_back(Family::C, r);
    if (r >= 2) out.emplace_back(Family::D, r);
  }
  return out;
}

Outcome collapse_oracle() {
  Tally t;
  for (int n = 1; n <= 14; ++n)
    for (const Partition& p : all_partitions(n))
      for (Family f : {Family::B, Family::C, Family::D}) {
        if ((f == Family::B) != (n % 2 == 1)) continue;
        t.check(collapse(p, f) == oracle::collapse(p, f),
                std::string(1, family_letter(f)) + "-collapse of " + p.str());
      }
  return t.outcome("constructive collapse equals the dominance maximum for n <= 14");
}

Outcome duality_involution() {
  Tally t;
  std::vector<LieType> types;
  for (int n = 1; n <= 12; ++n) {
    if (n >= 2) types.emplace_back(Family::A, n - 1);
    if (n % 2 == 1 && n >= 3) types.emplace_back(Family::B, n / 2);
    if (n % 2 == 0) types.emplace_back(Family::C, n / 2);
    if (n % 2 == 0 && n >= 4) types.emplace_back(Family::D, n / 2);
  }
  for (const LieType& type : types) {
    std::vector<OrbitLabel> special;
    for (const OrbitLabel& o : all_orbits(type))
      if (is_special(o.partition, type)) special.push_back(o);
    for (const OrbitLabel& a : special) {
      const OrbitLabel d = bvs_dual(a);
      t.check(bvs_dual(d).partition == a.partition, "dual of dual of " + a.str());
      for (const OrbitLabel& b : special)
        if (dominance_leq(a.partition, b.partition))
          t.check(dominance_leq(bvs_dual(b).partition, d.partition), "order reversal for " + a.str() + " <= " + b.str());
    }
  }
  return t.outcome("dual is an order-reversing involution on special labels of size <= 12");
}

Outcome induction_codimension() {
  Tally t;
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int rank = 1; rank <= 5; ++rank) {
      if (f == Family::D && rank < 2) continue;
      const LieType ambient(f, rank);
      const int total = f == Family::A ? rank + 1 : rank;
      for (int m = 1; m <= total; ++m) {
        LeviDescriptor levi;
        levi.family = f;
        levi.gl_blocks = {m};
        levi.residual_rank = total - m;
        if (f == Family::A && levi.residual_rank == 0) continue;
        if (f == Family::D && levi.residual_rank == 1) continue;
        const Partition seed = Partition::single_column(levi.residual_natural_dim());
        const OrbitLabel induced = ls_induce(ambient, levi, seed);
        t.check(ambient.algebra_dim() - orbit_dimension(induced) == levi.dimension(),
                "induction to " + ambient.str() + " from " + levi.str());
      }
    }
  return t.outcome("single-block induction from the zero orbit preserves codimension at rank <= 5");
}

bool all_parts_have_parity(const Partition& p, int parity) {
  for (std::size_t i = 0; i < p.length(); ++i)
    if (p.part(i) % 2 != parity) return false;
  return true;
}

Outcome weakly_rigid_chain() {
  Tally t;
  int matched = 0;
  for (const LieType& type : bcd_types(6))
    for (const OrbitLabel& o : all_orbits(type)) {
      if (!is_special(o.partition, type) || !is_weakly_rigid_pattern(o)) continue;
      ++matched;
      const OrbitLabel d = bvs_dual(o);
      // B duals live in type C and have even parts; C and D duals have odd parts
      const int parity = type.family == Family::B ? 0 : 1;
      t.check(all_parts_have_parity(d.partition, parity), "parts of the dual " + d.str() + " of " + o.str());
      t.check(is_even_orbit(d), "dual " + d.str() + " is even");
      const Weight w = abv_weight(o);
      t.check(RootSystem(type).in_weight_lattice(w), "ABV weight " + w.str() + " lies in the weight lattice");
    }
  return t.outcome(std::to_string(matched) + " pattern labels at rank <= 6 have even duals and ABV weights in the weight lattice");
}

Outcome kl_oracle() {
  Tally t;
  for (const char* name : {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "D4"}) {
    const WeylGroup g = WeylGroup::parse(name);
    const KLTable table(g);
    const auto ref = oracle::kl_bar_involution(g);
    for (ElementId w = 0; w < g.size(); ++w)
      for (ElementId x = 0; x < g.size(); ++x)
        t.check(table.poly(x, w) == ref[w][x], std::string(name) + " P(" + g.str(x) + ", " + g.str(w) + ")");
  }
  for (int m = 2; m <= 10; ++m) {
    const WeylGroup g = WeylGroup::dihedral(m);
    const KLTable table(g);
    for (ElementId w = 0; w < g.size(); ++w)
      for (ElementId x = 0; x < g.size(); ++x)
        if (g.bruhat_leq(x, w)) t.check(table.poly(x, w).str() == "1", g.name() + " polynomial is not 1");
  }
  const WeylGroup s4 = WeylGroup::parse("A3");
  const KLTable t4(s4);
  t.check(t4.poly(s4.parse_element("s2"), s4.parse_element("s2s1s3s2")).str() == "1+q", "S4 polynomial 1+q");
  return t.outcome("recursion equals the bar-involution solve for A1-A5, B2-B4, D4; dihedral all ones; S4 has 1+q");
}

Outcome cells_vs_rsk() {
  Tally t;
  for (int n = 2; n <= 5; ++n) {
    const WeylGroup g = WeylGroup::classical(LieType(Family::A, n - 1));
    const KLTable table(g);
    const CellPartition left = compute_cells(table, CellKind::Left);
    const CellPartition two = compute_cells(table, CellKind::TwoSided);
    std::vector<RSKPair> labels;
    for (ElementId w = 0; w < g.size(); ++w) labels.push_back(rsk_label(g, w));
    for (ElementId x = 0; x < g.size(); ++x)
      for (ElementId y = 0; y < g.size(); ++y)
        t.check((left.cell_of[x] == left.cell_of[y]) == (labels[x].recording == labels[y].recording),
                "S" + std::to_string(n) + " left cell of " + g.str(x) + " vs " + g.str(y));
    t.check(two.count() == static_cast<int>(all_partitions(n).size()), "S" + std::to_string(n) + " two-sided count");
  }
  return t.outcome("left cells of S_n are recording-tableau classes and two-sided cells count partitions, n <= 5");
}

std::vector<int> integral_coords(const Weight& w) {
  std::vector<int> out;
  for (int d : w.doubled()) out.push_back(d / 2);
  return out;
}

Partition random_partition(int n, std::mt19937& rng) {
  const auto all = all_partitions(n);
  return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
}

Outcome verma_pbw() {
  Tally t;
  std::mt19937 rng(20261019);
  int made = 0;
  std::string summary;
  while (made < 20) {
    const Family f = static_cast<Family>(std::uniform_int_distribution<int>(0, 3)(rng));
    const int rank = std::uniform_int_distribution<int>(f == Family::D ? 2 : 1, 5)(rng);
    const LieType ambient(f, rank);
    const int total = f == Family::A ? rank + 1 : rank;
    LeviNilpotent nil;
    nil.levi.family = f;
    int left = total;
    // random composition into gl blocks, the remainder going to the residual factor
    while (left > 0 && std::uniform_int_distribution<int>(0, 3)(rng) != 0) {
      const int m = std::uniform_int_distribution<int>(1, left)(rng);
      nil.levi.gl_blocks.push_back(m);
      left -= m;
    }
    nil.levi.residual_rank = left;
    if (nil.levi.gl_blocks.empty()) continue;
    if (f == Family::A && left == 0) continue;
    if (f == Family::D && left == 1) continue;
    for (int m : nil.levi.gl_blocks) nil.block_orbits.push_back(random_partition(m, rng));
    if (f == Family::A) {
      nil.residual_orbit = random_partition(left, rng);
    } else if (left == 0) {
      nil.residual_orbit = Partition::single_column(nil.levi.residual_natural_dim());
    } else {
      const auto orbits = all_orbits(LieType(f, left));
      nil.residual_orbit = orbits[std::uniform_int_distribution<std::size_t>(0, orbits.size() - 1)(rng)].partition;
    }
    const CentralizerGrading grading = centralizer_grading(ambient, nil);
    const auto mus = grading.negative_weights();
    if (mus.empty()) continue;
    ++made;
    const FormalCharacter ch = verma_character(Weight(grading.theta.size()), 1, grading);
    const int depth = 10;
    const auto series = ch.expand(depth);
    const auto ref = oracle::pbw_monomial_count(mus, grading.theta, depth);
    const std::string tag = ambient.str() + " Levi " + nil.levi.str();
    t.check(series.size() == ref.size(), tag + ": support sizes differ");
    for (const auto& [w, c] : series) {
      const auto it = ref.find(integral_coords(w));
      t.check(it != ref.end() && c == Rational(it->second), tag + ": coefficient at " + w.str());
    }
  }
  return t.outcome("Verma coefficients equal PBW monomial counts to depth 10 on 20 random gradings");
}

struct BlockCase {
  LieType type;
  const char* levi;
  bool regular;
  std::optional<Weight> rho0;
};

Outcome pipeline_consistency() {
  Tally t;
  std::vector<BlockCase> cases;
  const std::vector<std::optional<Weight>> a2_rho = {std::nullopt, Weight::parse("2,0,-1"), Weight::parse("3,1,0")};
  const std::vector<std::optional<Weight>> b2_rho = {std::nullopt, Weight::parse("5/2,1/2"), Weight::parse("2,1"),
                                                     Weight::parse("3,1")};
  for (const char* l : {"1,1|1", "2|1", "1|2"})
    for (bool reg : {false, true})
      for (const auto& r : a2_rho) cases.push_back({LieType(Family::A, 2), l, reg, r});
  for (const char* l : {"1,1|0", "2|0", "1|1"})
    for (bool reg : {false, true})
      for (const auto& r : b2_rho) cases.push_back({LieType(Family::B, 2), l, reg, r});

  for (const BlockCase& c : cases) {
    const LeviDescriptor levi = LeviDescriptor::parse(c.type.family, c.levi);
    const CharacterPipeline p(c.type, c.regular ? LeviNilpotent::regular(levi) : LeviNilpotent::zero(levi), c.rho0);
    const std::string tag = c.type.str() + " Levi " + c.levi + (c.regular ? " e regular" : " e zero") + " rho0 " +
                            p.rho0().str();
    const WeylGroup& g = p.group();
    const std::vector<ElementId> labels = p.labels();
    const int n = static_cast<int>(labels.size());
    std::map<ElementId, int> index;
    for (int i = 0; i < n; ++i) index[labels[i]] = i;

    // c-matrix: L(w) = sum_u c_{wu} Delta_P(u)
    QMatrix cm(n, n);
    for (int a = 0; a < n; ++a) {
      const DecompositionRow row = parabolic_verma_decomposition(p.table(), labels[a], p.j());
      for (const auto& [u, coeff] : row.entries) {
        const auto it = index.find(u);
        t.check(it != index.end(), tag + ": c-row of " + g.str(labels[a]) + " leaves the labels");
        if (it != index.end()) cm(a, it->second) = Rational(coeff);
      }
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (a == b) t.check(cm(a, b) == Rational(1), tag + ": diagonal of the c-matrix");
        else if (!cm(a, b).is_zero())
          t.check(g.bruhat_leq(labels[a], labels[b]) && labels[a] != labels[b], tag + ": c-matrix is not unitriangular");
      }

    std::vector<FormalCharacter> simples;
    for (ElementId w : labels) {
      FormalCharacter ch = simple_character(p, parabolic_verma_decomposition(p.table(), w, p.j()), {}, 0);
      for (const auto& [nu, coeff] : ch.expand(10))
        t.check(coeff.is_integer() && coeff >= Rational(0), tag + ": coefficient of L(" + g.str(w) + ") at " + nu.str());
      simples.push_back(std::move(ch));
    }

    // Delta_P(u) = sum_w (c^{-1})_{uw} L(w)
    const QMatrix inv = cm.inverse();
    for (int a = 0; a < n; ++a) {
      FormalCharacter sum = simples[0].scaled(0);
      for (int b = 0; b < n; ++b)
        if (!inv(a, b).is_zero()) sum = sum + simples[b].scaled(inv(a, b));
      t.check(same_character(sum, p.parabolic_verma_image(p.act(labels[a], p.rho0()))),
              tag + ": Verma image of " + g.str(labels[a]));
    }
  }
  return t.outcome(std::to_string(cases.size()) + " A2/B2 blocks: unitriangular c-matrices, exact inversion, nonnegative simples");
}

Outcome sl2_end_to_end() {
  Tally t;
  const CharacterPipeline p(LieType(Family::A, 1), LeviNilpotent::zero(LeviDescriptor::parse(Family::A, "1|1")));
  const FormalCharacter triv = p.simple_character(p.group().identity());
  const auto series = triv.expand(10);
  t.check(series.size() == 1 && series.begin()->first.is_zero() && series.begin()->second == Rational(1),
          "trivial character expands to 1");
  t.check(finite_dimension(triv) == 1, "finite dimension 1");
  const GoldieReport r = goldie_report(p, p.group().identity(), TripleData::duflo(1, 1, 1));
  t.check(r.goldie_rank == Rational(1), "Goldie rank 1");
  t.check(r.scale_factor == 1, "scale factor 1");
  return t.outcome("sl2 trivial module: character 1, dimension 1, Goldie rank 1, z = 1");
}

Rational random_pr(std::mt19937& rng) {
  const int den = std::uniform_int_distribution<int>(1, 6)(rng);
  const int num = std::uniform_int_distribution<int>(den, 4 * den)(rng);
  return Rational(num, den);
}

Outcome formula_identities() {
  Tally t;
  std::mt19937 rng(1003);
  for (int i = 0; i < 1000; ++i) {
    // elementary abelian 2-groups: A_x, A_y subgroups of Abar, A_(x,y) their intersection
    const int k = std::uniform_int_distribution<int>(0, 4)(rng);
    const int kx = std::uniform_int_distribution<int>(0, k)(rng);
    const int ky = std::uniform_int_distribution<int>(0, k)(rng);
    const int lo = std::max(0, kx + ky - k), hi = std::min(kx, ky);
    const int kxy = std::uniform_int_distribution<int>(lo, hi)(rng);
    TripleData d;
    d.abar_order = 1LL << k;
    d.a_x_order = 1LL << kx;
    d.a_y_order = 1LL << ky;
    d.a_xy_order = 1LL << kxy;
    d.dim_v = std::uniform_int_distribution<int>(1, 4)(rng);
    d.d_x = std::uniform_int_distribution<int>(1, 60)(rng);
    d.d_y = std::uniform_int_distribution<int>(1, 60)(rng);
    const Rational px = random_pr(rng), py = random_pr(rng);
    try {
      const std::int64_t z = scale_factor(d);
      const std::int64_t m = bimodule_multiplicity(d);
      t.check(z >= 1, "scale factor below 1");
      t.check(m == d.d_x * d.d_y * d.dim_v * (d.abar_order / d.a_xy_order), "multiplicity formula");
      t.check(scale_factor_via_premet(1, 1, d) == Rational(z), "Premet factor at pr = 1");
      t.check(scale_factor_via_premet(px, py, d) * py / px == Rational(z), "Premet factor consistency");
      const auto [lhs, rhs] = proportion_sides(px, py, d);
      t.check(lhs == rhs, "proportion identity at pr_x = " + px.str() + ", pr_y = " + py.str());
    } catch (const DomainError& e) {
      t.check(false, std::string("integrality assertion fired: ") + e.what());
    }
  }
  return t.outcome("1000 random consistent triples satisfy the scale-factor identities");
}

Outcome dimension_vs_kernels() {
  Tally t;
  std::vector<LieType> types = bcd_types(6);
  for (int n = 2; n <= 8; ++n) types.emplace_back(Family::A, n - 1);
  for (const LieType& type : types)
    for (const OrbitLabel& o : all_orbits(type))
      t.check(orbit_dimension(o) == type.algebra_dim() - centralizer_dimension(o), "dimension of " + o.str());
  return t.outcome("orbit dimensions equal dim g - dim ker ad(e) for B/C/D rank <= 6 and gl_n, n <= 8");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;  // 0 for no limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "collapse oracle", 10, collapse_oracle},
      {2, "duality involution and order reversal", 5, duality_involution},
      {3, "induction codimension", 5, induction_codimension},
      {4, "weakly rigid pattern chain", 5, weakly_rigid_chain},
      {5, "KL oracle equivalence", 60, kl_oracle},
      {6, "cells vs RSK", 60, cells_vs_rsk},
      {7, "Verma character vs PBW count", 0, verma_pbw},
      {8, "character pipeline consistency", 30, pipeline_consistency},
      {9, "sl2 end to end", 0, sl2_end_to_end},
      {10, "formula layer identities", 1, formula_identities},
      {11, "dimension formulas vs matrix kernels", 120, dimension_vs_kernels},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = o.ok;
    std::string timing = std::to_string(secs).substr(0, std::to_string(secs).find('.') + 3) + " s";
    if (c.limit_seconds > 0) {
      timing += ", limit " + std::to_string(static_cast<int>(c.limit_seconds)) + " s";
      if (secs > c.limit_seconds) {
        ok = false;
        o.detail += "; time limit exceeded";
      }
    }
    failed += !ok;
    std::printf("[%s] %2d %s: %s [%s]\n", ok ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), timing.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
