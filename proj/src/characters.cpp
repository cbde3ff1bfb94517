#include "orbitgr/characters.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace orbitgr {

namespace {

void add_to(std::map<Weight, Rational>& m, const Weight& nu, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.emplace(nu, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) m.erase(it);
}

// p * (1 - e^mu)
std::map<Weight, Rational> times_factor(const std::map<Weight, Rational>& p, const Weight& mu) {
  std::map<Weight, Rational> out = p;
  for (const auto& [nu, c] : p) add_to(out, nu + mu, -c);
  return out;
}

void check_dims(const std::vector<int>& theta, const Weight& nu) {
  if (nu.size() != theta.size())
    throw DomainError("weight " + nu.str() + " has " + std::to_string(nu.size()) + " coordinates, expected " +
                      std::to_string(theta.size()));
}

int ceil_half(int v) { return v >= 0 ? (v + 1) / 2 : -((-v) / 2); }

}  // namespace

FormalCharacter::FormalCharacter(std::vector<int> theta, std::vector<Weight> denominators)
    : theta_(std::move(theta)), denominators_(std::move(denominators)) {
  for (const Weight& mu : denominators_) {
    check_dims(theta_, mu);
    if (pairing_doubled(mu) >= 0)
      throw DomainError("denominator weight " + mu.str() + " is not negative on theta");
  }
  std::sort(denominators_.begin(), denominators_.end());
}

int FormalCharacter::pairing_doubled(const Weight& nu) const {
  long long s = 0;
  for (std::size_t i = 0; i < theta_.size(); ++i) s += static_cast<long long>(theta_[i]) * nu.doubled()[i];
  return static_cast<int>(s);
}

void FormalCharacter::add_term(const Weight& nu, const Rational& c) {
  check_dims(theta_, nu);
  add_to(numerator_, nu, c);
}

FormalCharacter FormalCharacter::scaled(const Rational& c) const {
  FormalCharacter out(theta_, denominators_);
  for (const auto& [nu, v] : numerator_) add_to(out.numerator_, nu, v * c);
  return out;
}

FormalCharacter FormalCharacter::operator+(const FormalCharacter& o) const {
  if (theta_ != o.theta_ || denominators_ != o.denominators_)
    throw DomainError("characters with different denominators cannot be added termwise");
  FormalCharacter out = *this;
  for (const auto& [nu, c] : o.numerator_) add_to(out.numerator_, nu, c);
  return out;
}

FormalCharacter FormalCharacter::operator-(const FormalCharacter& o) const { return *this + o.scaled(-1); }

std::optional<int> FormalCharacter::top_doubled() const {
  std::optional<int> top;
  for (const auto& [nu, c] : numerator_) {
    const int p = pairing_doubled(nu);
    if (!top || p > *top) top = p;
  }
  return top;
}

std::map<Weight, Rational> FormalCharacter::expand(int depth) const {
  const auto top = top_doubled();
  if (!top) return {};
  return expand_from(*top, depth);
}

std::map<Weight, Rational> FormalCharacter::expand_from(int top, int depth) const {
  const int floor_doubled = top - 2 * depth;
  std::map<Weight, Rational> series;
  for (const auto& [nu, c] : numerator_)
    if (pairing_doubled(nu) >= floor_doubled) add_to(series, nu, c);
  // multiply by each geometric series 1 + e^mu + e^{2 mu} + ... in turn
  for (const Weight& mu : denominators_) {
    std::map<Weight, Rational> next = series;
    for (const auto& [nu, c] : series)
      for (Weight x = nu + mu; pairing_doubled(x) >= floor_doubled; x += mu) add_to(next, x, c);
    series = std::move(next);
  }
  return series;
}

std::vector<Rational> FormalCharacter::graded_dimensions(int depth) const {
  std::vector<Rational> out(depth + 1);
  const auto top = top_doubled();
  if (!top) return out;
  for (const auto& [nu, c] : expand_from(*top, depth)) {
    const int d = ceil_half(*top - pairing_doubled(nu));
    if (d <= depth) out[d] += c;
  }
  return out;
}

std::map<Weight, Rational> FormalCharacter::cleared(const std::vector<Weight>& factors) const {
  std::map<Weight, Rational> p = numerator_;
  for (const Weight& mu : factors) p = times_factor(p, mu);
  return p;
}

bool same_character(const FormalCharacter& a, const FormalCharacter& b) {
  if (a.theta() != b.theta()) throw DomainError("characters over different theta cannot be compared");
  // drop the common part of the two denominator multisets before cross-multiplying
  std::vector<Weight> only_a, only_b;
  std::set_difference(a.denominators().begin(), a.denominators().end(), b.denominators().begin(),
                      b.denominators().end(), std::back_inserter(only_a));
  std::set_difference(b.denominators().begin(), b.denominators().end(), a.denominators().begin(),
                      a.denominators().end(), std::back_inserter(only_b));
  return a.cleared(only_b) == b.cleared(only_a);
}

FormalCharacter verma_character(const Weight& mu0, std::int64_t dim0, const std::vector<int>& theta,
                                const std::vector<Weight>& denominators) {
  if (dim0 < 1) throw DomainError("Verma dimension must be positive");
  FormalCharacter ch(theta, denominators);
  ch.add_term(mu0, dim0);
  return ch;
}

FormalCharacter verma_character(const Weight& mu0, std::int64_t dim0, const CentralizerGrading& grading) {
  std::vector<Weight> den;
  for (const auto& mu : grading.negative_weights()) den.push_back(Weight::integral(mu));
  return verma_character(mu0, dim0, grading.theta, den);
}

std::int64_t weyl_dimension(const std::vector<Weight>& roots, const Weight& lambda) {
  if (roots.empty()) return 1;
  Weight two_rho(lambda.size());
  for (const Weight& a : roots) two_rho += a;
  Rational dim = 1;
  for (const Weight& a : roots) {
    const Rational num = RootSystem::coroot_pairing(lambda, a);
    if (num <= 0)
      throw DomainError("lambda - rho is not dominant for the Levi factor: <" + lambda.str() + ", " + a.str() +
                        "^vee> = " + num.str());
    dim *= num / (RootSystem::coroot_pairing(two_rho, a) / 2);
  }
  if (!dim.is_integer()) throw DomainError("Weyl dimension " + dim.str() + " is not an integer");
  return dim.num();
}

std::optional<std::map<Weight, Rational>> exact_quotient(const FormalCharacter& ch) {
  std::map<Weight, Rational> p = ch.numerator();
  for (const Weight& mu : ch.denominators()) {
    // Q[nu] = sum_{k >= 0} P[nu - k mu]: partial sums along each line nu + Z mu, which
    // terminate exactly when the line total vanishes
    const int step = -ch.pairing_doubled(mu);
    std::map<Weight, std::map<int, Rational>> lines;  // representative -> position -> coefficient
    for (const auto& [nu, c] : p) {
      const int pr = ch.pairing_doubled(nu);
      const int k = pr >= 0 ? pr / step : -((-pr + step - 1) / step);
      lines[nu + mu.scaled(k)][k] = c;
    }
    std::map<Weight, Rational> q;
    for (const auto& [rep, line] : lines) {
      Rational run = 0;
      const int lo = line.begin()->first, hi = line.rbegin()->first;
      for (int k = hi; k >= lo; --k) {
        auto it = line.find(k);
        if (it != line.end()) run += it->second;
        add_to(q, rep - mu.scaled(k), run);
      }
      if (!run.is_zero()) return std::nullopt;
    }
    p = std::move(q);
  }
  return p;
}

std::optional<std::int64_t> finite_dimension(const FormalCharacter& ch) {
  const auto q = exact_quotient(ch);
  if (!q) return std::nullopt;
  Rational s = 0;
  for (const auto& [nu, c] : *q) s += c;
  if (!s.is_integer()) throw DomainError("finite character has non-integral dimension " + s.str());
  return s.num();
}

CharacterPipeline::CharacterPipeline(const LieType& ambient, const LeviNilpotent& nilpotent,
                                     std::optional<Weight> rho0, Execution execution)
    : ambient_(ambient), nilpotent_(nilpotent), roots_(ambient) {
  const LeviDescriptor& levi = nilpotent.levi;
  levi.validate_against(ambient);
  if (ambient.family == Family::A && levi.residual_rank == 0 && levi.gl_blocks.empty())
    throw DomainError("empty Levi");

  // e is zero or regular on each factor; zero factors contribute their simple roots to J
  auto is_zero = [](const Partition& p) { return p.parts().empty() || p.parts().front() == 1; };
  auto is_regular_gl = [](const Partition& p, int m) { return m == 0 || (p.parts().size() == 1 && p.size() == m); };
  std::vector<char> zero_coord(roots_.coords(), 0);
  block_of_coord_.assign(roots_.coords(), -1);
  int off = 0;
  for (std::size_t j = 0; j < levi.gl_blocks.size(); ++j) {
    const int m = levi.gl_blocks[j];
    const Partition& p = nilpotent.block_orbits.at(j);
    if (!is_zero(p) && !is_regular_gl(p, m))
      throw DomainError("e must be zero or regular on each Levi block; block " + std::to_string(j + 1) + " has " +
                        p.str());
    for (int i = off; i < off + m; ++i) {
      block_of_coord_[i] = static_cast<int>(j);
      zero_coord[i] = is_zero(p);
    }
    off += m;
  }
  const Partition& res = nilpotent.residual_orbit;
  const bool res_zero = is_zero(res);
  if (!res_zero && levi.residual_rank > 0) {
    const bool regular = ambient.family == Family::A
                             ? is_regular_gl(res, levi.residual_rank)
                             : regular_orbit(LieType{ambient.family, levi.residual_rank}).partition == res;
    if (!regular) throw DomainError("e must be zero or regular on the residual factor; got " + res.str());
  }
  const int residual_t = ambient.family == Family::A && levi.residual_rank > 0
                             ? static_cast<int>(levi.gl_blocks.size())
                             : -1;
  for (int i = off; i < roots_.coords(); ++i) {
    block_of_coord_[i] = residual_t;
    zero_coord[i] = res_zero;
  }

  grading_ = centralizer_grading(ambient, nilpotent);

  // J: simple roots of g_0 (trivial on t) supported where e vanishes
  std::vector<int> j_list;
  for (std::size_t s = 0; s < roots_.simple_roots().size(); ++s) {
    const Weight& a = roots_.simple_roots()[s];
    bool in_j = restrict(a).is_zero();
    for (int i = 0; i < roots_.coords(); ++i) in_j = in_j && (a.doubled()[i] == 0 || zero_coord[i]);
    if (in_j) {
      j_list.push_back(static_cast<int>(s));
      j_ |= GeneratorMask{1} << s;
    }
  }
  levi_roots_ = roots_.parabolic_positive_roots(j_list);

  rho0_ = rho0 ? *rho0 : roots_.rho();
  if (rho0_.size() != static_cast<std::size_t>(roots_.coords()))
    throw DomainError("rho0 must have " + std::to_string(roots_.coords()) + " coordinates");
  for (const Weight& a : roots_.simple_roots()) {
    const Rational c = RootSystem::coroot_pairing(rho0_, a);
    if (!c.is_integer() || c <= 0)
      throw DomainError("rho0 = " + rho0_.str() + " is not regular dominant integral");
  }

  auto g = std::make_shared<WeylGroup>(WeylGroup::classical(ambient));
  group_ = g;
  table_ = std::make_shared<KLTable>(*group_, execution);
}

std::vector<ElementId> CharacterPipeline::labels() const {
  std::vector<ElementId> out;
  for (ElementId w = 0; w < group_->size(); ++w)
    if (is_label(w)) out.push_back(w);
  return out;
}

Weight CharacterPipeline::act(ElementId w, const Weight& lambda) const {
  const std::vector<int> perm = group_->one_line(w);
  std::vector<int> out(lambda.size(), 0);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    const int image = perm[i];
    const int target = (image > 0 ? image : -image) - 1;
    out[target] = image > 0 ? lambda.doubled()[i] : -lambda.doubled()[i];
  }
  return Weight::from_doubled(out);
}

Weight CharacterPipeline::restrict(const Weight& nu) const {
  std::vector<int> out(grading_.theta.size(), 0);
  for (std::size_t i = 0; i < nu.size(); ++i)
    if (block_of_coord_[i] >= 0) out[block_of_coord_[i]] += nu.doubled()[i];
  return Weight::from_doubled(out);
}

FormalCharacter CharacterPipeline::parabolic_verma_image(const Weight& lambda) const {
  return verma_character(restrict(lambda - roots_.rho()), weyl_dimension(levi_roots_, lambda), grading_);
}

FormalCharacter CharacterPipeline::simple_character(ElementId w, const GroupFactors& factors, int check_depth) const {
  return orbitgr::simple_character(*this, parabolic_verma_decomposition(*table_, w, j_), factors, check_depth);
}

FormalCharacter simple_character(const CharacterPipeline& pipeline, const DecompositionRow& c_row,
                                 const GroupFactors& factors, int check_depth) {
  if (factors.h0_order < 1 || factors.abar0_order < 1 || factors.dim_v < 1)
    throw DomainError("group factors must be positive");
  FormalCharacter sum = verma_character(Weight(pipeline.grading().theta.size()), 1, pipeline.grading());
  sum = sum.scaled(0);
  for (const auto& [u, c] : c_row.entries) {
    if (!pipeline.is_label(u)) throw DomainError("c-row entry " + pipeline.group().str(u) + " is not a label");
    sum = sum + pipeline.parabolic_verma_image(pipeline.act(u, pipeline.rho0())).scaled(c);
  }
  const FormalCharacter ch = sum.scaled(Rational(factors.h0_order, factors.abar0_order * factors.dim_v));
  for (const auto& [nu, c] : ch.expand(check_depth)) {
    if (!c.is_integer()) throw DomainError("simple character has non-integral coefficient " + c.str() + " at " + nu.str());
    if (c < 0) throw DomainError("simple character has negative coefficient " + c.str() + " at " + nu.str());
  }
  return ch;
}

}  // namespace orbitgr
