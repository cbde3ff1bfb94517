#include "orbitgr/weight.hpp"

#include <charconv>
#include <set>
#include <stdexcept>

namespace orbitgr {

Weight Weight::integral(const std::vector<int>& coords) {
  Weight w(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) w.twice_[i] = 2 * coords[i];
  return w;
}

Weight Weight::from_doubled(std::vector<int> doubled) {
  Weight w;
  w.twice_ = std::move(doubled);
  return w;
}

Weight Weight::parse(std::string_view text) {
  Weight w;
  if (text.empty()) return w;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string_view::npos) next = text.size();
    std::string_view tok = text.substr(pos, next - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    std::size_t slash = tok.find('/');
    auto read = [&](std::string_view s) {
      int v = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw std::invalid_argument("bad weight coordinate '" + std::string(tok) + "'");
      return v;
    };
    if (slash == std::string_view::npos) {
      w.twice_.push_back(2 * read(tok));
    } else {
      if (read(tok.substr(slash + 1)) != 2)
        throw std::invalid_argument("weight coordinates must lie in Z/2: '" + std::string(tok) + "'");
      w.twice_.push_back(read(tok.substr(0, slash)));
    }
    pos = next + 1;
  }
  return w;
}

bool Weight::is_integral() const {
  for (int v : twice_)
    if (v % 2 != 0) return false;
  return true;
}

bool Weight::is_half_odd() const {
  for (int v : twice_)
    if (v % 2 == 0) return false;
  return true;
}

bool Weight::is_zero() const {
  for (int v : twice_)
    if (v != 0) return false;
  return true;
}

Weight Weight::operator+(const Weight& o) const {
  Weight r = *this;
  r += o;
  return r;
}

Weight Weight::operator-(const Weight& o) const {
  Weight r = *this;
  r -= o;
  return r;
}

Weight Weight::operator-() const {
  Weight r = *this;
  for (int& v : r.twice_) v = -v;
  return r;
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.size() != size()) throw std::invalid_argument("weight size mismatch");
  for (std::size_t i = 0; i < size(); ++i) twice_[i] += o.twice_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.size() != size()) throw std::invalid_argument("weight size mismatch");
  for (std::size_t i = 0; i < size(); ++i) twice_[i] -= o.twice_[i];
  return *this;
}

Weight Weight::scaled(int k) const {
  Weight r = *this;
  for (int& v : r.twice_) v *= k;
  return r;
}

long long dot_doubled(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("weight size mismatch");
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a.twice_[i]) * b.twice_[i];
  return s;
}

std::string Weight::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < twice_.size(); ++i) {
    if (i) s += ',';
    s += (*this)[i].str();
  }
  return s + ")";
}

RootSystem::RootSystem(const LieType& type) : type_(type) {
  const int r = type.rank;
  coords_ = type.family == Family::A ? r + 1 : r;
  auto eps = [&](int i, int si, int j = -1, int sj = 0) {
    std::vector<int> v(coords_, 0);
    v[i] += si;
    if (j >= 0) v[j] += sj;
    return Weight::integral(v);
  };
  for (int i = 0; i < coords_; ++i)
    for (int j = i + 1; j < coords_; ++j) {
      positive_.push_back(eps(i, 1, j, -1));
      if (type.family != Family::A) positive_.push_back(eps(i, 1, j, 1));
    }
  if (type.family == Family::B)
    for (int i = 0; i < coords_; ++i) positive_.push_back(eps(i, 1));
  if (type.family == Family::C)
    for (int i = 0; i < coords_; ++i) positive_.push_back(eps(i, 2));

  for (int i = 0; i + 1 < coords_; ++i) simple_.push_back(eps(i, 1, i + 1, -1));
  switch (type.family) {
    case Family::A: break;
    case Family::B: simple_.push_back(eps(r - 1, 1)); break;
    case Family::C: simple_.push_back(eps(r - 1, 2)); break;
    case Family::D: simple_.push_back(eps(r - 2, 1, r - 1, 1)); break;
  }

  rho_ = Weight(coords_);
  for (const Weight& a : positive_) rho_ += a;
  std::vector<int> half = rho_.doubled();
  for (int& v : half) v /= 2;  // sum of positive roots is integral, so doubled entries are even
  rho_ = Weight::from_doubled(half);
}

Rational RootSystem::coroot_pairing(const Weight& lambda, const Weight& alpha) {
  // 2 (l, a) / (a, a) with l = L/2, a = A/2 in doubled form: (L, A) / (A, A) * 2.
  return Rational(2 * dot_doubled(lambda, alpha), dot_doubled(alpha, alpha));
}

std::vector<Weight> RootSystem::parabolic_positive_roots(const std::vector<int>& generators) const {
  // A positive root lies in the span of a set of simple roots iff its expansion in
  // simple roots is supported there. Generate by closure: reflect simple roots.
  std::set<Weight> roots;
  std::vector<Weight> frontier;
  for (int g : generators) {
    roots.insert(simple_.at(g));
    frontier.push_back(simple_.at(g));
  }
  while (!frontier.empty()) {
    Weight beta = frontier.back();
    frontier.pop_back();
    for (int g : generators) {
      const Weight& a = simple_[g];
      Rational c = coroot_pairing(beta, a);
      Weight refl = beta - a.scaled(static_cast<int>(c.num()));
      bool positive = false;
      for (const Weight& p : positive_)
        if (p == refl) positive = true;
      if (positive && roots.insert(refl).second) frontier.push_back(refl);
    }
  }
  return {roots.begin(), roots.end()};
}

bool RootSystem::in_weight_lattice(const Weight& w) const {
  switch (type_.family) {
    case Family::A: {
      for (std::size_t i = 1; i < w.size(); ++i)
        if ((w.doubled()[i] - w.doubled()[0]) % 2 != 0) return false;
      return true;
    }
    case Family::C: return w.is_integral();
    case Family::B:
    case Family::D: return w.is_integral() || w.is_half_odd();
  }
  return false;
}

bool RootSystem::is_dominant(const Weight& w) const {
  for (const Weight& a : simple_)
    if (coroot_pairing(w, a) < Rational(0)) return false;
  return true;
}

}  // namespace orbitgr
