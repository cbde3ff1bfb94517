#include "orbitgr/coxeter.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <stdexcept>

namespace orbitgr {

namespace {

constexpr int kMaxOrder = 50000;

int read_int(std::string_view s, const char* what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument(std::string("bad ") + what + " '" + std::string(s) + "'");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// Signed points +-1..+-n stored as 0..n-1 (positive) and n..2n-1 (negative).
int point_of(int value, int n) { return value > 0 ? value - 1 : n + (-value) - 1; }
int value_of(int point, int n) { return point < n ? point + 1 : -(point - n + 1); }

}  // namespace

long long weyl_group_order(const LieType& type) {
  long long f = 1;
  for (int i = 2; i <= type.rank; ++i) f *= i;
  switch (type.family) {
    case Family::A: return f * (type.rank + 1);
    case Family::B:
    case Family::C: return f << type.rank;
    case Family::D: return f << (type.rank - 1);
  }
  return f;
}

WeylGroup WeylGroup::classical(const LieType& type) {
  if (type.rank < 1 || (type.family == Family::D && type.rank < 2))
    throw DomainError("invalid Weyl group type " + type.str());
  if (weyl_group_order(type) > kMaxOrder)
    throw DomainError("Weyl group of " + type.str() + " exceeds " + std::to_string(kMaxOrder) + " elements");
  WeylGroup g;
  g.name_ = type.str();
  g.family_ = type.family;
  g.rank_ = type.rank;
  const int r = type.rank;
  std::vector<std::vector<int>> gens;
  std::vector<std::vector<int>> cox(r, std::vector<int>(r, 2));
  if (type.family == Family::A) {
    g.points_ = r + 1;
    for (int i = 0; i < r; ++i) {
      std::vector<int> p(r + 1);
      for (int k = 0; k <= r; ++k) p[k] = k;
      std::swap(p[i], p[i + 1]);
      gens.push_back(p);
    }
    for (int i = 0; i + 1 < r; ++i) cox[i][i + 1] = cox[i + 1][i] = 3;
  } else {
    const int n = r;
    g.points_ = 2 * n;
    auto perm_from = [&](auto f) {
      std::vector<int> p(2 * n);
      for (int k = 0; k < 2 * n; ++k) p[k] = point_of(f(value_of(k, n)), n);
      return p;
    };
    for (int i = 1; i < n; ++i)
      gens.push_back(perm_from([i](int v) {
        const int a = v < 0 ? -v : v, s = v < 0 ? -1 : 1;
        if (a == i) return s * (i + 1);
        if (a == i + 1) return s * i;
        return v;
      }));
    if (type.family == Family::D) {
      gens.push_back(perm_from([n](int v) {
        const int a = v < 0 ? -v : v, s = v < 0 ? -1 : 1;
        if (a == n - 1) return -s * n;
        if (a == n) return -s * (n - 1);
        return v;
      }));
    } else {
      gens.push_back(perm_from([n](int v) { return (v == n || v == -n) ? -v : v; }));
    }
    for (int i = 0; i + 2 < n; ++i) cox[i][i + 1] = cox[i + 1][i] = 3;
    if (type.family == Family::D) {
      if (n >= 3) cox[n - 3][n - 1] = cox[n - 1][n - 3] = 3;
    } else if (n >= 2) {
      cox[n - 2][n - 1] = cox[n - 1][n - 2] = 4;
    }
  }
  for (int i = 0; i < r; ++i) cox[i][i] = 1;
  g.build(std::move(gens), std::move(cox));
  return g;
}

WeylGroup WeylGroup::dihedral(int m) {
  if (m < 2) throw DomainError("dihedral group needs m >= 2");
  WeylGroup g;
  g.name_ = "I2(" + std::to_string(m) + ")";
  g.dihedral_ = true;
  g.rank_ = 2;
  g.points_ = 2 * m;
  // root k sits at angle k pi / m; simple roots are k = 0 and k = m - 1
  std::vector<int> s1(2 * m), s2(2 * m);
  for (int k = 0; k < 2 * m; ++k) {
    s1[k] = ((m - k) % (2 * m) + 2 * m) % (2 * m);
    s2[k] = ((3 * m - 2 - k) % (2 * m) + 2 * m) % (2 * m);
  }
  g.build({s1, s2}, {{1, m}, {m, 1}});
  return g;
}

WeylGroup WeylGroup::parse(std::string_view text) {
  text = trim(text);
  if (text.starts_with("I2(") && text.ends_with(")"))
    return dihedral(read_int(text.substr(3, text.size() - 4), "dihedral order"));
  if (text == "G2" || text == "g2") return dihedral(6);
  return classical(LieType::parse(text));
}

void WeylGroup::build(std::vector<std::vector<int>> gens, std::vector<std::vector<int>> coxeter) {
  coxeter_ = std::move(coxeter);
  const int np = points_;
  auto compose = [np](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(np);
    for (int k = 0; k < np; ++k) c[k] = a[b[k]];
    return c;
  };
  std::vector<int> id(np);
  for (int k = 0; k < np; ++k) id[k] = k;

  // breadth-first enumeration by right multiplication
  std::map<std::vector<int>, int> dist;
  std::vector<std::vector<int>> found;
  std::deque<std::vector<int>> queue;
  dist[id] = 0;
  found.push_back(id);
  queue.push_back(id);
  while (!queue.empty()) {
    std::vector<int> w = std::move(queue.front());
    queue.pop_front();
    const int d = dist[w];
    for (const auto& s : gens) {
      std::vector<int> ws = compose(w, s);
      if (dist.emplace(ws, d + 1).second) {
        found.push_back(ws);
        queue.push_back(std::move(ws));
        if (static_cast<int>(found.size()) > kMaxOrder) throw DomainError("Coxeter group too large");
      }
    }
  }

  const int n = static_cast<int>(found.size());
  perms_.assign(static_cast<std::size_t>(n) * np, 0);
  length_.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < np; ++k) perms_[static_cast<std::size_t>(i) * np + k] = found[i][k];
  // sort by (length, one-line)
  std::vector<std::pair<std::pair<int, std::vector<int>>, int>> keyed;
  for (int i = 0; i < n; ++i) {
    length_[i] = dist[found[i]];
    keyed.push_back({{length_[i], one_line(i)}, i});
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<int> lengths(n);
  std::vector<int> sorted_perms(perms_.size());
  for (int i = 0; i < n; ++i) {
    const int old = keyed[i].second;
    lengths[i] = length_[old];
    std::copy_n(found[old].begin(), np, sorted_perms.begin() + static_cast<std::ptrdiff_t>(i) * np);
    index_[found[old]] = i;
  }
  length_ = std::move(lengths);
  perms_ = std::move(sorted_perms);

  right_.assign(static_cast<std::size_t>(n) * rank_, 0);
  left_.assign(static_cast<std::size_t>(n) * rank_, 0);
  inverse_.assign(n, 0);
  right_descents_.assign(n, 0);
  left_descents_.assign(n, 0);
  for (int w = 0; w < n; ++w) {
    const std::vector<int> p = perm_of(w);
    for (int s = 0; s < rank_; ++s) {
      right_[static_cast<std::size_t>(w) * rank_ + s] = find_perm(compose(p, gens[s]));
      left_[static_cast<std::size_t>(w) * rank_ + s] = find_perm(compose(gens[s], p));
    }
    std::vector<int> inv(np);
    for (int k = 0; k < np; ++k) inv[p[k]] = k;
    inverse_[w] = find_perm(inv);
  }
  for (int w = 0; w < n; ++w)
    for (int s = 0; s < rank_; ++s) {
      if (length_[right_mul(w, s)] < length_[w]) right_descents_[w] |= GeneratorMask{1} << s;
      if (length_[left_mul(s, w)] < length_[w]) left_descents_[w] |= GeneratorMask{1} << s;
    }
}

ElementId WeylGroup::find_perm(const std::vector<int>& perm) const {
  auto it = index_.find(perm);
  if (it == index_.end()) throw DomainError("not an element of " + name_);
  return it->second;
}

std::vector<int> WeylGroup::perm_of(ElementId w) const {
  auto b = perms_.begin() + static_cast<std::ptrdiff_t>(w) * points_;
  return std::vector<int>(b, b + points_);
}

int WeylGroup::coxeter_entry(int i, int j) const { return coxeter_.at(i).at(j); }

ElementId WeylGroup::multiply(ElementId a, ElementId b) const {
  for (int s : reduced_word(b)) a = right_mul(a, s);
  return a;
}

std::vector<int> WeylGroup::reduced_word(ElementId w) const {
  std::vector<int> word;
  while (w != identity()) {
    const GeneratorMask d = descents_left(w);
    int s = 0;
    while (!((d >> s) & 1)) ++s;
    word.push_back(s);
    w = left_mul(s, w);
  }
  return word;
}

ElementId WeylGroup::from_word(const std::vector<int>& word) const {
  ElementId w = identity();
  for (int s : word) {
    if (s < 0 || s >= rank_) throw DomainError("generator index out of range");
    w = right_mul(w, s);
  }
  return w;
}

std::vector<int> WeylGroup::one_line(ElementId w) const {
  const int* p = perms_.data() + static_cast<std::ptrdiff_t>(w) * points_;
  if (dihedral_) return std::vector<int>(p, p + points_);
  if (family_ == Family::A) {
    std::vector<int> v(points_);
    for (int k = 0; k < points_; ++k) v[k] = p[k] + 1;
    return v;
  }
  const int n = points_ / 2;
  std::vector<int> v(n);
  for (int k = 0; k < n; ++k) v[k] = value_of(p[k], n);
  return v;
}

int WeylGroup::inversion_length(ElementId w) const {
  const std::vector<int> v = one_line(w);
  if (dihedral_) {
    // positive roots are those with index < m
    const int m = points_ / 2;
    int c = 0;
    for (int k = 0; k < m; ++k) c += v[k] >= m;
    return c;
  }
  const int n = static_cast<int>(v.size());
  int c = 0;
  if (family_ == Family::A) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) c += v[i] > v[j];
    return c;
  }
  // signed values ordered 1 > 2 > ... > n > -n > ... > -1, the order of eps_v
  auto rank = [n](int x) { return x > 0 ? x : 2 * n + 1 + x; };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      c += rank(v[i]) > rank(v[j]);   // eps_i - eps_j
      c += rank(v[i]) > rank(-v[j]);  // eps_i + eps_j
    }
  if (family_ != Family::D)
    for (int i = 0; i < n; ++i) c += v[i] < 0;
  return c;
}

bool WeylGroup::bruhat_leq(ElementId x, ElementId w) const {
  while (true) {
    if (length_[x] > length_[w]) return false;
    if (w == identity()) return x == identity();
    const GeneratorMask d = descents_right(w);
    int s = 0;
    while (!((d >> s) & 1)) ++s;
    if ((descents_right(x) >> s) & 1) x = right_mul(x, s);
    w = right_mul(w, s);
  }
}

std::vector<ElementId> WeylGroup::coset_min_reps(GeneratorMask j, Side side) const {
  std::vector<ElementId> out;
  for (ElementId w = 0; w < size(); ++w)
    if ((descents(w, side) & j) == 0) out.push_back(w);
  return out;
}

std::vector<ElementId> WeylGroup::parabolic_subgroup(GeneratorMask j) const {
  std::vector<ElementId> out{identity()};
  std::vector<char> seen(size(), 0);
  seen[identity()] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (int s = 0; s < rank_; ++s)
      if ((j >> s) & 1) {
        const ElementId ws = right_mul(out[i], s);
        if (!seen[ws]) {
          seen[ws] = 1;
          out.push_back(ws);
        }
      }
  std::sort(out.begin(), out.end());
  return out;
}

ElementId WeylGroup::parse_element(std::string_view text) const {
  text = trim(text);
  if (text == "e" || text == "1" || text == "id") return identity();
  if (text == "w0") return longest();
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw std::invalid_argument("unterminated element '" + std::string(text) + "'");
    std::string_view body = text.substr(1, text.size() - 2);
    std::vector<int> vals;
    while (!body.empty()) {
      const std::size_t c = body.find(',');
      vals.push_back(read_int(trim(body.substr(0, c)), "one-line entry"));
      if (c == std::string_view::npos) break;
      body.remove_prefix(c + 1);
    }
    std::vector<int> p(points_);
    if (dihedral_) {
      if (static_cast<int>(vals.size()) != points_) throw DomainError("wrong one-line length");
      p = vals;
    } else if (family_ == Family::A) {
      if (static_cast<int>(vals.size()) != points_) throw DomainError("wrong one-line length");
      for (int k = 0; k < points_; ++k) p[k] = vals[k] - 1;
    } else {
      const int n = points_ / 2;
      if (static_cast<int>(vals.size()) != n) throw DomainError("wrong one-line length");
      for (int k = 0; k < n; ++k) {
        if (vals[k] == 0 || vals[k] > n || vals[k] < -n) throw DomainError("one-line entry out of range");
        p[k] = point_of(vals[k], n);
        p[n + k] = point_of(-vals[k], n);
      }
    }
    for (int k : p)
      if (k < 0 || k >= points_) throw DomainError("one-line entry out of range");
    return find_perm(p);
  }
  // word: s1s2s1, s1.s2, or 1.2.1
  std::vector<int> word;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == 's' || c == '.' || c == '*' || c == ' ') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
    if (j == i) throw std::invalid_argument("bad element '" + std::string(text) + "'");
    word.push_back(read_int(text.substr(i, j - i), "generator") - 1);
    i = j;
  }
  if (word.empty()) throw std::invalid_argument("bad element '" + std::string(text) + "'");
  return from_word(word);
}

std::string WeylGroup::str(ElementId w) const {
  std::string s = "[";
  const std::vector<int> v = one_line(w);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(v[k]);
  }
  return s + "]";
}

std::string WeylGroup::word_str(ElementId w) const {
  if (w == identity()) return "e";
  std::string s;
  for (int g : reduced_word(w)) s += "s" + std::to_string(g + 1);
  return s;
}

GeneratorMask mask_of(const std::vector<int>& gens) {
  GeneratorMask m = 0;
  for (int g : gens) {
    if (g < 1 || g > 63) throw DomainError("generator index out of range");
    m |= GeneratorMask{1} << (g - 1);
  }
  return m;
}

GeneratorMask parse_mask(std::string_view text, int rank) {
  text = trim(text);
  if (!text.empty() && text.front() == '{') text = text.substr(1, text.size() >= 2 ? text.size() - 2 : 0);
  std::vector<int> gens;
  while (!trim(text).empty()) {
    const std::size_t c = text.find(',');
    std::string_view item = trim(text.substr(0, c));
    if (!item.empty() && item.front() == 's') item.remove_prefix(1);
    const int g = read_int(item, "generator");
    if (g < 1 || g > rank) throw DomainError("generator s" + std::to_string(g) + " out of range");
    gens.push_back(g);
    if (c == std::string_view::npos) break;
    text.remove_prefix(c + 1);
  }
  return mask_of(gens);
}

}  // namespace orbitgr
