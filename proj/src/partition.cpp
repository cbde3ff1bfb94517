#include "orbitgr/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <set>

namespace orbitgr {

namespace {

int parse_int(std::string_view s, std::string_view what) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw std::invalid_argument("cannot parse " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

}  // namespace

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

LieType::LieType(Family f, int r) : family(f), rank(r) {
  if (r < 1) throw DomainError("Lie type rank must be positive");
  if (f == Family::D && r < 2) throw DomainError("type D needs rank >= 2");
}

int LieType::natural_dim() const {
  switch (family) {
    case Family::A: return rank + 1;
    case Family::B: return 2 * rank + 1;
    case Family::C:
    case Family::D: return 2 * rank;
  }
  return 0;
}

int LieType::algebra_dim() const {
  const int n = natural_dim();
  switch (family) {
    case Family::A: return n * n;
    case Family::B:
    case Family::D: return n * (n - 1) / 2;
    case Family::C: return n * (n + 1) / 2;
  }
  return 0;
}

LieType LieType::dual() const {
  switch (family) {
    case Family::B: return {Family::C, rank};
    case Family::C: return {Family::B, rank};
    default: return *this;
  }
}

std::string LieType::str() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

LieType LieType::parse(std::string_view text) {
  if (text.size() < 2) throw std::invalid_argument("bad Lie type '" + std::string(text) + "'");
  Family f;
  switch (text[0]) {
    case 'A': case 'a': f = Family::A; break;
    case 'B': case 'b': f = Family::B; break;
    case 'C': case 'c': f = Family::C; break;
    case 'D': case 'd': f = Family::D; break;
    default: throw std::invalid_argument("bad Lie family '" + std::string(text) + "'");
  }
  return {f, parse_int(text.substr(1), "rank")};
}

Partition::Partition(std::vector<int> parts) {
  for (int p : parts)
    if (p < 0) throw DomainError("partition parts must be nonnegative");
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  parts_ = std::move(parts);
  for (int p : parts_) size_ += p;
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  if (text.empty() || text == "0" || text == "()") return Partition{};
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string_view::npos) next = text.size();
    std::string_view tok = text.substr(pos, next - pos);
    std::size_t caret = tok.find('^');
    if (caret == std::string_view::npos) {
      parts.push_back(parse_int(tok, "part"));
    } else {
      int value = parse_int(tok.substr(0, caret), "part");
      int mult = parse_int(tok.substr(caret + 1), "multiplicity");
      if (mult < 0) throw std::invalid_argument("negative multiplicity");
      parts.insert(parts.end(), mult, value);
    }
    pos = next + 1;
  }
  for (int p : parts)
    if (p < 0) throw std::invalid_argument("negative part in '" + std::string(text) + "'");
  return Partition(std::move(parts));
}

Partition Partition::single_row(int n) { return Partition(std::vector<int>{n}); }
Partition Partition::single_column(int n) { return Partition(std::vector<int>(n, 1)); }

int Partition::multiplicity(int k) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

std::vector<int> Partition::distinct_parts() const {
  std::vector<int> out;
  for (int p : parts_)
    if (out.empty() || out.back() != p) out.push_back(p);
  return out;
}

std::string Partition::str() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s.empty() ? "0" : s;
}

Partition transpose(const Partition& p) {
  std::vector<int> cols(p.empty() ? 0 : p.parts().front(), 0);
  for (int row : p.parts())
    for (int j = 0; j < row; ++j) ++cols[j];
  return Partition(std::move(cols));
}

bool dominance_leq(const Partition& p, const Partition& q) {
  if (p.size() != q.size())
    throw DomainError("dominance comparison of partitions of different sizes (" +
                      std::to_string(p.size()) + " vs " + std::to_string(q.size()) + ")");
  int sp = 0, sq = 0;
  const std::size_t len = std::max(p.length(), q.length());
  for (std::size_t i = 0; i < len; ++i) {
    sp += p.part(i);
    sq += q.part(i);
    if (sp > sq) return false;
  }
  return true;
}

bool has_family_parity(const Partition& p, Family f) {
  if (f == Family::A) return true;
  // B and D: even parts need even multiplicity; C: odd parts do.
  const int bad_parity = f == Family::C ? 1 : 0;
  for (int v : p.distinct_parts())
    if (v % 2 == bad_parity && p.multiplicity(v) % 2 != 0) return false;
  return true;
}

bool is_type(const Partition& p, const LieType& t) {
  if (p.size() != t.natural_dim())
    throw DomainError("partition " + p.str() + " has size " + std::to_string(p.size()) +
                      ", type " + t.str() + " needs " + std::to_string(t.natural_dim()));
  return has_family_parity(p, t.family);
}

Partition collapse(const Partition& p, Family f) {
  if (f == Family::A) return p;
  // Repeatedly repair the largest offending part q: lower its last occurrence by
  // one and raise the first later part that is smaller than q - 1.
  const int bad_parity = f == Family::C ? 1 : 0;
  std::vector<int> parts = p.parts();
  for (;;) {
    int offender = -1;
    for (std::size_t i = 0; i < parts.size();) {
      std::size_t j = i;
      while (j < parts.size() && parts[j] == parts[i]) ++j;
      if (parts[i] > 0 && parts[i] % 2 == bad_parity && (j - i) % 2 == 1) {
        offender = static_cast<int>(j - 1);
        break;
      }
      i = j;
    }
    if (offender < 0) break;
    const int q = parts[offender];
    parts[offender] = q - 1;
    std::size_t k = offender + 1;
    while (k < parts.size() && parts[k] >= q - 1) ++k;
    if (k == parts.size()) parts.push_back(0);
    parts[k] += 1;
    std::erase(parts, 0);
  }
  return Partition(std::move(parts));
}

Partition collapse(const Partition& p, const LieType& t) {
  if (p.size() != t.natural_dim())
    throw DomainError("collapse: partition " + p.str() + " does not have size " +
                      std::to_string(t.natural_dim()));
  return collapse(p, t.family);
}

bool is_special(const Partition& p, const LieType& t) {
  if (!is_type(p, t)) throw DomainError(p.str() + " is not a partition of type " + t.str());
  const Partition pt = transpose(p);
  switch (t.family) {
    case Family::A: return true;
    case Family::B: return has_family_parity(pt, Family::B);
    case Family::C:
    case Family::D: return has_family_parity(pt, Family::C);
  }
  return false;
}

std::vector<Partition> dominance_covers_below(const Partition& p) {
  std::set<Partition> found;
  const std::vector<int>& parts = p.parts();
  for (std::size_t from = 0; from < parts.size(); ++from) {
    for (std::size_t to = from + 1; to <= parts.size(); ++to) {
      std::vector<int> q = parts;
      q.push_back(0);
      q[from] -= 1;
      q[to] += 1;
      if (std::is_sorted(q.begin(), q.end(), std::greater<>())) found.insert(Partition(q));
    }
  }
  return {found.rbegin(), found.rend()};
}

std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
      cur.push_back(k);
      rec(remaining - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace orbitgr
