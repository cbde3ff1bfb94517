#include "orbitgr/cells.hpp"

#include <algorithm>
#include <functional>

namespace orbitgr {

int CellPartition::count() const {
  return cell_of.empty() ? 0 : *std::max_element(cell_of.begin(), cell_of.end()) + 1;
}

std::vector<std::vector<ElementId>> CellPartition::cells() const {
  std::vector<std::vector<ElementId>> out(count());
  for (ElementId w = 0; w < static_cast<ElementId>(cell_of.size()); ++w) out[cell_of[w]].push_back(w);
  return out;
}

namespace {

// Strongly connected components (Kosaraju, iterative).
std::vector<int> strongly_connected(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::vector<int>> radj(n);
  for (int u = 0; u < n; ++u)
    for (int v : adj[u]) radj[v].push_back(u);
  std::vector<int> order;
  std::vector<char> seen(n, 0);
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    seen[root] = 1;
    while (!stack.empty()) {
      auto& [u, i] = stack.back();
      if (i < adj[u].size()) {
        const int v = adj[u][i++];
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back({v, 0});
        }
      } else {
        order.push_back(u);
        stack.pop_back();
      }
    }
  }
  std::vector<int> comp(n, -1);
  int c = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (comp[*it] >= 0) continue;
    std::vector<int> stack{*it};
    comp[*it] = c;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : radj[u])
        if (comp[v] < 0) {
          comp[v] = c;
          stack.push_back(v);
        }
    }
    ++c;
  }
  // renumber by smallest member
  std::vector<int> relabel(c, -1);
  int next = 0;
  for (int u = 0; u < n; ++u)
    if (relabel[comp[u]] < 0) relabel[comp[u]] = next++;
  for (int& x : comp) x = relabel[x];
  return comp;
}

}  // namespace

CellPartition compute_cells(const KLTable& table, CellKind kind) {
  const WeylGroup& g = table.group();
  const int n = g.size();
  std::vector<std::vector<int>> adj(n);
  auto add_edges = [&](Side side) {
    for (ElementId w = 0; w < n; ++w)
      for (const auto& [z, m] : table.mu_below(w)) {
        (void)m;
        // x <=_L y: edge y -> x
        if ((g.descents(z, side) & ~g.descents(w, side)) != 0) adj[w].push_back(z);
        if ((g.descents(w, side) & ~g.descents(z, side)) != 0) adj[z].push_back(w);
      }
  };
  if (kind != CellKind::Right) add_edges(Side::Left);
  if (kind != CellKind::Left) add_edges(Side::Right);
  CellPartition p;
  p.kind = kind;
  p.cell_of = strongly_connected(adj);
  return p;
}

Partition RSKPair::shape() const {
  std::vector<int> rows;
  for (const auto& r : insertion) rows.push_back(static_cast<int>(r.size()));
  return Partition(rows);
}

RSKPair rsk(const std::vector<int>& word) {
  RSKPair t;
  for (std::size_t step = 0; step < word.size(); ++step) {
    int x = word[step];
    std::size_t row = 0;
    while (true) {
      if (row == t.insertion.size()) {
        t.insertion.push_back({x});
        t.recording.push_back({static_cast<int>(step) + 1});
        break;
      }
      auto& r = t.insertion[row];
      auto it = std::upper_bound(r.begin(), r.end(), x);
      if (it == r.end()) {
        r.push_back(x);
        t.recording[row].push_back(static_cast<int>(step) + 1);
        break;
      }
      std::swap(x, *it);
      ++row;
    }
  }
  return t;
}

RSKPair rsk_label(const WeylGroup& g, ElementId w) {
  if (g.is_dihedral() || g.family() != Family::A) throw DomainError("RSK labels need a type A group");
  return rsk(g.one_line(w));
}

OrbitLabel cell_orbit_type_A(const WeylGroup& g, const std::vector<ElementId>& cell) {
  if (g.is_dihedral() || g.family() != Family::A) throw DomainError("the cell-orbit dictionary is type A only");
  if (cell.empty()) throw DomainError("empty cell");
  const Partition shape = rsk_label(g, cell.front()).shape();
  for (ElementId w : cell)
    if (!(rsk_label(g, w).shape() == shape)) throw DomainError("elements of the cell have different RSK shapes");
  return OrbitLabel(LieType(Family::A, g.rank()), transpose(shape));
}

std::vector<std::vector<ElementId>> left_cell_involutions(const WeylGroup& g, const CellPartition& left) {
  std::vector<std::vector<ElementId>> out(left.count());
  for (ElementId w = 0; w < g.size(); ++w)
    if (g.inverse(w) == w) out[left.cell_of[w]].push_back(w);
  return out;
}

}  // namespace orbitgr
