#include "twosc/canonical.hpp"

#include <algorithm>
#include <map>

#include "twosc/io.hpp"

namespace twosc {
namespace {

using Partition = std::vector<VertexSet>;

// Splits cells by neighbor counts into every cell until stable. Subcells are
// ordered by signature, so the result depends only on the isomorphism type of
// (graph, partition).
void refine(const Graph& g, Partition& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (popcount(cells[c]) == 1) continue;
      std::map<std::vector<int>, VertexSet> groups;
      for (int v : members(cells[c])) {
        std::vector<int> signature(cells.size());
        for (std::size_t d = 0; d < cells.size(); ++d) signature[d] = popcount(g.neighbors(v) & cells[d]);
        groups[signature] |= bit(v);
      }
      if (groups.size() == 1) continue;
      Partition split;
      split.reserve(cells.size() + groups.size() - 1);
      split.insert(split.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(c));
      for (const auto& [signature, part] : groups) split.push_back(part);
      split.insert(split.end(), cells.begin() + static_cast<std::ptrdiff_t>(c) + 1, cells.end());
      cells = std::move(split);
      changed = true;
      break;
    }
  }
}

struct Search {
  const Graph& g;
  std::vector<VertexSet> best_rows;
  std::vector<int> best_position;

  void leaf(const Partition& cells) {
    std::vector<int> position(g.order());
    for (std::size_t i = 0; i < cells.size(); ++i) position[std::countr_zero(cells[i])] = static_cast<int>(i);
    std::vector<VertexSet> rows(g.order(), 0);
    for (int v = 0; v < g.order(); ++v) {
      for (int w : members(g.neighbors(v))) rows[position[v]] |= bit(position[w]);
    }
    if (best_position.empty() || rows > best_rows) {
      best_rows = std::move(rows);
      best_position = std::move(position);
    }
  }

  bool twins(int u, int v) const {
    return (g.neighbors(u) & ~bit(v)) == (g.neighbors(v) & ~bit(u));
  }

  void run(Partition cells) {
    refine(g, cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](VertexSet c) { return popcount(c) > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const std::size_t index = static_cast<std::size_t>(target - cells.begin());
    const VertexSet cell = *target;
    VertexSet tried = 0;
    for (int v : members(cell)) {
      bool redundant = false;
      for (int u : members(tried)) {
        if (twins(u, v)) {
          redundant = true;
          break;
        }
      }
      if (redundant) continue;
      tried |= bit(v);
      Partition next;
      next.reserve(cells.size() + 1);
      next.insert(next.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(index));
      next.push_back(bit(v));
      next.push_back(cell & ~bit(v));
      next.insert(next.end(), cells.begin() + static_cast<std::ptrdiff_t>(index) + 1, cells.end());
      run(std::move(next));
    }
  }
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
  if (g.order() == 0) return {};
  Search search{g, {}, {}};
  // Degree order seeds the partition so that refinement starts from a
  // meaningful split.
  std::map<int, VertexSet> by_degree;
  for (int v = 0; v < g.order(); ++v) by_degree[g.degree(v)] |= bit(v);
  Partition initial;
  for (const auto& [degree, cell] : by_degree) initial.push_back(cell);
  search.run(std::move(initial));
  return search.best_position;
}

Graph canonical_form(const Graph& g) { return relabel(g, canonical_labeling(g)); }

std::string canonical_graph6(const Graph& g) { return to_graph6(canonical_form(g)); }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace twosc
