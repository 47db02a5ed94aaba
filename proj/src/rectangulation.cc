#include "rectflip/rectangulation.h"

#include <algorithm>
#include <sstream>

namespace rectflip {

Rectangulation::Rectangulation(Grid grid) : grid_(std::move(grid)) {
  const int n = grid_.rows();
  if (grid_.cols() != n) throw InvalidGrid("canonical grid must be square");
  if (grid_.rect_count() != n) {
    throw InvalidGrid("canonical grid needs exactly n rectangles");
  }
  for (int i = 0; i < n; ++i) {
    if (grid_.at(i, i) != i + 1) {
      throw InvalidGrid("diagonal cell " + std::to_string(i + 1) +
                        " is not labelled " + std::to_string(i + 1));
    }
  }
}

Rectangulation rho(const Permutation& p) {
  const int n = p.size();
  // height[c]: first row of column c covered by the union drawn so far.
  std::vector<int> height(n, n);
  std::vector<int> labels(n * n, 0);
  auto count_at_most = [&](int y) {
    return static_cast<int>(
        std::count_if(height.begin(), height.end(), [y](int h) { return h <= y; }));
  };
  for (int i = 1; i <= n; ++i) {
    const int j = p(i);
    // Upper-left corner: either directly above the interval's left end, or
    // the boundary point directly to its left.
    int x0 = count_at_most(j - 1);
    int y0 = j - 1;
    if (x0 == j - 1) y0 = j == 1 ? 0 : height[j - 2];
    // Lower-right corner, symmetric.
    int x1 = j;
    int y1 = height[j - 1];
    if (height[j - 1] == j) {
      x1 = count_at_most(j);
      y1 = j;
    }
    for (int c = x0; c < x1; ++c) {
      if (height[c] != y1) throw std::logic_error("rho: union is not a staircase");
      height[c] = y0;
      for (int r = y0; r < y1; ++r) labels[r * n + c] = j;
    }
  }
  return Rectangulation(Grid(n, n, std::move(labels)));
}

Grid rho_prime(const Permutation& p) { return rho(p).grid().reflected(); }

std::string Obstruction::describe() const {
  std::ostringstream out;
  const bool vertical = orientation == Orientation::kVertical;
  out << (vertical ? "vertical segment x=" : "horizontal segment y=") << line
      << ": " << vertex_symbol(first.kind) << " at (" << first.point.x << ","
      << first.point.y << ") " << (vertical ? "above " : "left of ")
      << vertex_symbol(second.kind) << " at (" << second.point.x << ","
      << second.point.y << ")";
  return out.str();
}

std::optional<Obstruction> diagonal_obstruction(const Grid& grid) {
  for (const Segment& s : geometry(grid).segments) {
    const bool vertical = s.orientation == Orientation::kVertical;
    // On a diagonal drawing, left neighbours of a vertical segment hug its
    // upper part and right neighbours its lower part; transposed for
    // horizontal segments.
    const VertexKind early = vertical ? VertexKind::kTeeRight : VertexKind::kTeeDown;
    const VertexKind late = vertical ? VertexKind::kTeeLeft : VertexKind::kTeeUp;
    const VertexInfo* seen = nullptr;
    for (const VertexInfo& v : s.vertices) {
      if (v.kind == early && seen == nullptr) seen = &v;
      if (v.kind == late && seen != nullptr) {
        return Obstruction{s.orientation, s.line, *seen, v};
      }
    }
  }
  return std::nullopt;
}

namespace {

// blockers[r] lists the rectangles touching r's top or right side, over
// labels 1..n.
std::vector<std::vector<int>> blockers_of(const Adjacency& adj, int n) {
  std::vector<std::vector<int>> blockers(n + 1);
  for (auto [a, b] : adj.above) blockers[b].push_back(a);
  for (auto [a, b] : adj.left_of) blockers[a].push_back(b);
  return blockers;
}

// Returns labels in insertion order (reverse of peeling order).
std::vector<int> peel(const std::vector<std::vector<int>>& blockers, int n,
                      TieBreak rule) {
  std::vector<int> pending(n + 1, 0);
  std::vector<std::vector<int>> unblocks(n + 1);
  for (int r = 1; r <= n; ++r) {
    pending[r] = static_cast<int>(blockers[r].size());
    for (int b : blockers[r]) unblocks[b].push_back(r);
  }
  std::vector<bool> removed(n + 1, false);
  std::vector<int> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int pick = 0;
    for (int r = 1; r <= n; ++r) {
      if (removed[r] || pending[r] != 0) continue;
      // Peeling the largest label last-to-first gives the smallest label the
      // earliest insertion slot, which is the leftmost rule.
      if (rule == TieBreak::kLeftmost || pick == 0) pick = r;
      if (rule == TieBreak::kRightmost) break;
    }
    if (pick == 0) throw std::logic_error("no removable rectangle");
    removed[pick] = true;
    order.push_back(pick);
    for (int r : unblocks[pick]) --pending[r];
  }
  std::reverse(order.begin(), order.end());
  return order;
}

BinaryTree search_tree(const std::vector<int>& insertion, int n) {
  BinaryTree t;
  t.parent.assign(n + 1, 0);
  t.left.assign(n + 1, 0);
  t.right.assign(n + 1, 0);
  for (int v : insertion) {
    if (t.root == 0) {
      t.root = v;
      continue;
    }
    int at = t.root;
    while (true) {
      int& next = v < at ? t.left[at] : t.right[at];
      if (next == 0) {
        next = v;
        t.parent[v] = at;
        break;
      }
      at = next;
    }
  }
  return t;
}

}  // namespace

Permutation staircase_extraction(const Rectangulation& r, TieBreak rule) {
  const int n = r.size();
  return Permutation(peel(blockers_of(adjacency(r.grid()), n), n, rule));
}

TwinTrees twin_trees(const Rectangulation& r) {
  const Permutation p = staircase_extraction(r, TieBreak::kLeftmost);
  std::vector<int> forward(p.word().begin(), p.word().end());
  std::vector<int> backward(forward.rbegin(), forward.rend());
  return TwinTrees{search_tree(backward, p.size()), search_tree(forward, p.size())};
}

bool is_common_linear_extension(const TwinTrees& t, const Permutation& p) {
  const int n = p.size();
  if (static_cast<int>(t.lower.parent.size()) != n + 1) return false;
  std::vector<int> pos(n + 1);
  for (int i = 1; i <= n; ++i) pos[p(i)] = i;
  for (int v = 1; v <= n; ++v) {
    if (int up = t.upper.parent[v]; up != 0 && pos[v] > pos[up]) return false;
    if (int low = t.lower.parent[v]; low != 0 && pos[v] < pos[low]) return false;
  }
  return true;
}

Canonical canonicalize_with_labels(const Grid& raw) {
  if (auto o = diagonal_obstruction(raw)) throw NotDiagonal(*o);
  const Adjacency adj = adjacency(raw);

  // The diagonal order is the unique topological order of the
  // left-of/above relation.
  std::map<int, std::vector<int>> succ;
  std::map<int, int> indegree;
  for (const auto& [label, box] : raw.rects()) indegree[label] = 0;
  for (const auto* rel : {&adj.left_of, &adj.above}) {
    for (auto [a, b] : *rel) {
      succ[a].push_back(b);
      ++indegree[b];
    }
  }
  std::vector<int> ready;
  for (auto [label, d] : indegree) {
    if (d == 0) ready.push_back(label);
  }
  std::map<int, int> relabel;
  while (!ready.empty()) {
    if (ready.size() != 1) {
      throw NotDiagonal("rectangles are not totally ordered along a diagonal");
    }
    const int label = ready.back();
    ready.pop_back();
    relabel[label] = static_cast<int>(relabel.size()) + 1;
    for (int b : succ[label]) {
      if (--indegree[b] == 0) ready.push_back(b);
    }
  }
  const int n = raw.rect_count();
  if (static_cast<int>(relabel.size()) != n) {
    throw std::logic_error("cyclic adjacency in a rectangulation");
  }

  Adjacency mapped;
  for (auto [a, b] : adj.left_of) mapped.left_of.emplace_back(relabel[a], relabel[b]);
  for (auto [a, b] : adj.above) mapped.above.emplace_back(relabel[a], relabel[b]);
  std::sort(mapped.left_of.begin(), mapped.left_of.end());
  std::sort(mapped.above.begin(), mapped.above.end());

  Rectangulation drawn =
      rho(Permutation(peel(blockers_of(mapped, n), n, TieBreak::kLeftmost)));
  if (adjacency(drawn.grid()) != mapped) {
    throw std::logic_error("canonical redraw changed the adjacency structure");
  }
  return Canonical{std::move(drawn), std::move(relabel)};
}

}  // namespace rectflip
