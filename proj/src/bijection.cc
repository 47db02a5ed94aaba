#include "rectflip/bijection.h"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace rectflip {

namespace {

using Mask = uint32_t;
using Orders = std::vector<std::vector<int>>;

class FiberSearch {
 public:
  FiberSearch(const Rectangulation& r) : n_(r.size()), blockers_(n_ + 1, 0) {
    const Adjacency adj = adjacency(r.grid());
    for (auto [a, b] : adj.above) blockers_[b] |= bit(a);
    for (auto [a, b] : adj.left_of) blockers_[a] |= bit(b);
  }

  // Peeling sequences that remove every rectangle of `remaining`; memoised
  // on the remaining set, which determines the staircase.
  const Orders& peelings(Mask remaining) {
    if (auto it = memo_.find(remaining); it != memo_.end()) return it->second;
    Orders out;
    if (remaining == 0) {
      out.emplace_back();
    } else {
      for (int r = 1; r <= n_; ++r) {
        if (!(remaining & bit(r)) || (blockers_[r] & remaining)) continue;
        for (const auto& tail : peelings(remaining & ~bit(r))) {
          std::vector<int> seq;
          seq.reserve(tail.size() + 1);
          seq.push_back(r);
          seq.insert(seq.end(), tail.begin(), tail.end());
          out.push_back(std::move(seq));
        }
      }
    }
    return memo_.emplace(remaining, std::move(out)).first->second;
  }

  Mask all() const { return (Mask{1} << (n_ + 1)) - 2; }

 private:
  static Mask bit(int label) { return Mask{1} << label; }

  int n_;
  std::vector<Mask> blockers_;
  std::unordered_map<Mask, Orders> memo_;
};

}  // namespace

Fiber fiber(const Rectangulation& r) {
  if (r.size() > kMaxFiberSize) {
    throw std::invalid_argument("fiber: n exceeds " + std::to_string(kMaxFiberSize));
  }
  FiberSearch search(r);
  Fiber f{r, {}};
  for (const auto& seq : search.peelings(search.all())) {
    f.members.emplace_back(std::vector<int>(seq.rbegin(), seq.rend()));
  }
  std::sort(f.members.begin(), f.members.end());
  return f;
}

Permutation baxter_of(const Rectangulation& r) {
  std::optional<Permutation> found;
  for (const Permutation& p : fiber(r).members) {
    if (!is_baxter(p)) continue;
    if (found) throw std::logic_error("fibre holds two Baxter permutations");
    found = p;
  }
  if (!found) throw std::logic_error("fibre holds no Baxter permutation");
  return *found;
}

BlockDeletion block_delete_bottom_left(const Grid& g) {
  const int label = g.at(g.rows() - 1, 0);
  if (g.rect_count() == 1) return BlockDeletion{label, std::nullopt};
  const CellRect box = g.rects().at(label);
  std::vector<int> cells = g.labels();
  // At the top-right corner the vertical line either continues upward (top
  // side is the whole segment) or stops (right side is the whole segment).
  const bool right_side_whole =
      box.x1 < g.cols() &&
      (box.y0 == 0 || !(g.arms(Point{box.x1, box.y0}) & kArmN));
  if (!right_side_whole && box.y0 == 0) {
    throw std::logic_error("block deletion: neither side is a whole segment");
  }
  for (int r = box.y0; r < box.y1; ++r) {
    for (int c = box.x0; c < box.x1; ++c) {
      cells[r * g.cols() + c] =
          right_side_whole ? g.at(r, box.x1) : g.at(box.y0 - 1, c);
    }
  }
  return BlockDeletion{label, Grid(g.rows(), g.cols(), std::move(cells)).compressed()};
}

Permutation baxter_by_block_deletion(const Grid& g) {
  std::vector<int> order;
  std::optional<Grid> current = g;
  while (current) {
    BlockDeletion step = block_delete_bottom_left(*current);
    order.push_back(step.label);
    current = std::move(step.rest);
  }
  return Permutation(std::move(order));
}

Grid slash_representative(const Rectangulation& r) {
  const Permutation b = baxter_of(r);
  std::map<int, int> relabel;
  for (int k = 1; k <= b.size(); ++k) relabel[k] = b(k);
  return rho_prime(inverse(b)).relabeled(relabel);
}

std::vector<SegmentSides> mosaic_signature(const Grid& g) {
  std::vector<SegmentSides> out;
  auto push_unique = [](std::vector<int>& v, int label) {
    if (v.empty() || v.back() != label) v.push_back(label);
  };
  for (const Segment& s : geometry(g).segments) {
    SegmentSides sides{s.orientation, {}, {}};
    for (int t = s.from; t < s.to; ++t) {
      if (s.orientation == Orientation::kHorizontal) {
        push_unique(sides.first, g.at(s.line - 1, t));
        push_unique(sides.second, g.at(s.line, t));
      } else {
        push_unique(sides.first, g.at(t, s.line - 1));
        push_unique(sides.second, g.at(t, s.line));
      }
    }
    out.push_back(std::move(sides));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rectflip
