#ifndef RECTFLIP_RECTANGULATION_H_
#define RECTFLIP_RECTANGULATION_H_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rectflip/grid.h"
#include "rectflip/permutation.h"

namespace rectflip {

// Canonical drawing of a diagonal rectangulation: an n x n grid where the
// rectangle labelled i holds the diagonal cell (i-1, i-1). Labels therefore
// follow the order in which rectangles meet the top-left to bottom-right
// diagonal, and two rectangulations are equal iff their matrices are.
class Rectangulation {
 public:
  // Throws InvalidGrid unless `grid` is in canonical diagonal form.
  explicit Rectangulation(Grid grid);
  static Rectangulation parse(std::string_view text) {
    return Rectangulation(Grid::parse(text));
  }

  int size() const { return grid_.rows(); }
  const Grid& grid() const { return grid_; }
  // Rectangle of label 1..n.
  const CellRect& rect(int label) const { return grid_.rects().at(label); }
  std::string str() const { return grid_.str(); }

  bool operator==(const Rectangulation& o) const { return grid_ == o.grid_; }
  bool operator<(const Rectangulation& o) const {
    return grid_.labels() < o.grid_.labels();
  }

 private:
  Grid grid_;
};

// Builds the diagonal rectangulation by inserting rectangles along the
// diagonal in the order p(1), ..., p(n). Total on permutations.
Rectangulation rho(const Permutation& p);

// rho followed by reflection in the horizontal axis: rectangles meet the
// bottom-left to top-right diagonal, the rectangle labelled k holding the
// k-th anti-diagonal cell counted from the bottom-left corner.
Grid rho_prime(const Permutation& p);

// A forbidden vertex order on a segment: ⊢ above ⊣ on a vertical segment,
// or ⊤ left of ⊥ on a horizontal one.
struct Obstruction {
  Orientation orientation = Orientation::kHorizontal;
  int line = 0;
  VertexInfo first;   // upper / left vertex of the offending pair
  VertexInfo second;  // lower / right vertex
  std::string describe() const;
};

std::optional<Obstruction> diagonal_obstruction(const Grid& grid);

class NotDiagonal : public std::runtime_error {
 public:
  explicit NotDiagonal(Obstruction o)
      : std::runtime_error("not a diagonal rectangulation: " + o.describe()),
        violation_(o) {}
  NotDiagonal(const std::string& what) : std::runtime_error(what) {}
  const std::optional<Obstruction>& violation() const { return violation_; }

 private:
  std::optional<Obstruction> violation_;
};

enum class TieBreak { kLeftmost, kRightmost };

// Reconstructs an insertion order by peeling off, from the full square, a
// rectangle with nothing above it and nothing to its right. The leftmost
// rule yields the weak-order minimum of the fibre (the twisted Baxter
// permutation), the rightmost rule its maximum.
Permutation staircase_extraction(const Rectangulation& r, TieBreak rule);

struct BinaryTree {
  int root = 0;
  // Indexed by label; 0 means none.
  std::vector<int> parent;
  std::vector<int> left;
  std::vector<int> right;
};

struct TwinTrees {
  BinaryTree upper;  // root is drawn last
  BinaryTree lower;  // root is drawn first
};

TwinTrees twin_trees(const Rectangulation& r);
// Whether p respects both trees: descendants before ancestors in `upper`,
// ancestors before descendants in `lower`.
bool is_common_linear_extension(const TwinTrees& t, const Permutation& p);

struct Canonical {
  Rectangulation rect;
  std::map<int, int> relabel;  // raw label -> canonical label
};

// Redraws a rectangulation in canonical diagonal form without changing the
// order of vertices along any segment. Throws NotDiagonal when an
// obstruction exists.
Canonical canonicalize_with_labels(const Grid& raw);
inline Rectangulation canonicalize(const Grid& raw) {
  return canonicalize_with_labels(raw).rect;
}

}  // namespace rectflip

#endif  // RECTFLIP_RECTANGULATION_H_
