#ifndef RECTFLIP_BIJECTION_H_
#define RECTFLIP_BIJECTION_H_

#include <optional>
#include <vector>

#include "rectflip/grid.h"
#include "rectflip/permutation.h"
#include "rectflip/rectangulation.h"

namespace rectflip {

inline constexpr int kMaxFiberSize = 10;

struct Fiber {
  Rectangulation rect;
  std::vector<Permutation> members;  // lexicographic order
};

// Every permutation p with rho(p) == r, enumerated by depth-first search over
// all peeling choices. Throws std::invalid_argument for n > kMaxFiberSize.
Fiber fiber(const Rectangulation& r);

// The Baxter permutation of r: rectangle labels listed in the order in which
// the bottom-left to top-right diagonal meets them in the anti-diagonal
// representative of r's mosaic floorplan. Computed as the unique Baxter
// member of the fibre.
Permutation baxter_of(const Rectangulation& r);

// Fast path for baxter_of: iterated bottom-left block deletion.
Permutation baxter_by_block_deletion(const Grid& g);

struct BlockDeletion {
  int label = 0;
  std::optional<Grid> rest;  // empty once the last rectangle is gone
};

// Removes the rectangle in the bottom-left corner cell. If its right side is
// a whole segment its right neighbours grow leftward, otherwise its top
// neighbours grow downward. The remainder is compressed.
BlockDeletion block_delete_bottom_left(const Grid& g);

// rho_prime(inverse(baxter_of(r))), with each rectangle carrying its label
// from r.
Grid slash_representative(const Rectangulation& r);

inline Permutation twisted_baxter_of(const Rectangulation& r) {
  return staircase_extraction(r, TieBreak::kLeftmost);
}
inline Permutation rightmost_of(const Rectangulation& r) {
  return staircase_extraction(r, TieBreak::kRightmost);
}

// For every interior segment: its orientation and the labels along each of
// its two sides, in order. Wall slides only interleave the two sides, so
// R-equivalent drawings share this signature.
struct SegmentSides {
  Orientation orientation = Orientation::kHorizontal;
  std::vector<int> first;   // above / left
  std::vector<int> second;  // below / right
  auto operator<=>(const SegmentSides&) const = default;
};
std::vector<SegmentSides> mosaic_signature(const Grid& g);

}  // namespace rectflip

#endif  // RECTFLIP_BIJECTION_H_
