#ifndef RECTFLIP_ORDER_H_
#define RECTFLIP_ORDER_H_

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "rectflip/permutation.h"

namespace rectflip {

// Inversions (value pairs) packed into a bit mask. Supports n <= 11.
uint64_t inversion_mask(const Permutation& p);

// Weak order: inclusion of inversion sets. Throws std::invalid_argument on a
// size mismatch.
bool weak_leq(const Permutation& a, const Permutation& b);

using CoverSet = std::set<std::pair<Permutation, Permutation>>;

// Cover pairs (lower, upper) of the full weak order on S_n: adjacent position
// swaps that add one inversion.
CoverSet weak_order_covers(int n);

// Transitive reduction of the weak order restricted to `elements`.
CoverSet restricted_covers(const std::vector<Permutation>& elements);

// Cover relation of dRec_n: the weak order restricted to Baxter permutations.
CoverSet drec_covers(int n);

enum class CoverRelation { kNone, kCovers, kCoveredBy };

// kCovers when a is covered by b, i.e. (a, b) is a cover pair. Throws
// std::invalid_argument unless both are Baxter permutations of equal size.
CoverRelation drec_relation(const Permutation& a, const Permutation& b);
inline bool is_drec_cover(const Permutation& a, const Permutation& b) {
  return drec_relation(a, b) != CoverRelation::kNone;
}

// Meet and join by brute force over S_n; empty if they do not exist.
std::optional<Permutation> weak_meet(const Permutation& a, const Permutation& b);
std::optional<Permutation> weak_join(const Permutation& a, const Permutation& b);
// Every pair of S_n has a meet and a join. Practical for n <= 5.
bool weak_order_is_lattice(int n);

// Whether `members` is exactly the interval [min, max] of the weak order for
// some min and max among them.
bool is_weak_interval(const std::vector<Permutation>& members);

}  // namespace rectflip

#endif  // RECTFLIP_ORDER_H_
