#ifndef RECTFLIP_FLIPS_H_
#define RECTFLIP_FLIPS_H_

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rectflip/grid.h"
#include "rectflip/rectangulation.h"

namespace rectflip {

enum class FlipKind {
  kSimple,                  // unmatched at both endpoints
  kRotationLR,              // rotation, edge off the diagonal
  kRotationBarcelona,       // rotation, edge crossing the diagonal
  kUnflippableBothMatched,
  kUnflippableOneMatched,
};

struct FlipClass {
  FlipKind kind = FlipKind::kSimple;
  // For kUnflippableOneMatched: 1 horizontal/matched-left,
  // 2 horizontal/matched-right, 3 vertical/matched-top,
  // 4 vertical/matched-bottom. Zero otherwise.
  int subtype = 0;

  bool flippable() const {
    return kind == FlipKind::kSimple || kind == FlipKind::kRotationLR ||
           kind == FlipKind::kRotationBarcelona;
  }
  bool law_reading() const {
    return kind == FlipKind::kSimple || kind == FlipKind::kRotationLR;
  }
  bool barcelona() const {
    return kind == FlipKind::kSimple || kind == FlipKind::kRotationBarcelona;
  }
  // "simple", "rotation-lr", "rotation-barcelona", "unflippable-both",
  // "unflippable-one-<subtype>".
  std::string name() const;
  auto operator<=>(const FlipClass&) const = default;
};

class EdgeUnflippable : public std::runtime_error {
 public:
  explicit EdgeUnflippable(FlipClass c)
      : std::runtime_error("edge is not flippable (" + c.name() + ")"), class_(c) {}
  FlipClass flip_class() const { return class_; }

 private:
  FlipClass class_;
};

struct FlipResult {
  Rectangulation rect;
  EdgeId edge;  // the new edge in `rect`
};

// Throws std::invalid_argument if `id` is not an interior edge of r.
FlipClass classify_edge(const Rectangulation& r, const EdgeId& id);
// Throws EdgeUnflippable when the edge cannot be flipped.
FlipResult flip(const Rectangulation& r, const EdgeId& id);

struct EdgeReport {
  EdgeInfo edge;
  FlipClass cls;
  std::optional<FlipResult> result;  // set iff cls.flippable()
};

// Every interior edge with its class, sorted by edge id.
std::vector<EdgeReport> classify_all(const Rectangulation& r);

struct Neighbor {
  Rectangulation rect;
  FlipClass cls;
  EdgeId edge;      // flipped edge in the source
  EdgeId new_edge;  // resulting edge in `rect`
};

// One entry per flippable edge, ordered by edge id.
std::vector<Neighbor> neighbors(const Rectangulation& r);

// Law-Reading flippable edges by the vertex-locking rule: at every interior
// vertex, of the edges heading towards the diagonal, the one matched there
// is locked; every edge never locked is flippable.
std::set<EdgeId> law_reading_edges(const Rectangulation& r);

}  // namespace rectflip

#endif  // RECTFLIP_FLIPS_H_
