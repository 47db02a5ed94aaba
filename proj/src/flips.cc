#include "rectflip/flips.h"

#include <map>

namespace rectflip {

std::string FlipClass::name() const {
  switch (kind) {
    case FlipKind::kSimple: return "simple";
    case FlipKind::kRotationLR: return "rotation-lr";
    case FlipKind::kRotationBarcelona: return "rotation-barcelona";
    case FlipKind::kUnflippableBothMatched: return "unflippable-both";
    case FlipKind::kUnflippableOneMatched:
      return "unflippable-one-" + std::to_string(subtype);
  }
  return "?";
}

namespace {

// Flips are carried out on a grid refined by this factor so that a wall
// meeting the new edge end-on can be nudged half a cell either way.
constexpr int kScale = 2;

// The new edge: it lies on `line` (coarse units) with the given orientation
// and cuts the union of the two rectangles in two.
struct Cut {
  Orientation orientation;
  int line;
  std::optional<Point> pivot;  // coarse; the matched endpoint of a rotation
};

struct Nudge {
  int line;           // fine coordinate of the wall to move
  int from;           // fine extent [from, to) along the wall
  int to;
};

// Moves a vertical (or horizontal) wall by one fine unit to the left/up
// (delta = -1) or right/down (delta = +1).
void nudge(std::vector<int>& cells, int cols, Orientation wall, const Nudge& n,
           int delta) {
  for (int t = n.from; t < n.to; ++t) {
    if (wall == Orientation::kVertical) {
      const int row = t;
      if (delta < 0) {
        cells[row * cols + n.line - 1] = cells[row * cols + n.line];
      } else {
        cells[row * cols + n.line] = cells[row * cols + n.line - 1];
      }
    } else {
      const int col = t;
      if (delta < 0) {
        cells[(n.line - 1) * cols + col] = cells[n.line * cols + col];
      } else {
        cells[n.line * cols + col] = cells[(n.line - 1) * cols + col];
      }
    }
  }
}

// All partitions obtained by re-cutting the union of e's two rectangles
// along `cut`. More than one candidate arises only when an outside wall
// meets the new edge end-on, in which case it is nudged either way.
std::vector<Grid> recut(const Grid& coarse, const EdgeInfo& e, const Cut& cut) {
  const Grid fine = coarse.refined(kScale);
  const int rows = fine.rows();
  const int cols = fine.cols();
  const int a = e.first;
  const int b = e.second;
  const bool vertical_cut = cut.orientation == Orientation::kVertical;
  const int c = cut.line * kScale;
  auto in_union = [&](int row, int col) {
    const int l = fine.at(row, col);
    return l == a || l == b;
  };

  // Extent of the new edge along its line.
  int lo = -1;
  int hi = -1;
  const int span = vertical_cut ? rows : cols;
  for (int t = 0; t < span; ++t) {
    const bool inside = vertical_cut ? in_union(t, c - 1) && in_union(t, c)
                                     : in_union(c - 1, t) && in_union(c, t);
    if (inside) {
      if (lo < 0) lo = t;
      hi = t + 1;
    }
  }
  if (lo < 0) throw std::logic_error("cut misses the union");

  std::optional<Point> pivot;
  if (cut.pivot) pivot = Point{cut.pivot->x * kScale, cut.pivot->y * kScale};
  auto point_at = [&](int t) {
    return vertical_cut ? Point{c, t} : Point{t, c};
  };
  auto wall_along = [&](int t) {
    return vertical_cut ? fine.wall_v(c, t) : fine.wall_h(c, t);
  };

  std::vector<Nudge> nudges;
  if (point_at(lo) != pivot && lo > 0 && wall_along(lo - 1)) {
    int from = lo - 1;
    while (from > 0 && wall_along(from - 1)) --from;
    nudges.push_back(Nudge{c, from, lo});
  }
  if (point_at(hi) != pivot && hi < span && wall_along(hi)) {
    int to = hi + 1;
    while (to < span && wall_along(to)) ++to;
    nudges.push_back(Nudge{c, hi, to});
  }

  std::vector<Grid> out;
  const int combos = 1 << nudges.size();
  for (int mask = 0; mask < combos; ++mask) {
    std::vector<int> cells = fine.labels();
    for (size_t i = 0; i < nudges.size(); ++i) {
      nudge(cells, cols, cut.orientation, nudges[i], (mask >> i) & 1 ? 1 : -1);
    }
    for (int row = 0; row < rows; ++row) {
      for (int col = 0; col < cols; ++col) {
        if (!in_union(row, col)) continue;
        const int along = vertical_cut ? col : row;
        cells[row * cols + col] = along < c ? a : b;
      }
    }
    try {
      out.emplace_back(rows, cols, std::move(cells));
    } catch (const InvalidGrid&) {
    }
  }
  return out;
}

struct Evaluation {
  FlipClass cls;
  std::optional<FlipResult> result;
};

Evaluation evaluate(const Rectangulation& r, const EdgeInfo& e) {
  const bool horizontal = e.orientation() == Orientation::kHorizontal;
  const Orientation across =
      horizontal ? Orientation::kVertical : Orientation::kHorizontal;
  if (e.matched_both()) return {FlipClass{FlipKind::kUnflippableBothMatched, 0}, {}};

  Cut cut{across, 0, std::nullopt};
  FlipClass success;
  FlipClass failure{FlipKind::kUnflippableOneMatched, 0};
  if (e.matched_none()) {
    // The union is a rectangle; cut it through the diagonal crossing.
    cut.line = e.line;
    success.kind = FlipKind::kSimple;
  } else {
    // Rotate around the matched endpoint.
    const int at = e.matched_start ? e.from : e.to;
    cut.line = at;
    cut.pivot = horizontal ? Point{at, e.line} : Point{e.line, at};
    success.kind = e.crosses_diagonal ? FlipKind::kRotationBarcelona
                                      : FlipKind::kRotationLR;
    failure.subtype = (horizontal ? 1 : 3) + (e.matched_start ? 0 : 1);
  }

  std::optional<FlipResult> found;
  for (const Grid& candidate : recut(r.grid(), e, cut)) {
    if (diagonal_obstruction(candidate)) continue;
    Canonical c = canonicalize_with_labels(candidate);
    EdgeId id{c.relabel.at(e.first), c.relabel.at(e.second), across};
    if (id.lo > id.hi) std::swap(id.lo, id.hi);
    if (found && !(found->rect == c.rect)) {
      throw std::logic_error("flip of " + e.id.str() + " is ambiguous");
    }
    found = FlipResult{std::move(c.rect), id};
  }
  if (!found) {
    if (success.kind == FlipKind::kSimple) {
      throw std::logic_error("simple flip of " + e.id.str() + " failed");
    }
    return {failure, {}};
  }
  return {success, std::move(found)};
}

const EdgeInfo& find_edge(const Geometry& g, const EdgeId& id) {
  const EdgeInfo* e = g.find(id);
  if (e == nullptr) throw std::invalid_argument("no interior edge " + id.str());
  return *e;
}

}  // namespace

FlipClass classify_edge(const Rectangulation& r, const EdgeId& id) {
  const Geometry g = geometry(r.grid());
  return evaluate(r, find_edge(g, id)).cls;
}

FlipResult flip(const Rectangulation& r, const EdgeId& id) {
  const Geometry g = geometry(r.grid());
  Evaluation ev = evaluate(r, find_edge(g, id));
  if (!ev.result) throw EdgeUnflippable(ev.cls);
  return std::move(*ev.result);
}

std::vector<EdgeReport> classify_all(const Rectangulation& r) {
  std::vector<EdgeReport> out;
  for (const EdgeInfo& e : geometry(r.grid()).edges) {
    Evaluation ev = evaluate(r, e);
    out.push_back(EdgeReport{e, ev.cls, std::move(ev.result)});
  }
  return out;
}

std::vector<Neighbor> neighbors(const Rectangulation& r) {
  std::vector<Neighbor> out;
  for (EdgeReport& rep : classify_all(r)) {
    if (!rep.result) continue;
    out.push_back(Neighbor{std::move(rep.result->rect), rep.cls, rep.edge.id,
                           rep.result->edge});
  }
  return out;
}

std::set<EdgeId> law_reading_edges(const Rectangulation& r) {
  const Geometry g = geometry(r.grid());
  const int n = r.size();
  // Edge leaving each vertex in each direction.
  std::map<std::pair<Point, uint8_t>, EdgeId> leaving;
  for (const EdgeInfo& e : g.edges) {
    const bool h = e.orientation() == Orientation::kHorizontal;
    leaving[{e.start.point, h ? kArmE : kArmS}] = e.id;
    leaving[{e.end.point, h ? kArmW : kArmN}] = e.id;
  }
  std::set<EdgeId> locked;
  for (const VertexInfo& v : g.vertices) {
    const Point p = v.point;
    if (p.x == 0 || p.y == 0 || p.x == n || p.y == n) continue;
    const uint8_t arms = r.grid().arms(p);
    // Above the diagonal the diagonal lies down and to the left.
    const bool above = p.y < p.x;
    const std::pair<uint8_t, uint8_t> towards[2] = {
        above ? std::pair{kArmS, kArmN} : std::pair{kArmN, kArmS},
        above ? std::pair{kArmW, kArmE} : std::pair{kArmE, kArmW}};
    for (auto [dir, opposite] : towards) {
      if ((arms & dir) && (arms & opposite)) {
        if (auto it = leaving.find({p, dir}); it != leaving.end()) {
          locked.insert(it->second);
        }
      }
    }
  }
  std::set<EdgeId> out;
  for (const EdgeInfo& e : g.edges) {
    if (!locked.count(e.id)) out.insert(e.id);
  }
  return out;
}

}  // namespace rectflip
