#ifndef RECTFLIP_GRID_H_
#define RECTFLIP_GRID_H_

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rectflip {

// Raised for label matrices that do not describe a rectangulation.
class InvalidGrid : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Orientation { kHorizontal, kVertical };

// Lattice point. x is the column line (0 = left side), y the row line
// (0 = top side).
struct Point {
  int x = 0;
  int y = 0;
  auto operator<=>(const Point&) const = default;
};

// Half-open block of cells [x0, x1) x [y0, y1) in lattice coordinates.
struct CellRect {
  int x0 = 0;
  int y0 = 0;
  int x1 = 0;
  int y1 = 0;
  int width() const { return x1 - x0; }
  int height() const { return y1 - y0; }
  bool contains_cell(int row, int col) const {
    return row >= y0 && row < y1 && col >= x0 && col < x1;
  }
  auto operator<=>(const CellRect&) const = default;
};

// Arm bits at a lattice point.
inline constexpr uint8_t kArmN = 1;
inline constexpr uint8_t kArmE = 2;
inline constexpr uint8_t kArmS = 4;
inline constexpr uint8_t kArmW = 8;

// A partition of a rows x cols cell grid into labelled rectangles. Labels
// are positive and need not be contiguous. No interior lattice point may be
// shared by four rectangles.
class Grid {
 public:
  Grid() = default;
  // Throws InvalidGrid.
  Grid(int rows, int cols, std::vector<int> labels);

  // "n" followed by n rows of n labels, or "rows cols" followed by the rows.
  static Grid parse(std::string_view text);
  // Inverse of parse; square grids use the single-number header.
  std::string str() const;

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int at(int row, int col) const { return labels_[row * cols_ + col]; }
  const std::vector<int>& labels() const { return labels_; }
  const std::map<int, CellRect>& rects() const { return rects_; }
  int rect_count() const { return static_cast<int>(rects_.size()); }

  // Whether the unit segment (x,y)-(x+1,y) / (x,y)-(x,y+1) is drawn. The
  // square boundary counts as drawn.
  bool wall_h(int x, int y) const;
  bool wall_v(int x, int y) const;
  uint8_t arms(Point p) const;

  // Mirror image with rows reversed (reflection in the horizontal axis).
  Grid reflected() const;
  // Every cell replaced by a factor x factor block.
  Grid refined(int factor) const;
  // Labels mapped through `relabel`; labels missing from the map are kept.
  Grid relabeled(const std::map<int, int>& relabel) const;
  // Drops grid lines that carry no wall; the combinatorial structure is
  // unchanged.
  Grid compressed() const;

  bool operator==(const Grid& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ &&
           labels_ == other.labels_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> labels_;
  std::map<int, CellRect> rects_;
};

enum class VertexKind {
  kCorner,    // corner of the square
  kTeeRight,  // ⊢ : arms N, S, E
  kTeeLeft,   // ⊣ : arms N, S, W
  kTeeDown,   // ⊤ : arms E, W, S
  kTeeUp,     // ⊥ : arms E, W, N
};

std::string_view vertex_symbol(VertexKind kind);

struct VertexInfo {
  Point point;
  VertexKind kind = VertexKind::kCorner;
};

// Identifies an interior edge by the two rectangles it separates.
struct EdgeId {
  int lo = 0;
  int hi = 0;
  Orientation orientation = Orientation::kHorizontal;

  // "a|b:h" or "a|b:v".
  std::string str() const;
  static EdgeId parse(std::string_view text);
  auto operator<=>(const EdgeId&) const = default;
};

// Maximal interior segment. `vertices` are ordered by increasing coordinate
// along the segment and include both endpoints.
struct Segment {
  Orientation orientation = Orientation::kHorizontal;
  int line = 0;
  int from = 0;
  int to = 0;
  std::vector<VertexInfo> vertices;
};

// Interior edge between two consecutive vertices of a segment. `first` is
// the rectangle above (horizontal) or left (vertical); `start` is the
// endpoint with the smaller coordinate.
struct EdgeInfo {
  EdgeId id;
  int line = 0;
  int from = 0;
  int to = 0;
  int first = 0;
  int second = 0;
  VertexInfo start;
  VertexInfo end;
  bool matched_start = false;
  bool matched_end = false;
  bool crosses_diagonal = false;
  int segment = 0;  // index into Geometry::segments

  Orientation orientation() const { return id.orientation; }
  bool matched_both() const { return matched_start && matched_end; }
  bool matched_none() const { return !matched_start && !matched_end; }
};

struct Geometry {
  std::vector<VertexInfo> vertices;  // every vertex, including the corners
  std::vector<Segment> segments;     // interior segments only
  std::vector<EdgeInfo> edges;       // interior edges, sorted by id

  const EdgeInfo* find(const EdgeId& id) const;
};

// The diagonal used by crosses_diagonal runs from the top-left to the
// bottom-right corner of the grid.
Geometry geometry(const Grid& grid);

VertexKind vertex_kind_at(const Grid& grid, Point p);

// Rectangle adjacency read off the interior edges.
struct Adjacency {
  std::vector<std::pair<int, int>> left_of;  // (a, b): a touches b's left side
  std::vector<std::pair<int, int>> above;    // (a, b): a touches b's top side
  auto operator<=>(const Adjacency&) const = default;
};

Adjacency adjacency(const Grid& grid);

}  // namespace rectflip

#endif  // RECTFLIP_GRID_H_
