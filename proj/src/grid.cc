#include "rectflip/grid.h"

#include <algorithm>
#include <limits>
#include <sstream>

namespace rectflip {

Grid::Grid(int rows, int cols, std::vector<int> labels)
    : rows_(rows), cols_(cols), labels_(std::move(labels)) {
  if (rows_ < 1 || cols_ < 1) throw InvalidGrid("grid must be non-empty");
  if (static_cast<int>(labels_.size()) != rows_ * cols_) {
    throw InvalidGrid("label count does not match grid size");
  }
  std::map<int, int> cell_count;
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      const int label = at(r, c);
      if (label < 1) throw InvalidGrid("labels must be positive");
      auto [it, inserted] = rects_.try_emplace(label, CellRect{c, r, c + 1, r + 1});
      if (!inserted) {
        CellRect& box = it->second;
        box.x0 = std::min(box.x0, c);
        box.y0 = std::min(box.y0, r);
        box.x1 = std::max(box.x1, c + 1);
        box.y1 = std::max(box.y1, r + 1);
      }
      ++cell_count[label];
    }
  }
  for (const auto& [label, box] : rects_) {
    if (box.width() * box.height() != cell_count[label]) {
      throw InvalidGrid("cells labelled " + std::to_string(label) +
                        " do not form a rectangle");
    }
  }
  for (int y = 1; y < rows_; ++y) {
    for (int x = 1; x < cols_; ++x) {
      if (arms(Point{x, y}) == (kArmN | kArmE | kArmS | kArmW)) {
        throw InvalidGrid("four rectangles meet at lattice point (" +
                          std::to_string(x) + "," + std::to_string(y) + ")");
      }
    }
  }
}

Grid Grid::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string header;
  if (!std::getline(in, header)) throw InvalidGrid("missing header line");
  std::istringstream hs(header);
  std::vector<long> head;
  long v;
  while (hs >> v) head.push_back(v);
  if (!hs.eof() || head.empty() || head.size() > 2) {
    throw InvalidGrid("header must be 'n' or 'rows cols'");
  }
  const long rows = head[0];
  const long cols = head.size() == 2 ? head[1] : head[0];
  if (rows < 1 || cols < 1 || rows > 4096 || cols > 4096) {
    throw InvalidGrid("grid dimensions out of range");
  }
  std::vector<int> labels;
  labels.reserve(rows * cols);
  std::string tok;
  while (in >> tok) {
    size_t used = 0;
    long value = 0;
    try {
      value = std::stol(tok, &used);
    } catch (const std::exception&) {
      throw InvalidGrid("non-numeric label '" + tok + "'");
    }
    if (used != tok.size() || value > std::numeric_limits<int>::max()) {
      throw InvalidGrid("bad label '" + tok + "'");
    }
    labels.push_back(static_cast<int>(value));
  }
  if (static_cast<long>(labels.size()) != rows * cols) {
    throw InvalidGrid("expected " + std::to_string(rows * cols) +
                      " labels, got " + std::to_string(labels.size()));
  }
  return Grid(static_cast<int>(rows), static_cast<int>(cols), std::move(labels));
}

std::string Grid::str() const {
  std::string out = std::to_string(rows_);
  if (rows_ != cols_) out += " " + std::to_string(cols_);
  out += "\n";
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if (c) out += " ";
      out += std::to_string(at(r, c));
    }
    out += "\n";
  }
  return out;
}

bool Grid::wall_h(int x, int y) const {
  if (y == 0 || y == rows_) return true;
  return at(y - 1, x) != at(y, x);
}

bool Grid::wall_v(int x, int y) const {
  if (x == 0 || x == cols_) return true;
  return at(y, x - 1) != at(y, x);
}

uint8_t Grid::arms(Point p) const {
  uint8_t mask = 0;
  if (p.y > 0 && wall_v(p.x, p.y - 1)) mask |= kArmN;
  if (p.y < rows_ && wall_v(p.x, p.y)) mask |= kArmS;
  if (p.x > 0 && wall_h(p.x - 1, p.y)) mask |= kArmW;
  if (p.x < cols_ && wall_h(p.x, p.y)) mask |= kArmE;
  return mask;
}

Grid Grid::reflected() const {
  std::vector<int> out(labels_.size());
  for (int r = 0; r < rows_; ++r) {
    std::copy_n(labels_.begin() + r * cols_, cols_,
                out.begin() + (rows_ - 1 - r) * cols_);
  }
  return Grid(rows_, cols_, std::move(out));
}

Grid Grid::refined(int factor) const {
  const int rows = rows_ * factor;
  const int cols = cols_ * factor;
  std::vector<int> out(rows * cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) out[r * cols + c] = at(r / factor, c / factor);
  }
  return Grid(rows, cols, std::move(out));
}

Grid Grid::relabeled(const std::map<int, int>& relabel) const {
  std::vector<int> out(labels_);
  for (int& label : out) {
    if (auto it = relabel.find(label); it != relabel.end()) label = it->second;
  }
  return Grid(rows_, cols_, std::move(out));
}

Grid Grid::compressed() const {
  std::vector<int> keep_rows{0};
  for (int y = 1; y < rows_; ++y) {
    for (int x = 0; x < cols_; ++x) {
      if (wall_h(x, y)) {
        keep_rows.push_back(y);
        break;
      }
    }
  }
  std::vector<int> keep_cols{0};
  for (int x = 1; x < cols_; ++x) {
    for (int y = 0; y < rows_; ++y) {
      if (wall_v(x, y)) {
        keep_cols.push_back(x);
        break;
      }
    }
  }
  const int rows = static_cast<int>(keep_rows.size());
  const int cols = static_cast<int>(keep_cols.size());
  std::vector<int> out;
  out.reserve(rows * cols);
  for (int r : keep_rows) {
    for (int c : keep_cols) out.push_back(at(r, c));
  }
  return Grid(rows, cols, std::move(out));
}

std::string_view vertex_symbol(VertexKind kind) {
  switch (kind) {
    case VertexKind::kCorner: return "corner";
    case VertexKind::kTeeRight: return "⊢";
    case VertexKind::kTeeLeft: return "⊣";
    case VertexKind::kTeeDown: return "⊤";
    case VertexKind::kTeeUp: return "⊥";
  }
  return "?";
}

VertexKind vertex_kind_at(const Grid& grid, Point p) {
  switch (grid.arms(p)) {
    case kArmN | kArmS | kArmE: return VertexKind::kTeeRight;
    case kArmN | kArmS | kArmW: return VertexKind::kTeeLeft;
    case kArmE | kArmW | kArmS: return VertexKind::kTeeDown;
    case kArmE | kArmW | kArmN: return VertexKind::kTeeUp;
    case kArmE | kArmS:
    case kArmE | kArmN:
    case kArmW | kArmS:
    case kArmW | kArmN: return VertexKind::kCorner;
    default: break;
  }
  throw std::logic_error("lattice point is not a vertex");
}

std::string EdgeId::str() const {
  return std::to_string(lo) + "|" + std::to_string(hi) +
         (orientation == Orientation::kHorizontal ? ":h" : ":v");
}

EdgeId EdgeId::parse(std::string_view text) {
  const auto bar = text.find('|');
  const auto colon = text.find(':');
  if (bar == std::string_view::npos || colon == std::string_view::npos ||
      colon < bar || colon + 2 != text.size()) {
    throw std::invalid_argument("edge id must look like 'a|b:h' or 'a|b:v'");
  }
  EdgeId id;
  try {
    id.lo = std::stoi(std::string(text.substr(0, bar)));
    id.hi = std::stoi(std::string(text.substr(bar + 1, colon - bar - 1)));
  } catch (const std::exception&) {
    throw std::invalid_argument("edge id labels must be integers");
  }
  const char o = text[colon + 1];
  if (o != 'h' && o != 'v') throw std::invalid_argument("edge orientation must be h or v");
  id.orientation = o == 'h' ? Orientation::kHorizontal : Orientation::kVertical;
  if (id.lo > id.hi) std::swap(id.lo, id.hi);
  return id;
}

const EdgeInfo* Geometry::find(const EdgeId& id) const {
  auto it = std::lower_bound(
      edges.begin(), edges.end(), id,
      [](const EdgeInfo& e, const EdgeId& key) { return e.id < key; });
  if (it == edges.end() || it->id != id) return nullptr;
  return &*it;
}

namespace {

EdgeInfo make_edge(const Grid& grid, Orientation o, int line, int from, int to,
                   int segment) {
  EdgeInfo e;
  e.line = line;
  e.from = from;
  e.to = to;
  e.segment = segment;
  const bool horizontal = o == Orientation::kHorizontal;
  const Point a = horizontal ? Point{from, line} : Point{line, from};
  const Point b = horizontal ? Point{to, line} : Point{line, to};
  e.first = horizontal ? grid.at(line - 1, from) : grid.at(from, line - 1);
  e.second = horizontal ? grid.at(line, from) : grid.at(from, line);
  e.id = EdgeId{std::min(e.first, e.second), std::max(e.first, e.second), o};
  e.start = VertexInfo{a, vertex_kind_at(grid, a)};
  e.end = VertexInfo{b, vertex_kind_at(grid, b)};
  e.matched_start = grid.arms(a) & (horizontal ? kArmW : kArmN);
  e.matched_end = grid.arms(b) & (horizontal ? kArmE : kArmS);
  // Diagonal from (0,0) to (cols,rows); scaled to stay in integers.
  const long rows = grid.rows();
  const long cols = grid.cols();
  if (horizontal) {
    e.crosses_diagonal = from * rows < line * cols && line * cols < to * rows;
  } else {
    e.crosses_diagonal = from * cols < line * rows && line * rows < to * cols;
  }
  return e;
}

}  // namespace

Geometry geometry(const Grid& grid) {
  Geometry g;
  for (int y = 0; y <= grid.rows(); ++y) {
    for (int x = 0; x <= grid.cols(); ++x) {
      const uint8_t a = grid.arms(Point{x, y});
      const bool straight = a == (kArmN | kArmS) || a == (kArmE | kArmW);
      if (a != 0 && !straight) {
        g.vertices.push_back(VertexInfo{Point{x, y}, vertex_kind_at(grid, Point{x, y})});
      }
    }
  }
  for (int y = 1; y < grid.rows(); ++y) {
    int x = 0;
    while (x < grid.cols()) {
      if (!grid.wall_h(x, y)) {
        ++x;
        continue;
      }
      Segment s{Orientation::kHorizontal, y, x, x, {}};
      while (x < grid.cols() && grid.wall_h(x, y)) ++x;
      s.to = x;
      for (int t = s.from; t <= s.to; ++t) {
        if (grid.arms(Point{t, y}) & (kArmN | kArmS)) {
          s.vertices.push_back(VertexInfo{Point{t, y}, vertex_kind_at(grid, Point{t, y})});
        }
      }
      g.segments.push_back(std::move(s));
    }
  }
  for (int x = 1; x < grid.cols(); ++x) {
    int y = 0;
    while (y < grid.rows()) {
      if (!grid.wall_v(x, y)) {
        ++y;
        continue;
      }
      Segment s{Orientation::kVertical, x, y, y, {}};
      while (y < grid.rows() && grid.wall_v(x, y)) ++y;
      s.to = y;
      for (int t = s.from; t <= s.to; ++t) {
        if (grid.arms(Point{x, t}) & (kArmE | kArmW)) {
          s.vertices.push_back(VertexInfo{Point{x, t}, vertex_kind_at(grid, Point{x, t})});
        }
      }
      g.segments.push_back(std::move(s));
    }
  }
  for (size_t si = 0; si < g.segments.size(); ++si) {
    const Segment& s = g.segments[si];
    for (size_t i = 0; i + 1 < s.vertices.size(); ++i) {
      const bool horizontal = s.orientation == Orientation::kHorizontal;
      const int from = horizontal ? s.vertices[i].point.x : s.vertices[i].point.y;
      const int to = horizontal ? s.vertices[i + 1].point.x : s.vertices[i + 1].point.y;
      g.edges.push_back(make_edge(grid, s.orientation, s.line, from, to,
                                  static_cast<int>(si)));
    }
  }
  std::sort(g.edges.begin(), g.edges.end(),
            [](const EdgeInfo& a, const EdgeInfo& b) { return a.id < b.id; });
  return g;
}

Adjacency adjacency(const Grid& grid) {
  Adjacency adj;
  for (const EdgeInfo& e : geometry(grid).edges) {
    if (e.orientation() == Orientation::kVertical) {
      adj.left_of.emplace_back(e.first, e.second);
    } else {
      adj.above.emplace_back(e.first, e.second);
    }
  }
  std::sort(adj.left_of.begin(), adj.left_of.end());
  std::sort(adj.above.begin(), adj.above.end());
  return adj;
}

}  // namespace rectflip
