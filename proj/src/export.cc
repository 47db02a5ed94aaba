#include "rectflip/export.h"

#include <sstream>

#include "json.hpp"

namespace rectflip {

std::string_view edge_color(const FlipClass& cls, const RenderStyle& style) {
  switch (cls.kind) {
    case FlipKind::kSimple: return style.simple_color;
    case FlipKind::kRotationLR: return style.law_reading_color;
    case FlipKind::kRotationBarcelona: return style.barcelona_color;
    default: return style.unflippable_color;
  }
}

std::string to_json(const FlipGraph& g) {
  nlohmann::ordered_json out;
  out["n"] = g.n;
  out["nodes"] = nlohmann::ordered_json::array();
  for (const Permutation& p : g.nodes) out["nodes"].push_back(p.str());
  out["edges"] = nlohmann::ordered_json::array();
  for (const GraphEdge& e : g.edges) {
    out["edges"].push_back({{"a", g.nodes[e.a].str()},
                            {"b", g.nodes[e.b].str()},
                            {"class", e.cls.name()},
                            {"multiplicity", e.multiplicity}});
  }
  return out.dump(2) + "\n";
}

std::string to_dot(const FlipGraph& g, const RenderStyle& style) {
  std::ostringstream out;
  out << "graph flips_" << g.n << " {\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  for (const Permutation& p : g.nodes) out << "  \"" << p.str() << "\";\n";
  for (const GraphEdge& e : g.edges) {
    out << "  \"" << g.nodes[e.a].str() << "\" -- \"" << g.nodes[e.b].str()
        << "\" [color=" << edge_color(e.cls, style) << ", label=\"" << e.cls.name();
    if (e.multiplicity > 1) out << " x" << e.multiplicity;
    out << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string render_svg(const Rectangulation& r, const RenderStyle& style) {
  const int n = r.size();
  const int side = n * style.cell;
  const int total = side + 2 * style.margin;
  auto px = [&](int lattice) { return style.margin + lattice * style.cell; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << total
      << "\" height=\"" << total << "\" viewBox=\"0 0 " << total << " " << total
      << "\">\n";
  out << "  <rect x=\"0\" y=\"0\" width=\"" << total << "\" height=\"" << total
      << "\" fill=\"white\"/>\n";
  out << "  <line x1=\"" << px(0) << "\" y1=\"" << px(0) << "\" x2=\"" << px(n)
      << "\" y2=\"" << px(n) << "\" stroke=\"gray\" stroke-width=\"1\" stroke-dasharray=\""
      << style.diagonal_dash << "\"/>\n";
  for (const EdgeReport& rep : classify_all(r)) {
    const EdgeInfo& e = rep.edge;
    const bool h = e.orientation() == Orientation::kHorizontal;
    const int x1 = h ? e.from : e.line;
    const int y1 = h ? e.line : e.from;
    const int x2 = h ? e.to : e.line;
    const int y2 = h ? e.line : e.to;
    out << "  <line x1=\"" << px(x1) << "\" y1=\"" << px(y1) << "\" x2=\"" << px(x2)
        << "\" y2=\"" << px(y2) << "\" stroke=\"" << edge_color(rep.cls, style)
        << "\" stroke-width=\"3\"><title>" << e.id.str() << " " << rep.cls.name()
        << "</title></line>\n";
  }
  out << "  <rect x=\"" << px(0) << "\" y=\"" << px(0) << "\" width=\"" << side
      << "\" height=\"" << side << "\" fill=\"none\" stroke=\"black\" stroke-width=\"3\"/>\n";
  const int font = style.cell / 2;
  for (const auto& [label, box] : r.grid().rects()) {
    // Twice the centre, so odd extents stay integral.
    const int cx2 = px(box.x0) + px(box.x1);
    const int cy2 = px(box.y0) + px(box.y1);
    out << "  <text x=\"" << cx2 / 2 << (cx2 % 2 ? ".5" : "") << "\" y=\"" << cy2 / 2
        << (cy2 % 2 ? ".5" : "") << "\" font-family=\"sans-serif\" font-size=\"" << font
        << "\" text-anchor=\"middle\" dominant-baseline=\"central\">" << label
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace rectflip
