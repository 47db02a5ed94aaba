#ifndef RECTFLIP_EXPORT_H_
#define RECTFLIP_EXPORT_H_

#include <string>
#include <string_view>

#include "rectflip/flipgraph.h"
#include "rectflip/flips.h"
#include "rectflip/rectangulation.h"

namespace rectflip {

struct RenderStyle {
  int cell = 40;    // pixels per grid cell
  int margin = 20;
  std::string simple_color = "green";
  std::string law_reading_color = "blue";
  std::string barcelona_color = "red";
  std::string unflippable_color = "black";
  std::string diagonal_dash = "6,4";
};

// Stroke color for an edge of the given class.
std::string_view edge_color(const FlipClass& cls, const RenderStyle& style = {});

// {"n": n, "nodes": [key...], "edges": [{"a", "b", "class", "multiplicity"}]}
std::string to_json(const FlipGraph& g);
// Undirected Graphviz graph; node names are Baxter keys and edge colors
// encode the flip class.
std::string to_dot(const FlipGraph& g, const RenderStyle& style = {});
// SVG 1.1 drawing of the canonical grid with the main diagonal and every
// interior edge colored by its flip class.
std::string render_svg(const Rectangulation& r, const RenderStyle& style = {});

}  // namespace rectflip

#endif  // RECTFLIP_EXPORT_H_
