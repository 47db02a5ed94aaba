#include "rectflip/cli.h"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rectflip/bijection.h"
#include "rectflip/export.h"
#include "rectflip/flipgraph.h"
#include "rectflip/flips.h"

namespace rectflip::cli {

namespace {

// Carries an exit code out of a subcommand.
struct Exit {
  int code;
  std::string message;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream text;
  if (path == "-") {
    text << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw Exit{kExitBadInput, "cannot open " + path};
    text << file.rdbuf();
  }
  return text.str();
}

Permutation parse_permutation(const std::string& text) {
  try {
    return Permutation::parse(text);
  } catch (const std::invalid_argument& e) {
    throw Exit{kExitBadInput, e.what()};
  }
}

// Parses a label matrix. Non-canonical drawings are redrawn when `redraw`
// is set and rejected otherwise.
Rectangulation load_rectangulation(const std::string& path, bool redraw,
                                   std::istream& in) {
  Grid grid;
  try {
    grid = Grid::parse(read_input(path, in));
  } catch (const std::invalid_argument& e) {
    throw Exit{kExitBadInput, e.what()};
  }
  try {
    return Rectangulation(grid);
  } catch (const InvalidGrid& e) {
    if (!redraw) {
      std::string why = e.what();
      if (auto o = diagonal_obstruction(grid)) {
        why = "not a diagonal rectangulation: " + o->describe();
      }
      throw Exit{kExitNotDiagonal, why + " (use --canonicalize to redraw)"};
    }
  }
  try {
    return canonicalize(grid);
  } catch (const NotDiagonal& e) {
    throw Exit{kExitNotDiagonal, e.what()};
  }
}

EdgeId parse_edge(const std::string& text) {
  try {
    return EdgeId::parse(text);
  } catch (const std::invalid_argument& e) {
    throw Exit{kExitBadInput, e.what()};
  }
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Exit{kExitBadInput, "cannot write " + path};
  file << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Diagonal rectangulations, Baxter permutations and their flips", "rectflip"};
  app.require_subcommand(1);

  std::string perm_text;
  std::string input = "-";
  std::string edge_text;
  std::string output;
  std::string theorem = "all";
  std::string class_text = "baxter";
  bool canonical_redraw = false;
  bool dot = false;
  bool json = false;
  bool stats = false;
  int n = 0;

  auto* map = app.add_subcommand("map", "Print the canonical grid of rho(PERM)");
  map->add_option("perm", perm_text, "Permutation, e.g. 4165372")->required();

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "Label matrix file, '-' for stdin");
    sub->add_flag("--canonicalize", canonical_redraw,
                  "Redraw a non-canonical diagonal drawing first");
  };
  auto* perms = app.add_subcommand(
      "perms", "Print the Baxter, twisted Baxter and rightmost permutations and the fibre size");
  add_input(perms);
  auto* flips = app.add_subcommand("flips", "Classify every interior edge");
  add_input(flips);
  auto* flip_cmd = app.add_subcommand("flip", "Flip one edge and print the new grid");
  flip_cmd->add_option("edge", edge_text, "Edge id such as 3|4:v")->required();
  add_input(flip_cmd);

  auto* graph = app.add_subcommand("graph", "Build the flip graph on n rectangles");
  graph->add_option("n", n, "Number of rectangles")->required()->check(CLI::Range(1, 8));
  auto* dot_flag = graph->add_flag("--dot", dot, "Graphviz output");
  graph->add_flag("--json", json, "JSON output (default)")->excludes(dot_flag);
  graph->add_flag("--stats", stats, "Print diameter and degree statistics instead");
  graph->add_option("-o,--output", output, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check a theorem exhaustively for size n");
  verify->add_option("n", n, "Number of rectangles")->required()->check(CLI::Range(1, 7));
  verify->add_option("--theorem", theorem, "main, lr, char, counts, inversion or all")
      ->check(CLI::IsMember({"main", "lr", "char", "counts", "inversion", "all"}));

  auto* render = app.add_subcommand("render", "Draw a rectangulation as SVG");
  add_input(render);
  render->add_option("--svg", output, "SVG output path (default stdout)");

  auto* enumerate = app.add_subcommand("enumerate", "List pattern-avoiding permutations");
  enumerate->add_option("n", n, "Size")->required()->check(CLI::Range(0, 10));
  enumerate->add_option("--class", class_text,
                        "separable, baxter, twisted_baxter, rightmost_class or s_class");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }

  try {
    if (map->parsed()) {
      out << rho(parse_permutation(perm_text)).str();
    } else if (perms->parsed()) {
      const Rectangulation r = load_rectangulation(input, canonical_redraw, in);
      const bool small = r.size() <= kMaxFiberSize;
      out << "baxter: "
          << (small ? baxter_of(r) : baxter_by_block_deletion(r.grid())).str() << "\n"
          << "twisted: " << twisted_baxter_of(r).str() << "\n"
          << "rightmost: " << rightmost_of(r).str() << "\n"
          << "fiber: " << (small ? std::to_string(fiber(r).members.size()) : "n/a")
          << "\n";
    } else if (flips->parsed()) {
      const Rectangulation r = load_rectangulation(input, canonical_redraw, in);
      for (const EdgeReport& rep : classify_all(r)) {
        out << std::left << std::setw(10) << rep.edge.id.str() << std::setw(20)
            << rep.cls.name();
        out << (rep.result ? baxter_by_block_deletion(rep.result->rect.grid()).str() + " via " +
                                 rep.result->edge.str()
                           : std::string("-"))
            << "\n";
      }
    } else if (flip_cmd->parsed()) {
      const Rectangulation r = load_rectangulation(input, canonical_redraw, in);
      const EdgeId id = parse_edge(edge_text);
      try {
        const FlipResult res = flip(r, id);
        out << res.rect.str();
        err << "new edge: " << res.edge.str() << "\n";
      } catch (const EdgeUnflippable& e) {
        throw Exit{kExitUnflippable, e.what()};
      } catch (const std::invalid_argument& e) {
        throw Exit{kExitBadInput, e.what()};
      }
    } else if (graph->parsed()) {
      const FlipGraph g = build(n);
      std::string text;
      if (stats) {
        const Metrics m = metrics(g);
        std::ostringstream s;
        s << "nodes: " << m.nodes << "\nedges: " << m.edges
          << "\nconnected: " << (m.connected ? "yes" : "no")
          << "\ndiameter: " << m.diameter << "\ndegree: min " << m.min_degree
          << " max " << m.max_degree << " mean " << std::fixed << std::setprecision(3)
          << m.mean_degree << "\nsimple components: " << simple_flip_components(g)
          << "\n";
        text = s.str();
      } else {
        text = dot ? to_dot(g) : to_json(g);
      }
      write_output(output, text, out);
    } else if (verify->parsed()) {
      std::vector<Report> reports;
      auto want = [&](const char* name) { return theorem == "all" || theorem == name; };
      if (want("main")) reports.push_back(verify_theorem_main(n));
      if (want("lr")) reports.push_back(verify_theorem_lr(n));
      if (want("char")) reports.push_back(verify_characterization(n));
      if (want("counts")) reports.push_back(verify_counts(n));
      if (want("inversion")) reports.push_back(verify_inversion(n));
      bool ok = true;
      for (const Report& r : reports) {
        out << "n=" << n << " " << r.str();
        ok = ok && r.ok();
      }
      return ok ? 0 : 1;
    } else if (render->parsed()) {
      const Rectangulation r = load_rectangulation(input, canonical_redraw, in);
      write_output(output, render_svg(r), out);
    } else if (enumerate->parsed()) {
      PatternClass c;
      try {
        c = parse_class(class_text);
      } catch (const std::invalid_argument& e) {
        throw Exit{kExitBadInput, e.what()};
      }
      for (const Permutation& p : enumerate_avoiders(n, c)) out << p.str() << "\n";
    }
  } catch (const Exit& e) {
    err << "error: " << e.message << "\n";
    return e.code;
  }
  return 0;
}

}  // namespace rectflip::cli
