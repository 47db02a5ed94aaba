#ifndef RECTFLIP_FLIPGRAPH_H_
#define RECTFLIP_FLIPGRAPH_H_

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rectflip/flips.h"
#include "rectflip/order.h"
#include "rectflip/permutation.h"
#include "rectflip/rectangulation.h"

namespace rectflip {

struct GraphEdge {
  int a = 0;  // node index, a < b
  int b = 0;
  FlipClass cls;
  int multiplicity = 0;     // distinct edges of node a whose flip leads to b
  std::vector<EdgeId> via;  // those edges, as edge ids of node a
};

struct FlipGraph {
  int n = 0;
  std::vector<Permutation> nodes;     // Baxter keys, lexicographic
  std::vector<Rectangulation> rects;  // rho(nodes[i])
  std::vector<GraphEdge> edges;       // sorted by (a, b)
  // Node pairs reached with different classes, or with different
  // multiplicities from the two sides. Zero in a consistent graph.
  int inconsistencies = 0;

  // Index of a Baxter key, or -1.
  int index_of(const Permutation& key) const;
};

// Nodes are rho(p) for the Baxter permutations p of size n.
FlipGraph build(int n);

// Unordered permutation pair, stored with the smaller permutation first.
using PermPair = std::pair<Permutation, Permutation>;
PermPair make_pair_unordered(const Permutation& a, const Permutation& b);

// Node pairs joined by an edge of one of `kinds`.
std::set<PermPair> edge_pairs(const FlipGraph& g, const std::set<FlipKind>& kinds);
std::set<PermPair> barcelona_pairs(const FlipGraph& g);
std::set<PermPair> law_reading_pairs(const FlipGraph& g);

// Baxter pairs related by a single consecutive-value swap.
std::set<PermPair> value_swap_pairs(int n);
std::set<PermPair> unordered(const CoverSet& covers);

struct Report {
  std::string name;
  long long checked = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  // One line "name: ok (checked N)" or "name: FAILED (k counterexamples)"
  // followed by up to `limit` counterexample lines.
  std::string str(size_t limit = 20) const;
};

// Set equality with a counterexample per element of the symmetric
// difference.
Report compare_pairs(const std::string& name, const std::string& left_name,
                     const std::set<PermPair>& left, const std::string& right_name,
                     const std::set<PermPair>& right);

// Barcelona adjacency equals consecutive-value-swap adjacency, and each
// Barcelona edge separates exactly the two swapped values.
Report verify_theorem_main(const FlipGraph& g);
Report verify_theorem_main(int n);
// Law-Reading adjacency equals the cover relation of dRec_n.
Report verify_theorem_lr(const FlipGraph& g, const CoverSet& covers);
Report verify_theorem_lr(int n);
// Simple edges are the intersection, all edges the union, of the two
// relations above.
Report verify_characterization(int n);
// Node count equals the Baxter count, the graph is connected and the
// simple-flip components match the s_class avoiders.
Report verify_counts(int n);
// A Barcelona edge between G and G' turns into a Law-Reading edge between
// the rectangulations of the inverse Baxter permutations.
Report verify_inversion(int n);

int simple_flip_components(const FlipGraph& g);
int simple_flip_components(int n);

struct Metrics {
  int nodes = 0;
  int edges = 0;
  int diameter = 0;  // -1 when disconnected
  int min_degree = 0;
  int max_degree = 0;
  double mean_degree = 0;
  bool connected = false;
};
Metrics metrics(const FlipGraph& g);

}  // namespace rectflip

#endif  // RECTFLIP_FLIPGRAPH_H_
