#include "rectflip/flipgraph.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "rectflip/bijection.h"

namespace rectflip {

int FlipGraph::index_of(const Permutation& key) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), key);
  if (it == nodes.end() || *it != key) return -1;
  return static_cast<int>(it - nodes.begin());
}

FlipGraph build(int n) {
  FlipGraph g;
  g.n = n;
  g.nodes = enumerate_avoiders(n, PatternClass::kBaxter);
  std::sort(g.nodes.begin(), g.nodes.end());
  std::map<Rectangulation, int> index;
  for (const Permutation& p : g.nodes) {
    index.emplace(rho(p), static_cast<int>(g.rects.size()));
    g.rects.push_back(rho(p));
  }

  // Directed incidences, keyed by (from, to).
  struct Incidence {
    std::set<FlipClass> classes;
    std::vector<EdgeId> via;
  };
  std::map<std::pair<int, int>, Incidence> seen;
  for (int i = 0; i < static_cast<int>(g.rects.size()); ++i) {
    for (const Neighbor& nb : neighbors(g.rects[i])) {
      auto it = index.find(nb.rect);
      if (it == index.end()) {
        throw std::logic_error("flip left the set of diagonal rectangulations");
      }
      Incidence& inc = seen[{i, it->second}];
      inc.classes.insert(nb.cls);
      inc.via.push_back(nb.edge);
    }
  }
  for (const auto& [key, inc] : seen) {
    const auto [from, to] = key;
    if (from > to) continue;
    auto back = seen.find({to, from});
    const bool consistent = inc.classes.size() == 1 && back != seen.end() &&
                            back->second.classes == inc.classes &&
                            back->second.via.size() == inc.via.size();
    if (!consistent) ++g.inconsistencies;
    g.edges.push_back(GraphEdge{from, to, *inc.classes.begin(),
                                static_cast<int>(inc.via.size()), inc.via});
  }
  for (const auto& [key, inc] : seen) {
    if (key.first > key.second && !seen.count({key.second, key.first})) {
      ++g.inconsistencies;
    }
  }
  return g;
}

PermPair make_pair_unordered(const Permutation& a, const Permutation& b) {
  return a < b ? PermPair{a, b} : PermPair{b, a};
}

std::set<PermPair> edge_pairs(const FlipGraph& g, const std::set<FlipKind>& kinds) {
  std::set<PermPair> out;
  for (const GraphEdge& e : g.edges) {
    if (kinds.count(e.cls.kind)) out.insert(make_pair_unordered(g.nodes[e.a], g.nodes[e.b]));
  }
  return out;
}

std::set<PermPair> barcelona_pairs(const FlipGraph& g) {
  return edge_pairs(g, {FlipKind::kSimple, FlipKind::kRotationBarcelona});
}

std::set<PermPair> law_reading_pairs(const FlipGraph& g) {
  return edge_pairs(g, {FlipKind::kSimple, FlipKind::kRotationLR});
}

std::set<PermPair> value_swap_pairs(int n) {
  std::set<PermPair> out;
  for (const Permutation& p : enumerate_avoiders(n, PatternClass::kBaxter)) {
    for (int k = 1; k < n; ++k) {
      Permutation q = consecutive_value_swap(p, k);
      if (is_baxter(q)) out.insert(make_pair_unordered(p, q));
    }
  }
  return out;
}

std::set<PermPair> unordered(const CoverSet& covers) {
  std::set<PermPair> out;
  for (const auto& [a, b] : covers) out.insert(make_pair_unordered(a, b));
  return out;
}

std::string Report::str(size_t limit) const {
  std::ostringstream out;
  if (ok()) {
    out << name << ": ok (checked " << checked << ")\n";
  } else {
    out << name << ": FAILED (" << failures.size() << " counterexamples)\n";
    for (size_t i = 0; i < failures.size() && i < limit; ++i) {
      out << "  " << failures[i] << "\n";
    }
  }
  return out.str();
}

Report compare_pairs(const std::string& name, const std::string& left_name,
                     const std::set<PermPair>& left, const std::string& right_name,
                     const std::set<PermPair>& right) {
  Report r{name, static_cast<long long>(left.size() + right.size()), {}};
  for (const auto& p : left) {
    if (!right.count(p)) {
      r.failures.push_back(p.first.str() + " -- " + p.second.str() + " in " +
                           left_name + " only");
    }
  }
  for (const auto& p : right) {
    if (!left.count(p)) {
      r.failures.push_back(p.first.str() + " -- " + p.second.str() + " in " +
                           right_name + " only");
    }
  }
  return r;
}

Report verify_theorem_main(const FlipGraph& g) {
  Report r = compare_pairs("barcelona flips vs consecutive value swaps",
                           "barcelona", barcelona_pairs(g), "value-swap",
                           value_swap_pairs(g.n));
  for (const GraphEdge& e : g.edges) {
    if (!e.cls.barcelona()) continue;
    const Permutation& p = g.nodes[e.a];
    const Permutation& q = g.nodes[e.b];
    for (const EdgeId& id : e.via) {
      ++r.checked;
      const bool labels_swapped =
          id.hi == id.lo + 1 && consecutive_value_swap(p, id.lo) == q;
      if (!labels_swapped) {
        r.failures.push_back("edge " + id.str() + " of " + p.str() +
                             " does not swap its labels to reach " + q.str());
      }
    }
  }
  if (g.inconsistencies != 0) {
    r.failures.push_back(std::to_string(g.inconsistencies) +
                         " inconsistent node pairs in the flip graph");
  }
  return r;
}

Report verify_theorem_main(int n) { return verify_theorem_main(build(n)); }

Report verify_theorem_lr(const FlipGraph& g, const CoverSet& covers) {
  return compare_pairs("law-reading flips vs dRec covers", "law-reading",
                       law_reading_pairs(g), "cover", unordered(covers));
}

Report verify_theorem_lr(int n) { return verify_theorem_lr(build(n), drec_covers(n)); }

Report verify_characterization(int n) {
  const FlipGraph g = build(n);
  const std::set<PermPair> covers = unordered(drec_covers(n));
  const std::set<PermPair> swaps = value_swap_pairs(n);
  std::set<PermPair> both;
  std::set<PermPair> either = covers;
  std::set_intersection(covers.begin(), covers.end(), swaps.begin(), swaps.end(),
                        std::inserter(both, both.end()));
  either.insert(swaps.begin(), swaps.end());

  Report simple = compare_pairs("simple", "simple", edge_pairs(g, {FlipKind::kSimple}),
                                "cover-and-swap", both);
  Report all = compare_pairs("all", "flip", edge_pairs(g, {FlipKind::kSimple,
                                                         FlipKind::kRotationLR,
                                                         FlipKind::kRotationBarcelona}),
                             "cover-or-swap", either);
  Report r{"simple = intersection, flips = union", simple.checked + all.checked, {}};
  for (auto* part : {&simple, &all}) {
    for (auto& f : part->failures) r.failures.push_back(part->name + ": " + f);
  }
  return r;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

int simple_flip_components(const FlipGraph& g) {
  UnionFind uf(static_cast<int>(g.nodes.size()));
  int components = static_cast<int>(g.nodes.size());
  for (const GraphEdge& e : g.edges) {
    if (e.cls.kind == FlipKind::kSimple && uf.unite(e.a, e.b)) --components;
  }
  return components;
}

int simple_flip_components(int n) { return simple_flip_components(build(n)); }

Metrics metrics(const FlipGraph& g) {
  const int m = static_cast<int>(g.nodes.size());
  std::vector<std::vector<int>> adj(m);
  for (const GraphEdge& e : g.edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  Metrics out;
  out.nodes = m;
  out.edges = static_cast<int>(g.edges.size());
  if (m == 0) return out;
  out.min_degree = m;
  long long degree_sum = 0;
  for (const auto& nb : adj) {
    const int d = static_cast<int>(nb.size());
    out.min_degree = std::min(out.min_degree, d);
    out.max_degree = std::max(out.max_degree, d);
    degree_sum += d;
  }
  out.mean_degree = static_cast<double>(degree_sum) / m;
  out.connected = true;
  for (int s = 0; s < m && out.connected; ++s) {
    std::vector<int> dist(m, -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    int reached = 1;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w : adj[v]) {
        if (dist[w] >= 0) continue;
        dist[w] = dist[v] + 1;
        out.diameter = std::max(out.diameter, dist[w]);
        ++reached;
        q.push(w);
      }
    }
    out.connected = reached == m;
  }
  if (!out.connected) out.diameter = -1;
  return out;
}

Report verify_counts(int n) {
  const FlipGraph g = build(n);
  Report r{"counts", 3, {}};
  const size_t baxter = enumerate_avoiders(n, PatternClass::kBaxter).size();
  const size_t s_class = enumerate_avoiders(n, PatternClass::kS).size();
  if (g.nodes.size() != baxter) {
    r.failures.push_back("node count " + std::to_string(g.nodes.size()) +
                         " != baxter count " + std::to_string(baxter));
  }
  // Every Baxter key must draw a distinct rectangulation that reads back to
  // the same key.
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    ++r.checked;
    if (n <= kMaxFiberSize && baxter_of(g.rects[i]) != g.nodes[i]) {
      r.failures.push_back("baxter_of(rho(" + g.nodes[i].str() + ")) differs");
    }
  }
  const int components = simple_flip_components(g);
  if (components != static_cast<int>(s_class)) {
    r.failures.push_back("simple-flip components " + std::to_string(components) +
                         " != s_class count " + std::to_string(s_class));
  }
  if (!metrics(g).connected) r.failures.push_back("flip graph is disconnected");
  return r;
}

Report verify_inversion(int n) {
  const FlipGraph g = build(n);
  Report r{"barcelona flips become law-reading flips under inversion", 0, {}};
  std::map<PermPair, FlipClass> cls;
  for (const GraphEdge& e : g.edges) {
    cls[make_pair_unordered(g.nodes[e.a], g.nodes[e.b])] = e.cls;
  }
  for (const GraphEdge& e : g.edges) {
    if (e.cls.kind != FlipKind::kRotationBarcelona && e.cls.kind != FlipKind::kSimple) {
      continue;
    }
    ++r.checked;
    const PermPair inv =
        make_pair_unordered(inverse(g.nodes[e.a]), inverse(g.nodes[e.b]));
    auto it = cls.find(inv);
    const bool ok = it != cls.end() && it->second.law_reading() &&
                    (e.cls.kind != FlipKind::kSimple || it->second.kind == FlipKind::kSimple);
    if (!ok) {
      r.failures.push_back(e.cls.name() + " " + g.nodes[e.a].str() + " -- " +
                           g.nodes[e.b].str() + ": inverses " + inv.first.str() +
                           " -- " + inv.second.str() + " are " +
                           (it == cls.end() ? "not adjacent" : it->second.name()));
    }
  }
  return r;
}

}  // namespace rectflip
