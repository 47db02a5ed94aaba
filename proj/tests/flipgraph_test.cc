#include "rectflip/flipgraph.h"

#include <gtest/gtest.h>

#include "oracles.h"
#include "rectflip/bijection.h"

namespace rectflip {
namespace {

Permutation P(const char* text) { return Permutation::parse(text); }

TEST(BuildTest, NodeCounts) {
  const size_t expected[] = {0, 1, 2, 6, 22, 92, 422};
  for (int n = 1; n <= 6; ++n) {
    const FlipGraph g = build(n);
    EXPECT_EQ(g.nodes.size(), expected[n]);
    EXPECT_EQ(static_cast<long long>(g.nodes.size()), oracle::baxter_number(n));
    EXPECT_EQ(g.inconsistencies, 0);
    for (size_t i = 0; i < g.nodes.size(); ++i) {
      EXPECT_EQ(g.rects[i], rho(g.nodes[i]));
      EXPECT_EQ(g.index_of(g.nodes[i]), static_cast<int>(i));
    }
  }
}

TEST(BuildTest, TrivialSizes) {
  const FlipGraph one = build(1);
  EXPECT_TRUE(one.edges.empty());
  const FlipGraph two = build(2);
  ASSERT_EQ(two.edges.size(), 1u);
  EXPECT_EQ(two.edges[0].cls.kind, FlipKind::kSimple);
  EXPECT_EQ(two.index_of(P("2413")), -1);
}

TEST(BuildTest, ThreeRectangles) {
  const FlipGraph g = build(3);
  EXPECT_EQ(g.nodes.size(), 6u);
  EXPECT_EQ(g.edges.size(), 8u);
  int simple = 0;
  for (const GraphEdge& e : g.edges) {
    EXPECT_EQ(e.multiplicity, 1);
    simple += e.cls.kind == FlipKind::kSimple;
  }
  EXPECT_EQ(simple, 4);
}

TEST(BuildTest, Deterministic) {
  const FlipGraph a = build(5);
  const FlipGraph b = build(5);
  ASSERT_EQ(a.edges.size(), b.edges.size());
  for (size_t i = 0; i < a.edges.size(); ++i) {
    EXPECT_EQ(a.edges[i].a, b.edges[i].a);
    EXPECT_EQ(a.edges[i].b, b.edges[i].b);
    EXPECT_EQ(a.edges[i].cls, b.edges[i].cls);
    EXPECT_EQ(a.edges[i].via, b.edges[i].via);
  }
}

TEST(BuildTest, NodeEdgesMatchNeighbours) {
  // Rebuilding a node from its key reproduces its incident edge tags.
  const FlipGraph g = build(5);
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    std::multiset<std::pair<int, FlipClass>> from_graph;
    for (const GraphEdge& e : g.edges) {
      if (e.a == static_cast<int>(i) || e.b == static_cast<int>(i)) {
        const int other = e.a == static_cast<int>(i) ? e.b : e.a;
        for (int k = 0; k < e.multiplicity; ++k) from_graph.emplace(other, e.cls);
      }
    }
    std::multiset<std::pair<int, FlipClass>> direct;
    for (const Neighbor& nb : neighbors(rho(g.nodes[i]))) {
      direct.emplace(g.index_of(baxter_of(nb.rect)), nb.cls);
    }
    ASSERT_EQ(from_graph, direct) << g.nodes[i].str();
  }
}

TEST(TheoremTest, ValueSwapPairsOracle) {
  // Independent enumeration over all permutations.
  for (int n = 2; n <= 5; ++n) {
    std::set<PermPair> expected;
    for (const Permutation& p : oracle::permutations(n)) {
      if (!oracle::is_baxter(p)) continue;
      for (int k = 1; k < n; ++k) {
        Permutation q = consecutive_value_swap(p, k);
        if (oracle::is_baxter(q)) expected.insert(make_pair_unordered(p, q));
      }
    }
    EXPECT_EQ(value_swap_pairs(n), expected);
  }
  EXPECT_EQ(value_swap_pairs(2), (std::set<PermPair>{{P("12"), P("21")}}));
}

TEST(TheoremTest, MainTheorem) {
  for (int n = 1; n <= 6; ++n) {
    const Report r = verify_theorem_main(n);
    EXPECT_TRUE(r.ok()) << r.str();
  }
}

TEST(TheoremTest, LawReadingTheorem) {
  for (int n = 1; n <= 6; ++n) {
    const Report r = verify_theorem_lr(n);
    EXPECT_TRUE(r.ok()) << r.str();
  }
  EXPECT_EQ(law_reading_pairs(build(2)), (std::set<PermPair>{{P("12"), P("21")}}));
}

TEST(TheoremTest, LawReadingReportCatchesACorruptedEdge) {
  FlipGraph g = build(4);
  for (GraphEdge& e : g.edges) {
    if (e.cls.kind == FlipKind::kRotationLR) {
      e.cls.kind = FlipKind::kRotationBarcelona;
      break;
    }
  }
  const Report r = verify_theorem_lr(g, drec_covers(4));
  EXPECT_FALSE(r.ok());
  ASSERT_EQ(r.failures.size(), 1u);
  EXPECT_NE(r.failures[0].find("in cover only"), std::string::npos);
  EXPECT_NE(r.str().find("FAILED (1 counterexamples)"), std::string::npos);
}

TEST(TheoremTest, Characterization) {
  for (int n = 1; n <= 6; ++n) {
    const Report r = verify_characterization(n);
    EXPECT_TRUE(r.ok()) << r.str();
  }
}

TEST(TheoremTest, InversionOfBarcelonaFlips) {
  for (int n = 1; n <= 6; ++n) {
    const Report r = verify_inversion(n);
    EXPECT_TRUE(r.ok()) << r.str();
  }
}

TEST(MetricsTest, SmallGraphs) {
  const Metrics two = metrics(build(2));
  EXPECT_EQ(two.diameter, 1);
  EXPECT_TRUE(two.connected);
  for (int n = 1; n <= 6; ++n) {
    const Metrics m = metrics(build(n));
    EXPECT_TRUE(m.connected) << n;
    EXPECT_LE(m.diameter, 8 * n);
    EXPECT_LE(m.min_degree, m.max_degree);
  }
  const Metrics three = metrics(build(3));
  EXPECT_EQ(three.edges, 8);
  EXPECT_DOUBLE_EQ(three.mean_degree, 16.0 / 6);
}

TEST(MetricsTest, DisconnectedGraph) {
  FlipGraph g = build(3);
  g.edges.clear();
  const Metrics m = metrics(g);
  EXPECT_FALSE(m.connected);
  EXPECT_EQ(m.diameter, -1);
  EXPECT_EQ(simple_flip_components(g), 6);
}

TEST(SimpleComponentsTest, CountsTrailTheSClassByOne) {
  // Observed: the component count at n is the s_class count at n-1.
  const int expected[] = {0, 1, 1, 2, 6, 22, 88};
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(simple_flip_components(n), expected[n]) << n;
    EXPECT_EQ(simple_flip_components(n),
              static_cast<int>(enumerate_avoiders(n - 1, PatternClass::kS).size()))
        << n;
  }
}

}  // namespace
}  // namespace rectflip
