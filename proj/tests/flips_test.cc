#include "rectflip/flips.h"

#include <gtest/gtest.h>

#include "oracles.h"
#include "rectflip/bijection.h"

namespace rectflip {
namespace {

// Every diagonal rectangulation with n rectangles.
std::vector<Rectangulation> all_rectangulations(int n) {
  std::vector<Rectangulation> out;
  for (const auto& [r, members] : oracle::fibers_by_rho(n)) out.push_back(r);
  return out;
}

VertexKind kind_at(const Rectangulation& r, int x, int y) {
  return vertex_kind_at(r.grid(), Point{x, y});
}

TEST(FlipClassTest, Names) {
  EXPECT_EQ((FlipClass{FlipKind::kSimple, 0}).name(), "simple");
  EXPECT_EQ((FlipClass{FlipKind::kRotationLR, 0}).name(), "rotation-lr");
  EXPECT_EQ((FlipClass{FlipKind::kRotationBarcelona, 0}).name(), "rotation-barcelona");
  EXPECT_EQ((FlipClass{FlipKind::kUnflippableBothMatched, 0}).name(), "unflippable-both");
  EXPECT_EQ((FlipClass{FlipKind::kUnflippableOneMatched, 3}).name(), "unflippable-one-3");
}

TEST(FlipTest, TwoRectangles) {
  const Rectangulation vertical = rho(Permutation::parse("12"));
  const EdgeId cut{1, 2, Orientation::kVertical};
  EXPECT_EQ(classify_edge(vertical, cut).kind, FlipKind::kSimple);
  const FlipResult res = flip(vertical, cut);
  EXPECT_EQ(res.rect, rho(Permutation::parse("21")));
  EXPECT_EQ(res.edge, (EdgeId{1, 2, Orientation::kHorizontal}));
  EXPECT_EQ(neighbors(vertical).size(), 1u);
}

TEST(FlipTest, RejectsUnknownEdges) {
  const Rectangulation r = rho(Permutation::parse("12"));
  EXPECT_THROW(classify_edge(r, EdgeId{1, 2, Orientation::kHorizontal}),
               std::invalid_argument);
  EXPECT_THROW(flip(r, EdgeId{1, 3, Orientation::kVertical}), std::invalid_argument);
}

TEST(FlipTest, UnflippableEdgeThrows) {
  bool found = false;
  for (const Rectangulation& r : all_rectangulations(4)) {
    for (const EdgeReport& rep : classify_all(r)) {
      if (rep.cls.flippable()) continue;
      found = true;
      try {
        flip(r, rep.edge.id);
        ADD_FAILURE() << "flip succeeded on " << rep.edge.id.str();
      } catch (const EdgeUnflippable& e) {
        EXPECT_EQ(e.flip_class(), rep.cls);
      }
    }
  }
  EXPECT_TRUE(found);
}

TEST(FlipTest, WorkedExampleEdgesAllClassified) {
  const Rectangulation r = rho(Permutation::parse("4165372"));
  const auto reports = classify_all(r);
  EXPECT_EQ(reports.size(), geometry(r.grid()).edges.size());
  for (const EdgeReport& rep : reports) {
    EXPECT_EQ(rep.result.has_value(), rep.cls.flippable()) << rep.edge.id.str();
  }
}

TEST(FlipTaxonomyTest, ClassesFollowEndpointMatching) {
  for (int n = 2; n <= 6; ++n) {
    for (const Rectangulation& r : all_rectangulations(n)) {
      for (const EdgeReport& rep : classify_all(r)) {
        const EdgeInfo& e = rep.edge;
        const bool is_rect = oracle::union_is_rectangle(r.grid(), e.first, e.second);
        SCOPED_TRACE(r.str() + e.id.str());
        ASSERT_EQ(rep.cls.kind == FlipKind::kSimple, e.matched_none());
        ASSERT_EQ(e.matched_none(), is_rect);
        if (e.matched_none()) ASSERT_TRUE(e.crosses_diagonal);
        if (e.matched_both()) {
          ASSERT_EQ(rep.cls.kind, FlipKind::kUnflippableBothMatched);
        }
        if (rep.cls.kind == FlipKind::kRotationLR) ASSERT_FALSE(e.crosses_diagonal);
        if (rep.cls.kind == FlipKind::kRotationBarcelona) ASSERT_TRUE(e.crosses_diagonal);
      }
    }
  }
}

TEST(FlipTaxonomyTest, OneMatchedUnflippableEdgesCrossTheDiagonal) {
  int per_subtype[5] = {0, 0, 0, 0, 0};
  for (int n = 2; n <= 6; ++n) {
    for (const Rectangulation& r : all_rectangulations(n)) {
      for (const EdgeReport& rep : classify_all(r)) {
        if (rep.cls.kind != FlipKind::kUnflippableOneMatched) continue;
        const EdgeInfo& e = rep.edge;
        ASSERT_TRUE(e.crosses_diagonal) << r.str() << e.id.str();
        ASSERT_NE(e.matched_start, e.matched_end);
        const int expected = (e.orientation() == Orientation::kHorizontal ? 1 : 3) +
                             (e.matched_start ? 0 : 1);
        ASSERT_EQ(rep.cls.subtype, expected);
        ++per_subtype[rep.cls.subtype];
      }
    }
  }
  for (int s = 1; s <= 4; ++s) EXPECT_GT(per_subtype[s], 0) << s;
}

TEST(FlipTaxonomyTest, BarcelonaMatchesValueSwapOracle) {
  for (int n = 2; n <= 6; ++n) {
    for (const Rectangulation& r : all_rectangulations(n)) {
      const Permutation b = baxter_of(r);
      for (const EdgeReport& rep : classify_all(r)) {
        const EdgeId& id = rep.edge.id;
        const bool consecutive = id.hi == id.lo + 1;
        ASSERT_EQ(consecutive, rep.edge.crosses_diagonal);
        const bool swap_is_baxter =
            consecutive && oracle::is_baxter(consecutive_value_swap(b, id.lo));
        ASSERT_EQ(rep.cls.barcelona(), swap_is_baxter) << r.str() << id.str();
        if (rep.cls.barcelona()) {
          ASSERT_EQ(baxter_of(rep.result->rect), consecutive_value_swap(b, id.lo));
        }
      }
    }
  }
}

TEST(FlipTaxonomyTest, FlipIsAnInvolution) {
  for (int n = 2; n <= 6; ++n) {
    for (const Rectangulation& r : all_rectangulations(n)) {
      for (const Neighbor& nb : neighbors(r)) {
        SCOPED_TRACE(r.str() + nb.edge.str());
        const FlipResult back = flip(nb.rect, nb.new_edge);
        ASSERT_EQ(back.rect, r);
        ASSERT_EQ(back.edge, nb.edge);
        ASSERT_EQ(classify_edge(nb.rect, nb.new_edge), nb.cls);
        ASSERT_TRUE(oracle::every_rectangle_on_diagonal(nb.rect.grid()));
      }
    }
  }
}

TEST(FlipTaxonomyTest, LawReadingLockingRule) {
  for (int n = 2; n <= 6; ++n) {
    for (const Rectangulation& r : all_rectangulations(n)) {
      std::set<EdgeId> by_class;
      for (const EdgeReport& rep : classify_all(r)) {
        if (rep.cls.law_reading()) by_class.insert(rep.edge.id);
      }
      ASSERT_EQ(law_reading_edges(r), by_class) << r.str();
    }
  }
}

TEST(FlipTaxonomyTest, BarcelonaRotationCornerKinds) {
  int seen = 0;
  for (int n = 2; n <= 6; ++n) {
    for (const Rectangulation& r : all_rectangulations(n)) {
      for (const EdgeReport& rep : classify_all(r)) {
        if (rep.cls.kind != FlipKind::kRotationBarcelona) continue;
        ++seen;
        const EdgeInfo& e = rep.edge;
        const CellRect a = r.rect(e.first);   // above / left
        const CellRect b = r.rect(e.second);  // below / right
        const bool horizontal = e.orientation() == Orientation::kHorizontal;
        // The rectangle carrying the T pointing into the edge.
        const CellRect& lead = horizontal ? a : b;
        const CellRect& other = horizontal ? b : a;
        SCOPED_TRACE(r.str() + e.id.str());
        if (e.matched_start) {
          ASSERT_EQ(kind_at(r, lead.x0, lead.y0), VertexKind::kTeeDown);
          ASSERT_EQ(kind_at(r, other.x0, other.y0), VertexKind::kTeeRight);
        } else {
          ASSERT_EQ(kind_at(r, lead.x1, lead.y1), VertexKind::kTeeLeft);
          ASSERT_EQ(kind_at(r, other.x1, other.y1), VertexKind::kTeeUp);
        }
      }
    }
  }
  EXPECT_GT(seen, 0);
}

TEST(NeighborsTest, SymmetricAndOrdered) {
  for (int n = 2; n <= 5; ++n) {
    for (const Rectangulation& r : all_rectangulations(n)) {
      const auto nbs = neighbors(r);
      for (size_t i = 1; i < nbs.size(); ++i) ASSERT_LT(nbs[i - 1].edge, nbs[i].edge);
      for (const Neighbor& nb : nbs) {
        const auto back = neighbors(nb.rect);
        ASSERT_TRUE(std::any_of(back.begin(), back.end(),
                                [&](const Neighbor& x) { return x.rect == r; }));
      }
    }
  }
}

}  // namespace
}  // namespace rectflip
