#include "gridknot/simplify.hpp"

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "gridknot/alexander.hpp"
#include "gridknot/enumerate.hpp"

using namespace gridknot;

namespace {

GridDiagram m211() { return diagonal_from_x(11, {5, 4, 3, 2, 11, 1, 10, 9, 8, 6, 7}); }
GridDiagram unknot2() { return diagonal_from_x(2, {1, 2}); }

}  // namespace

TEST(MoveLog, FormatRoundTrip) {
  const std::vector<Move> log = {
      {Move::Kind::ColumnCommute, 1, 0}, {Move::Kind::RowCommute, 2, 0},
      {Move::Kind::Translate, 1, 0},     {Move::Kind::Destabilize, 1, 1},
      {Move::Kind::Stabilize, 3, 0},
  };
  const std::string text = move_log_string(log);
  EXPECT_EQ(text, "C 1\nR 2\nT 1 0\nD 1 1\nS 3\n");
  EXPECT_EQ(parse_move_log(text), log);
}

TEST(MoveLog, ParseRejectsGarbage) {
  EXPECT_THROW(parse_move("X 1"), Error);
  EXPECT_THROW(parse_move("C"), Error);
  EXPECT_THROW(parse_move("T 1"), Error);
  EXPECT_THROW(parse_move("C 1 2"), Error);
}

TEST(ApplyMove, MatchesDirectOperations) {
  const GridDiagram g = torus_grid(2, 3);
  EXPECT_EQ(apply_move(g, {Move::Kind::Translate, 2, 0}), cyclic_translate(g, 2, 0));
  EXPECT_EQ(apply_move(g, {Move::Kind::Stabilize, 3, 0}), stabilize(g, 3));
  const GridDiagram st = stabilize(g, 3);
  EXPECT_EQ(apply_move(st, {Move::Kind::Destabilize, 3, g.x_row(3)}),
            *destabilize_at(st, 3, g.x_row(3)));
  EXPECT_THROW(apply_move(g, {Move::Kind::Destabilize, 1, 1}), Error);
}

TEST(SimplifyGrid, StabilizedUnknotDropsInOneMove) {
  const GridDiagram g = validate(3, {2, 1, 3}, {1, 3, 2});
  const SimplifyResult res = simplify_grid(g);
  EXPECT_EQ(res.diagram.size(), 2);
  ASSERT_EQ(res.log.size(), 1u);
  EXPECT_EQ(res.log[0], (Move{Move::Kind::Destabilize, 1, 1}));
}

TEST(SimplifyGrid, TrefoilIsAlreadyMinimal) {
  const SimplifyResult res = simplify_grid(torus_grid(2, 3));
  EXPECT_EQ(res.diagram, torus_grid(2, 3));
  EXPECT_TRUE(res.log.empty());
}

TEST(SimplifyGrid, UnknotUnchanged) {
  const SimplifyResult res = simplify_grid(unknot2());
  EXPECT_EQ(res.diagram, unknot2());
  EXPECT_TRUE(res.log.empty());
}

TEST(SimplifyGrid, RecoversSizeAfterStabilization) {
  for (const GridDiagram& g : {unknot2(), torus_grid(2, 3)})
    for (int c = 1; c <= g.size(); ++c) {
      const SimplifyResult res = simplify_grid(stabilize(g, c));
      EXPECT_EQ(res.diagram.size(), g.size());
    }
}

TEST(SimplifyGrid, ReplayReproducesOutput) {
  std::mt19937 rng(99);
  for (const GridDiagram& seed : {torus_grid(2, 3), torus_grid(2, 5), m211()}) {
    // Blow the diagram up with random stabilizations, then simplify.
    GridDiagram g = seed;
    std::uniform_int_distribution<int> extra(2, 4);
    const int grow = extra(rng);
    for (int k = 0; k < grow; ++k) {
      std::uniform_int_distribution<int> col(1, g.size());
      g = stabilize(g, col(rng));
    }
    const SimplifyResult res = simplify_grid(g);
    EXPECT_LE(res.diagram.size(), g.size());
    EXPECT_EQ(replay(g, res.log), res.diagram);
  }
}

TEST(SimplifyGrid, TrajectoryPreservesAlexander) {
  std::mt19937 rng(1234);
  GridDiagram g = torus_grid(3, 4);
  std::uniform_int_distribution<int> col(1, 7);
  g = stabilize(g, col(rng));
  g = stabilize(g, col(rng));
  const LaurentPolynomial want = alexander_polynomial(g);
  const SimplifyResult res = simplify_grid(g);
  GridDiagram cur = g;
  int step = 0;
  for (const Move& m : res.log) {
    cur = apply_move(cur, m);
    if (++step % 10 == 0) {
      ASSERT_EQ(alexander_polynomial(cur), want);
    }
  }
  EXPECT_EQ(alexander_polynomial(res.diagram), want);
  EXPECT_EQ(res.diagram.size(), 7);
}

TEST(SimplifyGrid, NeverGrowsOnDiagonalCorpus) {
  for (int n = 3; n <= 5; ++n)
    enumerate_diagonal(n, [](EnumerationRecord&& rec) {
      const GridDiagram g = diagonal_from_x(rec.n, rec.sigma_x);
      const SimplifyResult res = simplify_grid(g, 3, 100);
      EXPECT_LE(res.diagram.size(), g.size());
      EXPECT_EQ(replay(g, res.log), res.diagram);
    });
}

TEST(ReduceCrossings, M211ReachesTwentyOne) {
  const ReduceResult res = reduce_crossings(m211(), 3);
  EXPECT_EQ(res.best_count, 21);
  EXPECT_EQ(crossing_count(res.diagram), 21);
}

TEST(ReduceCrossings, TrefoilStaysAtThree) {
  for (int depth : {1, 2}) {
    const ReduceResult res = reduce_crossings(torus_grid(2, 3), depth);
    EXPECT_EQ(res.best_count, 3);
  }
}

TEST(ReduceCrossings, UnknotIsZero) {
  EXPECT_EQ(reduce_crossings(unknot2(), 2).best_count, 0);
}

TEST(ReduceCrossings, NeverWorseThanInput) {
  for (int n = 3; n <= 5; ++n)
    enumerate_diagonal(n, [](EnumerationRecord&& rec) {
      const GridDiagram g = diagonal_from_x(rec.n, rec.sigma_x);
      EXPECT_LE(reduce_crossings(g, 2).best_count, crossing_count(g));
    });
}

TEST(ReduceCrossings, DeterministicTieBreak) {
  const ReduceResult a = reduce_crossings(m211(), 2);
  const ReduceResult b = reduce_crossings(m211(), 2);
  EXPECT_EQ(a.diagram, b.diagram);
  EXPECT_EQ(a.best_count, b.best_count);
}

TEST(ReduceCrossings, RejectsBadDepth) {
  EXPECT_THROW(reduce_crossings(unknot2(), 0), Error);
}
