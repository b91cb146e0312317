#include "gridknot/grid.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "gridknot/alexander.hpp"
#include "gridknot/enumerate.hpp"

using namespace gridknot;

namespace {

const std::vector<int> kM211X = {5, 4, 3, 2, 11, 1, 10, 9, 8, 6, 7};

GridDiagram m211() { return diagonal_from_x(11, kM211X); }
GridDiagram unknot2() { return diagonal_from_x(2, {1, 2}); }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected a gridknot::Error";
  return ErrorCode::InvalidParams;
}

std::vector<GridDiagram> all_diagonal(int n) {
  std::vector<GridDiagram> out;
  enumerate_diagonal(n, [&](EnumerationRecord&& rec) {
    out.push_back(diagonal_from_x(rec.n, rec.sigma_x));
  });
  return out;
}

}  // namespace

TEST(Validate, AcceptsM211) {
  std::vector<int> antidiag = {11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1};
  const GridDiagram g = validate(11, kM211X, antidiag);
  EXPECT_EQ(g.size(), 11);
  EXPECT_TRUE(g.is_diagonal());
}

TEST(Validate, RejectsSharedCell) {
  EXPECT_EQ(code_of([] { validate(2, {2, 1}, {2, 1}); }), ErrorCode::MarkingCollision);
}

TEST(Validate, RejectsRepeatedValue) {
  EXPECT_EQ(code_of([] { validate(3, {1, 1, 2}, {3, 2, 1}); }), ErrorCode::NotAPermutation);
}

TEST(Validate, RejectsTinyGrid) {
  EXPECT_EQ(code_of([] { validate(1, {1}, {1}); }), ErrorCode::InvalidSize);
}

TEST(DiagonalFromX, ForcesAntidiagonalOs) {
  const GridDiagram g = diagonal_from_x(2, {1, 2});
  EXPECT_EQ(g.sigma_o(), (std::vector<int>{2, 1}));
}

TEST(DiagonalFromX, BuildsM211) {
  const GridDiagram g = m211();
  EXPECT_TRUE(g.is_diagonal());
  EXPECT_TRUE(is_single_component(g));
}

TEST(DiagonalFromX, RejectsAntidiagonalCollision) {
  EXPECT_EQ(code_of([] { diagonal_from_x(3, {3, 1, 2}); }), ErrorCode::MarkingCollision);
}

TEST(SingleComponent, TwoByTwoKnot) {
  EXPECT_TRUE(is_single_component(validate(2, {1, 2}, {2, 1})));
}

TEST(SingleComponent, TwoComponentLink) {
  EXPECT_FALSE(is_single_component(validate(4, {1, 2, 3, 4}, {4, 3, 2, 1})));
}

TEST(SingleComponent, ThreeCycle) {
  EXPECT_TRUE(is_single_component(validate(3, {1, 3, 2}, {3, 2, 1})));
}

TEST(TorusGrid, TrefoilPresentation) {
  const GridDiagram g = torus_grid(2, 3);
  EXPECT_EQ(g.sigma_x(), (std::vector<int>{3, 2, 1, 5, 4}));
  EXPECT_TRUE(g.is_diagonal());
  EXPECT_TRUE(is_single_component(g));
}

TEST(TorusGrid, SmallestCaseIsUnknot) {
  const GridDiagram g = torus_grid(1, 1);
  EXPECT_EQ(g.size(), 2);
  EXPECT_EQ(g.sigma_x(), (std::vector<int>{1, 2}));
}

TEST(TorusGrid, RejectsNonCoprime) {
  EXPECT_EQ(code_of([] { torus_grid(2, 4); }), ErrorCode::NotCoprime);
}

TEST(TorusGrid, RejectsNonPositive) {
  EXPECT_EQ(code_of([] { torus_grid(0, 3); }), ErrorCode::InvalidParams);
}

TEST(TorusGrid, SingleComponentForCoprimePairs) {
  for (int p = 1; p <= 6; ++p)
    for (int q = 1; q <= 6; ++q) {
      if (std::gcd(p, q) != 1) continue;
      EXPECT_TRUE(is_single_component(torus_grid(p, q))) << p << "," << q;
    }
}

TEST(Crossings, TrefoilHasThreePositive) {
  const std::vector<Crossing> xs = crossings(torus_grid(2, 3));
  ASSERT_EQ(xs.size(), 3u);
  EXPECT_EQ(xs[0], (Crossing{2, 3, 1}));
  EXPECT_EQ(xs[1], (Crossing{3, 2, 1}));
  EXPECT_EQ(xs[2], (Crossing{4, 4, 1}));
}

TEST(Crossings, UnknotHasNone) {
  EXPECT_TRUE(crossings(unknot2()).empty());
}

TEST(Crossings, M211HasTwentyTwoPositive) {
  const std::vector<Crossing> xs = crossings(m211());
  EXPECT_EQ(xs.size(), 22u);
  for (const Crossing& c : xs) EXPECT_EQ(c.sign, 1);
}

TEST(Crossings, CountAndWrithe) {
  EXPECT_EQ(crossing_count(m211()), 22);
  EXPECT_EQ(crossing_count(torus_grid(2, 3)), 3);
  EXPECT_EQ(writhe(torus_grid(2, 3)), 3);
  EXPECT_EQ(crossing_count(unknot2()), 0);
  EXPECT_EQ(writhe(unknot2()), 0);
}

TEST(CyclicTranslate, ColumnRotation) {
  const GridDiagram g = cyclic_translate(unknot2(), 1, 0);
  EXPECT_EQ(g.sigma_x(), (std::vector<int>{2, 1}));
  EXPECT_EQ(g.sigma_o(), (std::vector<int>{1, 2}));
}

TEST(CyclicTranslate, FullRotationIsIdentity) {
  const GridDiagram g = m211();
  EXPECT_EQ(cyclic_translate(g, 11, 11), g);
}

TEST(CyclicTranslate, TrefoilByTwoColumns) {
  // Markings of column c move to column c+2 (mod 5); rows are untouched.
  const GridDiagram g = cyclic_translate(torus_grid(2, 3), 2, 0);
  EXPECT_EQ(g.sigma_x(), (std::vector<int>{5, 4, 3, 2, 1}));
  EXPECT_EQ(g.sigma_o(), (std::vector<int>{2, 1, 5, 4, 3}));
}

TEST(CyclicTranslate, PreservesTheKnot) {
  // The planar crossing set is NOT translation-invariant: moving the torus
  // seam can create or absorb kinks ([1,3,2] has 0 crossings, its (1,0)
  // translate has 1), and signs follow suit.  What translation does
  // preserve is the knot itself, so its invariants must not move.
  for (int n = 3; n <= 5; ++n) {
    for (const GridDiagram& g : all_diagonal(n)) {
      const LaurentPolynomial want = alexander_polynomial(g);
      for (int dx = 0; dx < n; ++dx)
        for (int dy = 0; dy < n; ++dy) {
          const GridDiagram t = cyclic_translate(g, dx, dy);
          ASSERT_TRUE(is_single_component(t));
          ASSERT_EQ(alexander_polynomial(t), want);
        }
    }
  }
}

TEST(CommuteColumns, NestedIntervalsSwap) {
  const GridDiagram g = validate(4, {1, 2, 4, 3}, {4, 3, 2, 1});
  const GridDiagram h = commute_columns(g, 1);
  EXPECT_EQ(h.sigma_x(), (std::vector<int>{2, 1, 4, 3}));
  EXPECT_EQ(h.sigma_o(), (std::vector<int>{3, 4, 2, 1}));
}

TEST(CommuteColumns, RejectsInterleaved) {
  EXPECT_EQ(code_of([] { commute_columns(torus_grid(2, 3), 1); }), ErrorCode::IllegalMove);
}

TEST(CommuteColumns, RejectsSharedEndpointRow) {
  const GridDiagram g = validate(3, {1, 3, 2}, {3, 2, 1});
  EXPECT_EQ(code_of([&] { commute_columns(g, 1); }), ErrorCode::IllegalMove);
}

TEST(CommuteColumns, RejectsBadIndex) {
  EXPECT_EQ(code_of([] { commute_columns(torus_grid(2, 3), 5); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([] { commute_columns(torus_grid(2, 3), 0); }), ErrorCode::IndexOutOfRange);
}

TEST(CommuteColumns, InvolutionWhereLegal) {
  for (int n = 3; n <= 6; ++n)
    for (const GridDiagram& g : all_diagonal(n))
      for (int i = 1; i < n; ++i) {
        if (!can_commute_columns(g, i)) continue;
        EXPECT_EQ(commute_columns(commute_columns(g, i), i), g);
      }
}

TEST(CommuteRows, MatchesTransposedColumnCommutation) {
  // Row commutation is column commutation on the transposed diagram.
  for (const GridDiagram& g : all_diagonal(5)) {
    const int n = g.size();
    std::vector<int> tx(n), to(n);
    for (int c = 1; c <= n; ++c) {
      tx[g.x_row(c) - 1] = c;
      to[g.o_row(c) - 1] = c;
    }
    const GridDiagram t = validate(n, tx, to);
    for (int j = 1; j < n; ++j) {
      ASSERT_EQ(can_commute_rows(g, j), can_commute_columns(t, j));
      if (!can_commute_rows(g, j)) continue;
      const GridDiagram viaRows = commute_rows(g, j);
      const GridDiagram viaCols = commute_columns(t, j);
      for (int c = 1; c <= n; ++c) {
        EXPECT_EQ(viaRows.x_row(c), viaCols.x_col(c));
        EXPECT_EQ(viaRows.o_row(c), viaCols.o_col(c));
      }
    }
  }
}

TEST(Stabilize, UnknotColumnOne) {
  const GridDiagram g = stabilize(unknot2(), 1);
  EXPECT_EQ(g.sigma_x(), (std::vector<int>{2, 1, 3}));
  EXPECT_EQ(g.sigma_o(), (std::vector<int>{1, 3, 2}));
}

TEST(Stabilize, ResultValidatesAtEveryColumn) {
  for (const GridDiagram& g : {torus_grid(2, 3), m211(), unknot2()}) {
    for (int c = 1; c <= g.size(); ++c) {
      const GridDiagram s = stabilize(g, c);
      EXPECT_EQ(s.size(), g.size() + 1);
      EXPECT_NO_THROW(validate(s.size(), s.sigma_x(), s.sigma_o()));
      EXPECT_EQ(is_single_component(s), is_single_component(g));
    }
  }
}

TEST(Stabilize, RejectsBadColumn) {
  EXPECT_EQ(code_of([] { stabilize(torus_grid(2, 3), 6); }), ErrorCode::IndexOutOfRange);
}

TEST(Destabilize, InvertsStabilizeExample) {
  const GridDiagram g = validate(3, {2, 1, 3}, {1, 3, 2});
  const auto d = destabilize(g);
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->diagram.sigma_x(), (std::vector<int>{1, 2}));
  EXPECT_EQ(d->diagram.sigma_o(), (std::vector<int>{2, 1}));
  EXPECT_EQ(d->i, 1);
  EXPECT_EQ(d->j, 1);
}

TEST(Destabilize, TrefoilHasNoBlock) {
  EXPECT_FALSE(destabilize(torus_grid(2, 3)).has_value());
}

TEST(Destabilize, RoundTripOnM211EveryColumn) {
  const GridDiagram g = m211();
  for (int c = 1; c <= g.size(); ++c) {
    const auto back = destabilize(stabilize(g, c));
    ASSERT_TRUE(back.has_value()) << "column " << c;
    EXPECT_EQ(back->diagram, g) << "column " << c;
  }
}

TEST(Destabilize, RoundTripOnStabilizedTrefoil) {
  const GridDiagram g = torus_grid(2, 3);
  const GridDiagram s = stabilize(g, 3);
  EXPECT_EQ(s.size(), 6);
  const auto back = destabilize(s);
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(back->diagram, g);
}

TEST(Destabilize, RoundTripAtCreatedBlock) {
  for (int n = 2; n <= 6; ++n)
    for (const GridDiagram& g : all_diagonal(n))
      for (int c = 1; c <= n; ++c) {
        const GridDiagram s = stabilize(g, c);
        const auto back = destabilize_at(s, c, g.x_row(c));
        ASSERT_TRUE(back.has_value());
        EXPECT_EQ(*back, g);
      }
}

TEST(Destabilize, PreservesSingleComponent) {
  for (int n = 4; n <= 6; ++n)
    for (const GridDiagram& g : all_diagonal(n)) {
      const auto d = destabilize(g);
      if (d) {
        EXPECT_TRUE(is_single_component(d->diagram));
      }
    }
}

TEST(GaussCode, UnknotIsEmpty) {
  EXPECT_TRUE(gauss_code(unknot2()).empty());
}

TEST(GaussCode, TrefoilVisitsEachCrossingTwice) {
  const std::vector<GaussEntry> code = gauss_code(torus_grid(2, 3));
  ASSERT_EQ(code.size(), 6u);
  std::map<int, int> over, under;
  for (const GaussEntry& e : code) {
    EXPECT_EQ(e.sign, 1);
    ++(e.over ? over : under)[e.id];
  }
  for (int id = 1; id <= 3; ++id) {
    EXPECT_EQ(over[id], 1);
    EXPECT_EQ(under[id], 1);
  }
}

TEST(GaussCode, M211HasFortyFourEntries) {
  const std::vector<GaussEntry> code = gauss_code(m211());
  EXPECT_EQ(code.size(), 44u);
  std::map<int, int> seen;
  for (const GaussEntry& e : code) ++seen[e.id];
  EXPECT_EQ(seen.size(), 22u);
}

TEST(GaussCode, RejectsLinks) {
  const GridDiagram link = validate(4, {1, 2, 3, 4}, {4, 3, 2, 1});
  EXPECT_EQ(code_of([&] { gauss_code(link); }), ErrorCode::NotAKnot);
}

TEST(Projection, QuarterTurnPreservesCrossingCount) {
  // Transpose then reflect columns = rotate the square; the crossing set
  // maps bijectively.
  auto quarter_turn = [](const GridDiagram& g) {
    const int n = g.size();
    std::vector<int> tx(n), to(n);
    for (int c = 1; c <= n; ++c) {
      tx[g.x_row(c) - 1] = c;
      to[g.o_row(c) - 1] = c;
    }
    std::reverse(tx.begin(), tx.end());
    std::reverse(to.begin(), to.end());
    return validate(n, tx, to);
  };
  for (int n = 3; n <= 6; ++n)
    for (const GridDiagram& g : all_diagonal(n))
      EXPECT_EQ(crossing_count(quarter_turn(g)), crossing_count(g));
  EXPECT_EQ(crossing_count(quarter_turn(m211())), 22);
}

TEST(Positivity, DiagonalDiagramsUpToSeven) {
  for (int n = 2; n <= 7; ++n)
    for (const GridDiagram& g : all_diagonal(n))
      for (const Crossing& c : crossings(g)) ASSERT_EQ(c.sign, 1);
}

TEST(Moves, PreserveSingleComponent) {
  for (int n = 3; n <= 5; ++n)
    for (const GridDiagram& g : all_diagonal(n)) {
      for (int dx = 0; dx < n; ++dx)
        for (int dy = 0; dy < n; ++dy)
          EXPECT_TRUE(is_single_component(cyclic_translate(g, dx, dy)));
      for (int i = 1; i < n; ++i) {
        if (can_commute_columns(g, i)) {
          EXPECT_TRUE(is_single_component(commute_columns(g, i)));
        }
        if (can_commute_rows(g, i)) {
          EXPECT_TRUE(is_single_component(commute_rows(g, i)));
        }
      }
      for (int c = 1; c <= n; ++c)
        EXPECT_TRUE(is_single_component(stabilize(g, c)));
    }
}

TEST(PermutationText, RoundTrip) {
  EXPECT_EQ(permutation_string(kM211X), "5,4,3,2,11,1,10,9,8,6,7");
  EXPECT_EQ(parse_permutation("5,4,3,2,11,1,10,9,8,6,7"), kM211X);
  EXPECT_EQ(code_of([] { parse_permutation("1,,2"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_permutation("1, 2"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_permutation("01,2"); }), ErrorCode::ParseError);
}
