#pragma once

// The tau invariant for diagonal grid diagrams via the bilinear J pairing.
//
// J({a}, B) counts points of B strictly to the top right or bottom left of a,
// halved; it extends bilinearly to weighted point configurations.  For a
// diagonal diagram of size n,
//
//   tau = J(x - (X+O)/2, X - O) - (n-1)/2
//
// where X and O are the marking-center configurations and x is the set of
// lattice points between consecutive O-centers plus the grid's bottom left
// corner.  All arithmetic is exact: coordinates and weights are stored
// doubled so half-integers never leave the integers.

#include <boost/rational.hpp>

#include <utility>
#include <vector>

#include "gridknot/errors.hpp"
#include "gridknot/grid.hpp"

namespace gridknot {

using Rational = boost::rational<long long>;

// The planar point (x2/2, y2/2).  Marking centers have odd coordinates
// (cell (i,j) doubles to (2i-1, 2j-1)); generator points have even ones.
struct HalfPoint {
  int x2 = 0, y2 = 0;

  bool operator==(const HalfPoint& o) const { return x2 == o.x2 && y2 == o.y2; }
};

// Formal rational-weighted sum of points.  Weights are stored doubled, so
// +-1 and +-1/2 are exact; merged terms that cancel are dropped.
class WeightedPointConfig {
 public:
  void add(HalfPoint p, int weight2) {
    for (size_t k = 0; k < terms_.size(); ++k) {
      if (terms_[k].first == p) {
        terms_[k].second += weight2;
        if (terms_[k].second == 0) terms_.erase(terms_.begin() + k);
        return;
      }
    }
    if (weight2 != 0) terms_.push_back({p, weight2});
  }

  const std::vector<std::pair<HalfPoint, int>>& terms() const { return terms_; }

 private:
  std::vector<std::pair<HalfPoint, int>> terms_;
};

// Symmetric bilinear pairing: half the weighted count of strictly-NE or
// strictly-SW pairs.
inline Rational pair_count_J(const WeightedPointConfig& a, const WeightedPointConfig& b) {
  long long sum = 0;  // in units of 1/8: two doubled weights and the half
  for (const auto& [pa, wa] : a.terms()) {
    for (const auto& [pb, wb] : b.terms()) {
      const bool ne = pb.x2 > pa.x2 && pb.y2 > pa.y2;
      const bool sw = pb.x2 < pa.x2 && pb.y2 < pa.y2;
      if (ne || sw) sum += static_cast<long long>(wa) * wb;
    }
  }
  return Rational(sum, 8);
}

// Generator configuration for a size-n diagonal diagram: the bottom left
// corner (0,0) plus the points (i, n-i) between consecutive O-centers.
inline WeightedPointConfig tau_generator(int n) {
  if (n < 2) fail(ErrorCode::InvalidSize, "grid size must be at least 2");
  WeightedPointConfig cfg;
  cfg.add(HalfPoint{0, 0}, 2);
  for (int i = 1; i < n; ++i) cfg.add(HalfPoint{2 * i, 2 * (n - i)}, 2);
  return cfg;
}

inline long long tau_diagonal(const GridDiagram& g) {
  if (!g.is_diagonal()) fail(ErrorCode::NotDiagonal, "O-markings are not antidiagonal");
  if (!is_single_component(g)) fail(ErrorCode::NotAKnot, "diagram has multiple components");
  const int n = g.size();

  WeightedPointConfig lhs = tau_generator(n);  // x - (X + O)/2
  WeightedPointConfig rhs;                     // X - O
  for (int c = 1; c <= n; ++c) {
    const HalfPoint x{2 * c - 1, 2 * g.x_row(c) - 1};
    const HalfPoint o{2 * c - 1, 2 * g.o_row(c) - 1};
    lhs.add(x, -1);
    lhs.add(o, -1);
    rhs.add(x, 2);
    rhs.add(o, -2);
  }

  const Rational tau = pair_count_J(lhs, rhs) - Rational(n - 1, 2);
  if (tau.denominator() != 1)
    fail(ErrorCode::NonIntegerResult,
         "J pairing gave " + std::to_string(tau.numerator()) + "/" +
             std::to_string(tau.denominator()) + " after the (n-1)/2 shift");
  return tau.numerator();
}

}  // namespace gridknot
