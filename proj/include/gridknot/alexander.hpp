#pragma once

// Alexander polynomial of a grid-diagram knot via the winding-number
// ("minesweeper") matrix: det(t^-w) = +-t^k * Delta(t) * (1-t)^(n-1).
// The determinant is computed exactly by fraction-free (Bareiss)
// elimination over Z[t] after clearing each row's t-denominators.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "gridknot/errors.hpp"
#include "gridknot/grid.hpp"
#include "gridknot/laurent.hpp"

namespace gridknot {

// Winding numbers of the projected knot about the lattice points (a,b),
// a,b in 0..n-1.  Boundary points (a=0 or b=0) always carry 0.
struct WindingGrid {
  int n = 0;
  std::vector<std::vector<int>> w;  // w[a][b]
};

inline WindingGrid winding_numbers(const GridDiagram& g) {
  if (!is_single_component(g)) fail(ErrorCode::NotAKnot, "diagram has multiple components");
  const int n = g.size();
  WindingGrid wg{n, std::vector<std::vector<int>>(n, std::vector<int>(n, 0))};
  // A vertical segment in column i sits at x = i - 1/2 and runs X->O;
  // downward segments count +1 at lattice points to their right.
  for (int i = 1; i <= n; ++i) {
    const int xr = g.x_row(i), orow = g.o_row(i);
    const int lo = std::min(xr, orow), hi = std::max(xr, orow);
    const int contribution = orow < xr ? 1 : -1;
    for (int a = i; a < n; ++a)
      for (int b = lo; b < hi; ++b) wg.w[a][b] += contribution;
  }
  return wg;
}

// Exact determinant of the n x n matrix M[b][a] = t^(-w[a][b]), returned
// un-normalized (a Laurent polynomial, possibly with negative exponents).
inline LaurentPolynomial minesweeper_det(const WindingGrid& wg) {
  const int n = wg.n;
  std::vector<std::vector<LaurentPolynomial>> m(n, std::vector<LaurentPolynomial>(n));
  int shift = 0;
  for (int b = 0; b < n; ++b) {
    int row_min = -wg.w[0][b];
    for (int a = 1; a < n; ++a) row_min = std::min(row_min, -wg.w[a][b]);
    for (int a = 0; a < n; ++a)
      m[b][a] = LaurentPolynomial::monomial(-wg.w[a][b] - row_min, 1);
    shift += row_min;  // det(M) = t^shift * det(cleared matrix)
  }

  // Bareiss: every 2x2-minor update divides exactly by the previous pivot.
  int sign = 1;
  LaurentPolynomial prev(1);
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      int swap_row = -1;
      for (int l = k + 1; l < n; ++l)
        if (!m[l][k].is_zero()) { swap_row = l; break; }
      if (swap_row < 0) return {};  // zero column, singular
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).divided_exact(prev);
      m[i][k] = LaurentPolynomial();
    }
    prev = m[k][k];
  }
  LaurentPolynomial det = m[n - 1][n - 1].shifted(shift);
  return sign < 0 ? -det : det;
}

// Canonical Alexander polynomial: divide the minesweeper determinant by
// (1-t)^(n-1), then normalize to minimum exponent 0 and value +1 at t=1.
inline LaurentPolynomial alexander_polynomial(const GridDiagram& g) {
  const LaurentPolynomial det = minesweeper_det(winding_numbers(g));
  if (det.is_zero()) fail(ErrorCode::ZeroDeterminant, "minesweeper determinant vanished");
  LaurentPolynomial one_minus_t = LaurentPolynomial(1) - LaurentPolynomial::monomial(1, 1);
  LaurentPolynomial p = det;
  for (int k = 1; k < g.size(); ++k) p = p.divided_exact(one_minus_t);
  return p.canonicalized();
}

// Delta of a connect sum is the product of the summands' Deltas.
inline LaurentPolynomial poly_product(const std::vector<LaurentPolynomial>& ps) {
  LaurentPolynomial out(1);
  for (const LaurentPolynomial& p : ps) out = out * p;
  return out.canonicalized();
}

}  // namespace gridknot
