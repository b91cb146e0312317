// Walks the torus knots that fit on grids up to size 11 and prints their
// tau invariant and Alexander polynomial, plus the same data for the
// size-11 diagonal diagram of the census knot m211.

#include <cstdio>
#include <numeric>

#include "gridknot/gridknot.hpp"

int main() {
  using namespace gridknot;

  std::printf("%-8s %-4s %-4s %s\n", "knot", "n", "tau", "alexander");
  for (int p = 2; p <= 5; ++p) {
    for (int q = p + 1; p + q <= 11; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const GridDiagram g = torus_grid(p, q);
      std::printf("T(%d,%d)   %-4d %-4lld %s\n", p, q, g.size(), tau_diagonal(g),
                  alexander_polynomial(g).coeff_string().c_str());
    }
  }

  const GridDiagram m211 = diagonal_from_x(11, {5, 4, 3, 2, 11, 1, 10, 9, 8, 6, 7});
  std::printf("m211     %-4d %-4lld %s\n", m211.size(), tau_diagonal(m211),
              alexander_polynomial(m211).coeff_string().c_str());
  std::printf("m211 crossings: %d, writhe %d\n", crossing_count(m211), writhe(m211));
  return 0;
}
