#pragma once

// Grid diagrams for knots: validation, torus-knot presentations, the knot
// projection (crossings with signs) and the elementary grid moves.
//
// Conventions: an n x n grid has columns 1..n numbered left to right and
// rows 1..n numbered bottom to top.  Every row and column holds exactly one
// X-marking and one O-marking.  The knot is recovered by connecting X to O
// vertically in each column and O to X horizontally in each row; at every
// crossing the vertical strand passes over the horizontal one.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gridknot/errors.hpp"

namespace gridknot {

namespace detail {
struct Unchecked {};  // tag for constructions whose validity is structural
}  // namespace detail

// Immutable once constructed; all move operations return new diagrams.
class GridDiagram {
 public:
  GridDiagram(detail::Unchecked, std::vector<int> sigma_x, std::vector<int> sigma_o)
      : sigma_x_(std::move(sigma_x)), sigma_o_(std::move(sigma_o)) {
    build_inverses();
  }

  int size() const { return static_cast<int>(sigma_x_.size()); }

  // Row of the X (resp. O) in column `col`; columns and rows are 1-based.
  int x_row(int col) const { return sigma_x_[col - 1]; }
  int o_row(int col) const { return sigma_o_[col - 1]; }
  // Column of the X (resp. O) in row `row`.
  int x_col(int row) const { return inv_x_[row - 1]; }
  int o_col(int row) const { return inv_o_[row - 1]; }

  const std::vector<int>& sigma_x() const { return sigma_x_; }
  const std::vector<int>& sigma_o() const { return sigma_o_; }

  // O's on the antidiagonal from top left to bottom right.
  bool is_diagonal() const {
    const int n = size();
    for (int c = 1; c <= n; ++c)
      if (o_row(c) != n + 1 - c) return false;
    return true;
  }

  bool operator==(const GridDiagram& other) const {
    return sigma_x_ == other.sigma_x_ && sigma_o_ == other.sigma_o_;
  }
  bool operator!=(const GridDiagram& other) const { return !(*this == other); }

 private:
  void build_inverses() {
    const int n = size();
    inv_x_.assign(n, 0);
    inv_o_.assign(n, 0);
    for (int c = 1; c <= n; ++c) {
      inv_x_[sigma_x_[c - 1] - 1] = c;
      inv_o_[sigma_o_[c - 1] - 1] = c;
    }
  }

  std::vector<int> sigma_x_, sigma_o_;  // row of marking per column
  std::vector<int> inv_x_, inv_o_;      // column of marking per row
};

// A vertical-over-horizontal intersection of the projection.
struct Crossing {
  int column = 0;  // column of the vertical (over) strand
  int row = 0;     // row of the horizontal (under) strand
  int sign = 0;    // +1 or -1 by the right-hand rule

  bool operator==(const Crossing& o) const {
    return column == o.column && row == o.row && sign == o.sign;
  }
};

namespace detail {

inline void check_permutation(int n, const std::vector<int>& v, const char* which) {
  if (static_cast<int>(v.size()) != n)
    fail(ErrorCode::NotAPermutation,
         std::string(which) + " has length " + std::to_string(v.size()) +
             ", expected " + std::to_string(n));
  std::vector<char> seen(n, 0);
  for (int value : v) {
    if (value < 1 || value > n || seen[value - 1])
      fail(ErrorCode::NotAPermutation,
           std::string(which) + " is not a permutation of 1.." + std::to_string(n));
    seen[value - 1] = 1;
  }
}

}  // namespace detail

inline GridDiagram validate(int n, const std::vector<int>& sigma_x,
                            const std::vector<int>& sigma_o) {
  if (n < 2) fail(ErrorCode::InvalidSize, "grid size must be at least 2");
  detail::check_permutation(n, sigma_x, "sigma_x");
  detail::check_permutation(n, sigma_o, "sigma_o");
  for (int c = 1; c <= n; ++c) {
    if (sigma_x[c - 1] == sigma_o[c - 1])
      fail(ErrorCode::MarkingCollision,
           "column " + std::to_string(c) + " holds both markings in row " +
               std::to_string(sigma_x[c - 1]));
  }
  return GridDiagram(detail::Unchecked{}, sigma_x, sigma_o);
}

// Diagram with the O's forced onto the antidiagonal (sigma_o[i] = n+1-i).
inline GridDiagram diagonal_from_x(int n, const std::vector<int>& sigma_x) {
  std::vector<int> sigma_o(std::max(n, 0));
  for (int c = 1; c <= n; ++c) sigma_o[c - 1] = n + 1 - c;
  return validate(n, sigma_x, sigma_o);
}

// True iff the diagram closes up into a single component, i.e. the column
// permutation p(i) = sigma_o^-1(sigma_x(i)) is one n-cycle.
inline bool is_single_component(const GridDiagram& g) {
  const int n = g.size();
  int col = 1, steps = 0;
  do {
    col = g.o_col(g.x_row(col));
    ++steps;
  } while (col != 1 && steps <= n);
  return steps == n;
}

// Diagonal presentation of the (p,q) torus knot on a grid of size p+q:
// p X's on the parallel diagonal above the O's and q below.
inline GridDiagram torus_grid(int p, int q) {
  if (p < 1 || q < 1) fail(ErrorCode::InvalidParams, "p and q must be at least 1");
  if (std::gcd(p, q) != 1)
    fail(ErrorCode::NotCoprime, "gcd(" + std::to_string(p) + "," + std::to_string(q) +
                                    ") = " + std::to_string(std::gcd(p, q)));
  const int n = p + q;
  std::vector<int> sigma_x(n);
  for (int i = 1; i <= n; ++i) sigma_x[i - 1] = (n - i + q) % n + 1;
  return diagonal_from_x(n, sigma_x);
}

// All crossings, sorted by (column, row).  Vertical strands run X->O,
// horizontal strands run O->X; sign is the z-component of
// over-direction x under-direction.
inline std::vector<Crossing> crossings(const GridDiagram& g) {
  const int n = g.size();
  std::vector<Crossing> out;
  for (int c = 1; c <= n; ++c) {
    const int xr = g.x_row(c), orow = g.o_row(c);
    const int lo = std::min(xr, orow), hi = std::max(xr, orow);
    const int vdir = orow > xr ? 1 : -1;
    for (int r = lo + 1; r < hi; ++r) {
      const int oc = g.o_col(r), xc = g.x_col(r);
      if (std::min(oc, xc) < c && c < std::max(oc, xc)) {
        const int hdir = xc > oc ? 1 : -1;
        out.push_back(Crossing{c, r, -vdir * hdir});
      }
    }
  }
  return out;
}

inline int crossing_count(const GridDiagram& g) {
  return static_cast<int>(crossings(g).size());
}

inline int writhe(const GridDiagram& g) {
  int w = 0;
  for (const Crossing& c : crossings(g)) w += c.sign;
  return w;
}

// Torus move: column i's markings move to column ((i-1+dx) mod n)+1 and all
// rows shift by dy modulo n.
inline GridDiagram cyclic_translate(const GridDiagram& g, int dx, int dy) {
  const int n = g.size();
  dx = ((dx % n) + n) % n;
  dy = ((dy % n) + n) % n;
  std::vector<int> sx(n), so(n);
  for (int c = 1; c <= n; ++c) {
    const int nc = (c - 1 + dx) % n + 1;
    sx[nc - 1] = (g.x_row(c) - 1 + dy) % n + 1;
    so[nc - 1] = (g.o_row(c) - 1 + dy) % n + 1;
  }
  return GridDiagram(detail::Unchecked{}, std::move(sx), std::move(so));
}

namespace detail {

// Commutation legality: the two marking intervals must be disjoint or
// strictly nested, with all four endpoints distinct.  Interleaved spans or a
// shared endpoint can change the knot, so they are rejected.
inline bool intervals_commute(int a1, int b1, int a2, int b2) {
  if (a1 > b1) std::swap(a1, b1);
  if (a2 > b2) std::swap(a2, b2);
  if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) return false;
  const bool disjoint = b1 < a2 || b2 < a1;
  const bool nested = (a1 < a2 && b2 < b1) || (a2 < a1 && b1 < b2);
  return disjoint || nested;
}

}  // namespace detail

inline bool can_commute_columns(const GridDiagram& g, int i) {
  if (i < 1 || i >= g.size()) return false;
  return detail::intervals_commute(g.x_row(i), g.o_row(i), g.x_row(i + 1), g.o_row(i + 1));
}

inline GridDiagram commute_columns(const GridDiagram& g, int i) {
  if (i < 1 || i >= g.size())
    fail(ErrorCode::IndexOutOfRange, "column " + std::to_string(i));
  if (!can_commute_columns(g, i))
    fail(ErrorCode::IllegalMove,
         "columns " + std::to_string(i) + "," + std::to_string(i + 1) +
             " have interleaved or touching spans");
  std::vector<int> sx = g.sigma_x(), so = g.sigma_o();
  std::swap(sx[i - 1], sx[i]);
  std::swap(so[i - 1], so[i]);
  return GridDiagram(detail::Unchecked{}, std::move(sx), std::move(so));
}

// Row commutation is column commutation on the transposed diagram.
inline bool can_commute_rows(const GridDiagram& g, int j) {
  if (j < 1 || j >= g.size()) return false;
  return detail::intervals_commute(g.x_col(j), g.o_col(j), g.x_col(j + 1), g.o_col(j + 1));
}

inline GridDiagram commute_rows(const GridDiagram& g, int j) {
  if (j < 1 || j >= g.size())
    fail(ErrorCode::IndexOutOfRange, "row " + std::to_string(j));
  if (!can_commute_rows(g, j))
    fail(ErrorCode::IllegalMove,
         "rows " + std::to_string(j) + "," + std::to_string(j + 1) +
             " have interleaved or touching spans");
  std::vector<int> sx = g.sigma_x(), so = g.sigma_o();
  for (int c = 0; c < g.size(); ++c) {
    if (sx[c] == j) sx[c] = j + 1;
    else if (sx[c] == j + 1) sx[c] = j;
    if (so[c] == j) so[c] = j + 1;
    else if (so[c] == j + 1) so[c] = j;
  }
  return GridDiagram(detail::Unchecked{}, std::move(sx), std::move(so));
}

// Split the X of column c into two X's around a new O, growing the grid by
// one.  Destabilizing the created block recovers the input exactly.
inline GridDiagram stabilize(const GridDiagram& g, int c) {
  const int n = g.size();
  if (c < 1 || c > n) fail(ErrorCode::IndexOutOfRange, "column " + std::to_string(c));
  const int r = g.x_row(c);
  std::vector<int> sx(n + 1, 0), so(n + 1, 0);
  for (int j = 1; j <= n; ++j) {
    if (j == c) continue;
    const int nc = j + (j > c ? 1 : 0);
    const int xr = g.x_row(j);
    sx[nc - 1] = xr + (xr > r ? 1 : 0);
    const int orow = g.o_row(j);
    so[nc - 1] = orow == r ? r + 1 : orow + (orow > r ? 1 : 0);
  }
  const int oc = g.o_row(c);  // column c's O slides one column right
  so[c] = oc + (oc > r ? 1 : 0);
  sx[c - 1] = r + 1;
  sx[c] = r;
  so[c - 1] = r;
  return GridDiagram(detail::Unchecked{}, std::move(sx), std::move(so));
}

struct Destabilization {
  GridDiagram diagram;
  int i = 0, j = 0;  // block columns {i,i+1}, rows {j,j+1}
};

// Destabilize the 2x2 block at columns {i,i+1}, rows {j,j+1} if it holds
// exactly three markings.  The corner marking's row and column are deleted
// and a marking of the other letter fills the block's empty cell.
inline std::optional<GridDiagram> destabilize_at(const GridDiagram& g, int i, int j) {
  const int n = g.size();
  if (n < 3 || i < 1 || i >= n || j < 1 || j >= n) return std::nullopt;

  // occupancy of the four cells: +1 = X, -1 = O, 0 = empty
  int cell[2][2] = {{0, 0}, {0, 0}};
  int count = 0;
  for (int dc = 0; dc < 2; ++dc)
    for (int dr = 0; dr < 2; ++dr) {
      const int c = i + dc, r = j + dr;
      if (g.x_row(c) == r) cell[dc][dr] = 1;
      else if (g.o_row(c) == r) cell[dc][dr] = -1;
      if (cell[dc][dr] != 0) ++count;
    }
  if (count != 3) return std::nullopt;

  // The corner shares its row with one marking and its column with the
  // other; the empty cell sits diagonally opposite it.
  int ec = -1, er = -1;
  for (int dc = 0; dc < 2; ++dc)
    for (int dr = 0; dr < 2; ++dr)
      if (cell[dc][dr] == 0) { ec = dc; er = dr; }
  const int corner_dc = 1 - ec, corner_dr = 1 - er;
  const int corner_col = i + corner_dc, corner_row = j + corner_dr;
  const int fill = -cell[corner_dc][corner_dr];  // opposite letter
  const int fill_col = i + ec, fill_row = j + er;

  std::vector<int> sx(n - 1, 0), so(n - 1, 0);
  auto place = [&](int letter, int c, int r) {
    const int nc = c - (c > corner_col ? 1 : 0);
    const int nr = r - (r > corner_row ? 1 : 0);
    (letter > 0 ? sx : so)[nc - 1] = nr;
  };
  for (int c = 1; c <= n; ++c) {
    if (c != corner_col && g.x_row(c) != corner_row) place(1, c, g.x_row(c));
    if (c != corner_col && g.o_row(c) != corner_row) place(-1, c, g.o_row(c));
  }
  place(fill, fill_col, fill_row);
  return GridDiagram(detail::Unchecked{}, std::move(sx), std::move(so));
}

// First destabilizable block in raster order (i outer, j inner), if any.
// Wraparound blocks are reached by callers via cyclic_translate.
inline std::optional<Destabilization> destabilize(const GridDiagram& g) {
  const int n = g.size();
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      if (auto d = destabilize_at(g, i, j))
        return Destabilization{std::move(*d), i, j};
  return std::nullopt;
}

struct GaussEntry {
  int id = 0;      // 1-based index into crossings(g)
  bool over = false;
  int sign = 0;

  bool operator==(const GaussEntry& o) const {
    return id == o.id && over == o.over && sign == o.sign;
  }
};

// Walk the knot from the X of column 1 (vertical strand first), emitting
// each crossing encounter.  Every id appears once over and once under.
inline std::vector<GaussEntry> gauss_code(const GridDiagram& g) {
  if (!is_single_component(g)) fail(ErrorCode::NotAKnot, "diagram has multiple components");
  const int n = g.size();
  const std::vector<Crossing> xs = crossings(g);

  // crossing id lookup per column (vertical pass) and per row (horizontal)
  std::vector<std::vector<std::pair<int, int>>> by_col(n + 1), by_row(n + 1);
  for (int k = 0; k < static_cast<int>(xs.size()); ++k) {
    by_col[xs[k].column].push_back({xs[k].row, k + 1});
    by_row[xs[k].row].push_back({xs[k].column, k + 1});
  }

  std::vector<GaussEntry> code;
  int col = 1;
  do {
    const int xr = g.x_row(col), orow = g.o_row(col);
    const bool up = orow > xr;
    auto verts = by_col[col];
    std::sort(verts.begin(), verts.end());
    if (!up) std::reverse(verts.begin(), verts.end());
    for (auto [r, id] : verts) code.push_back({id, true, xs[id - 1].sign});

    const int row = orow;
    const int oc = g.o_col(row), xc = g.x_col(row);
    const bool rightward = xc > oc;
    auto horiz = by_row[row];
    std::sort(horiz.begin(), horiz.end());
    if (!rightward) std::reverse(horiz.begin(), horiz.end());
    for (auto [c, id] : horiz) code.push_back({id, false, xs[id - 1].sign});

    col = xc;
  } while (col != 1);
  return code;
}

// Permutation text form: comma-separated decimal values, no spaces.
inline std::string permutation_string(const std::vector<int>& v) {
  std::string out;
  for (size_t k = 0; k < v.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(v[k]);
  }
  return out;
}

inline std::vector<int> parse_permutation(const std::string& text) {
  std::vector<int> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    const std::string field =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (field.empty() || field.size() > 9 ||
        field.find_first_not_of("0123456789") != std::string::npos ||
        (field.size() > 1 && field[0] == '0'))
      fail(ErrorCode::ParseError, "bad permutation entry '" + field + "'");
    out.push_back(std::stoi(field));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace gridknot
