#pragma once

// Heuristic, deterministic simplification of grid diagrams by the
// knot-preserving moves: cyclic translations, commutations and
// (de)stabilizations.  Every run produces a move log whose replay
// reproduces the output exactly.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gridknot/errors.hpp"
#include "gridknot/grid.hpp"

namespace gridknot {

// Move log text format, one move per line:
//   "C i"     column commutation at columns i, i+1
//   "R j"     row commutation at rows j, j+1
//   "T dx dy" cyclic translation
//   "D i j"   destabilization of the block at columns {i,i+1}, rows {j,j+1}
//   "S c"     stabilization at column c
struct Move {
  enum class Kind { ColumnCommute, RowCommute, Translate, Destabilize, Stabilize };
  Kind kind = Kind::ColumnCommute;
  int a = 0, b = 0;

  bool operator==(const Move& o) const { return kind == o.kind && a == o.a && b == o.b; }
};

inline std::string move_string(const Move& m) {
  switch (m.kind) {
    case Move::Kind::ColumnCommute: return "C " + std::to_string(m.a);
    case Move::Kind::RowCommute: return "R " + std::to_string(m.a);
    case Move::Kind::Translate: return "T " + std::to_string(m.a) + " " + std::to_string(m.b);
    case Move::Kind::Destabilize: return "D " + std::to_string(m.a) + " " + std::to_string(m.b);
    case Move::Kind::Stabilize: return "S " + std::to_string(m.a);
  }
  return "";
}

inline Move parse_move(const std::string& line) {
  std::istringstream in(line);
  std::string tag;
  Move m;
  if (!(in >> tag)) fail(ErrorCode::ParseError, "empty move line");
  if (tag == "C" || tag == "R" || tag == "S") {
    if (!(in >> m.a)) fail(ErrorCode::ParseError, "move '" + tag + "' needs one index");
    m.kind = tag == "C"   ? Move::Kind::ColumnCommute
             : tag == "R" ? Move::Kind::RowCommute
                          : Move::Kind::Stabilize;
  } else if (tag == "T" || tag == "D") {
    if (!(in >> m.a >> m.b)) fail(ErrorCode::ParseError, "move '" + tag + "' needs two indices");
    m.kind = tag == "T" ? Move::Kind::Translate : Move::Kind::Destabilize;
  } else {
    fail(ErrorCode::ParseError, "unknown move '" + tag + "'");
  }
  std::string extra;
  if (in >> extra) fail(ErrorCode::ParseError, "trailing input in move line");
  return m;
}

inline std::string move_log_string(const std::vector<Move>& log) {
  std::string out;
  for (const Move& m : log) {
    out += move_string(m);
    out += '\n';
  }
  return out;
}

inline std::vector<Move> parse_move_log(const std::string& text) {
  std::vector<Move> log;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) log.push_back(parse_move(line));
  return log;
}

inline GridDiagram apply_move(const GridDiagram& g, const Move& m) {
  switch (m.kind) {
    case Move::Kind::ColumnCommute: return commute_columns(g, m.a);
    case Move::Kind::RowCommute: return commute_rows(g, m.a);
    case Move::Kind::Translate: return cyclic_translate(g, m.a, m.b);
    case Move::Kind::Stabilize: return stabilize(g, m.a);
    case Move::Kind::Destabilize: {
      auto d = destabilize_at(g, m.a, m.b);
      if (!d)
        fail(ErrorCode::IllegalMove, "no destabilizable block at (" + std::to_string(m.a) +
                                         "," + std::to_string(m.b) + ")");
      return *d;
    }
  }
  fail(ErrorCode::IllegalMove, "unknown move kind");
}

inline GridDiagram replay(GridDiagram g, const std::vector<Move>& log) {
  for (const Move& m : log) g = apply_move(g, m);
  return g;
}

namespace detail {

// Byte key for visited sets: one byte per column for n <= 15, two otherwise.
inline std::string diagram_key(const GridDiagram& g) {
  const int n = g.size();
  std::string key;
  if (n <= 15) {
    key.resize(n);
    for (int c = 1; c <= n; ++c)
      key[c - 1] = static_cast<char>((g.x_row(c) - 1) | ((g.o_row(c) - 1) << 4));
  } else {
    key.resize(2 * n);
    for (int c = 1; c <= n; ++c) {
      key[2 * (c - 1)] = static_cast<char>(g.x_row(c));
      key[2 * (c - 1) + 1] = static_cast<char>(g.o_row(c));
    }
  }
  return key;
}

// Lexicographically least (sigma_x, sigma_o) over all n^2 translates.
inline std::pair<std::vector<int>, std::vector<int>> canonical_translate(const GridDiagram& g) {
  const int n = g.size();
  std::pair<std::vector<int>, std::vector<int>> best{g.sigma_x(), g.sigma_o()};
  for (int dx = 0; dx < n; ++dx)
    for (int dy = 0; dy < n; ++dy) {
      if (dx == 0 && dy == 0) continue;
      const GridDiagram t = cyclic_translate(g, dx, dy);
      const bool smaller = t.sigma_x() < best.first ||
                           (t.sigma_x() == best.first && t.sigma_o() < best.second);
      if (smaller) best = {t.sigma_x(), t.sigma_o()};
    }
  return best;
}

inline std::string canonical_key(const GridDiagram& g) {
  auto [sx, so] = canonical_translate(g);
  return diagram_key(GridDiagram(Unchecked{}, std::move(sx), std::move(so)));
}

// Fast existence check: does any cyclic 2x2 block (wraparound included)
// hold exactly three markings?
inline bool has_cyclic_destab_block(const GridDiagram& g) {
  const int n = g.size();
  if (n < 3) return false;
  for (int i = 1; i <= n; ++i) {
    const int i2 = i % n + 1;
    for (int j = 1; j <= n; ++j) {
      const int j2 = j % n + 1;
      int count = 0;
      for (int c : {i, i2}) {
        const int xr = g.x_row(c), orow = g.o_row(c);
        count += (xr == j) + (xr == j2) + (orow == j) + (orow == j2);
      }
      if (count == 3) return true;
    }
  }
  return false;
}

struct TranslateDestab {
  std::vector<Move> moves;  // optional T followed by D
  GridDiagram result;
};

// Deterministic full scan of all n^2 translations for a raster-order
// destabilization; source of every logged T/D pair.
inline std::optional<TranslateDestab> first_translate_destab(const GridDiagram& g) {
  const int n = g.size();
  for (int dx = 0; dx < n; ++dx)
    for (int dy = 0; dy < n; ++dy) {
      const GridDiagram t = dx == 0 && dy == 0 ? g : cyclic_translate(g, dx, dy);
      if (auto d = destabilize(t)) {
        std::vector<Move> moves;
        if (dx != 0 || dy != 0) moves.push_back({Move::Kind::Translate, dx, dy});
        moves.push_back({Move::Kind::Destabilize, d->i, d->j});
        return TranslateDestab{std::move(moves), std::move(d->diagram)};
      }
    }
  return std::nullopt;
}

}  // namespace detail

struct SimplifyResult {
  GridDiagram diagram;
  std::vector<Move> log;
};

// Repeatedly destabilizes, searching over all cyclic translations and then
// over commutation sequences up to `max_commutation_depth`, until no
// destabilization is reachable.  Grid size never increases.
inline SimplifyResult simplify_grid(const GridDiagram& g, int max_commutation_depth = 4,
                                    int max_iterations = 1000) {
  GridDiagram cur = g;
  std::vector<Move> log;

  for (int iter = 0; iter < max_iterations; ++iter) {
    if (auto hit = detail::first_translate_destab(cur)) {
      log.insert(log.end(), hit->moves.begin(), hit->moves.end());
      cur = std::move(hit->result);
      continue;
    }
    if (max_commutation_depth < 1) break;

    // BFS over commutation sequences; visited states are identified up to
    // cyclic translation since the destabilization scan covers the orbit.
    struct Node {
      GridDiagram diagram;
      std::vector<Move> path;
    };
    std::unordered_set<std::string> visited{detail::canonical_key(cur)};
    std::deque<Node> queue{{cur, {}}};
    bool advanced = false;
    while (!queue.empty() && !advanced) {
      Node node = std::move(queue.front());
      queue.pop_front();
      const int n = node.diagram.size();
      for (int kind = 0; kind < 2 && !advanced; ++kind) {
        for (int i = 1; i < n && !advanced; ++i) {
          const bool legal = kind == 0 ? can_commute_columns(node.diagram, i)
                                       : can_commute_rows(node.diagram, i);
          if (!legal) continue;
          GridDiagram child = kind == 0 ? commute_columns(node.diagram, i)
                                        : commute_rows(node.diagram, i);
          if (!visited.insert(detail::canonical_key(child)).second) continue;
          std::vector<Move> path = node.path;
          path.push_back({kind == 0 ? Move::Kind::ColumnCommute : Move::Kind::RowCommute, i});
          if (detail::has_cyclic_destab_block(child)) {
            if (auto hit = detail::first_translate_destab(child)) {
              log.insert(log.end(), path.begin(), path.end());
              log.insert(log.end(), hit->moves.begin(), hit->moves.end());
              cur = std::move(hit->result);
              advanced = true;
              break;
            }
          }
          if (static_cast<int>(path.size()) < max_commutation_depth)
            queue.push_back({std::move(child), std::move(path)});
        }
      }
    }
    if (!advanced) break;
  }
  return SimplifyResult{std::move(cur), std::move(log)};
}

struct ReduceResult {
  GridDiagram diagram;
  int best_count = 0;
};

// Bounded BFS over commutations and cyclic translations minimizing the
// crossing count; ties break to the lexicographically smallest
// (sigma_x, sigma_o).  Never worse than the input.
inline ReduceResult reduce_crossings(const GridDiagram& g, int depth) {
  if (depth < 1) fail(ErrorCode::InvalidParams, "depth must be at least 1");
  const int n = g.size();

  GridDiagram best = g;
  int best_count = crossing_count(g);
  auto consider = [&](const GridDiagram& d) {
    const int count = crossing_count(d);
    const bool tie_wins =
        count == best_count &&
        (d.sigma_x() < best.sigma_x() ||
         (d.sigma_x() == best.sigma_x() && d.sigma_o() < best.sigma_o()));
    if (count < best_count || tie_wins) {
      best = d;
      best_count = count;
    }
  };

  struct Node {
    GridDiagram diagram;
    int depth;
  };
  std::unordered_set<std::string> visited{detail::diagram_key(g)};
  std::deque<Node> queue{{g, 0}};
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    const int d = node.depth + 1;
    auto visit = [&](GridDiagram&& child) {
      if (!visited.insert(detail::diagram_key(child)).second) return;
      consider(child);
      if (d < depth) queue.push_back({std::move(child), d});
    };
    for (int i = 1; i < n; ++i)
      if (can_commute_columns(node.diagram, i)) visit(commute_columns(node.diagram, i));
    for (int j = 1; j < n; ++j)
      if (can_commute_rows(node.diagram, j)) visit(commute_rows(node.diagram, j));
    for (int dx = 0; dx < n; ++dx)
      for (int dy = 0; dy < n; ++dy) {
        if (dx == 0 && dy == 0) continue;
        visit(cyclic_translate(node.diagram, dx, dy));
      }
  }
  return ReduceResult{std::move(best), best_count};
}

}  // namespace gridknot
