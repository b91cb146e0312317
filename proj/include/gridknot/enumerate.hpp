#pragma once

// Enumeration of all diagonal knot grid diagrams of a given size, invariant
// annotation, and the tab-separated record format.
//
// A diagonal diagram is determined by sigma_x alone; it presents a knot iff
// the closure permutation p(i) = n+1 - sigma_x[i] is a single n-cycle
// (which also rules out collisions with the antidiagonal O's).  The
// generator extends sigma_x column by column, pruning on row reuse,
// antidiagonal collision and premature cycle closure; emission is
// lexicographic on sigma_x.

#include <atomic>
#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "gridknot/alexander.hpp"
#include "gridknot/errors.hpp"
#include "gridknot/grid.hpp"
#include "gridknot/tau.hpp"

namespace gridknot {

// One TSV row: n, sigma_x, and the requested invariants once annotated.
// `error` tags a record whose annotation failed; it is reported out of band
// and never serialized.
struct EnumerationRecord {
  int n = 0;
  std::vector<int> sigma_x;
  std::optional<long long> tau;
  std::optional<std::string> alexander;  // canonical coefficient vector
  std::optional<std::string> error;
};

using RecordSink = std::function<void(EnumerationRecord&&)>;

namespace detail {

// Tracks the open paths of the partial closure permutation so that an edge
// closing a cycle before the last column is pruned.  start_of[v] is the
// start of the path ending at v; end_of[v] the end of the path starting
// at v (both 1-based, valid at the respective path boundary).
struct DiagonalEnumerator {
  int n;
  std::vector<int> sigma;
  std::vector<char> used;
  std::vector<int> start_of, end_of;
  const std::vector<int>* prefix = nullptr;
  const RecordSink* sink = nullptr;
  std::uint64_t count = 0;

  explicit DiagonalEnumerator(int size)
      : n(size), sigma(size, 0), used(size + 1, 0), start_of(size + 1), end_of(size + 1) {
    for (int v = 1; v <= n; ++v) start_of[v] = end_of[v] = v;
  }

  void try_value(int col, int v) {
    if (used[v] || v == n + 1 - col) return;
    const int target = n + 1 - v;  // closure edge col -> target
    if (col < n && start_of[col] == target) return;  // premature cycle
    const int s = start_of[col], e = end_of[target];
    end_of[s] = e;
    start_of[e] = s;
    used[v] = 1;
    sigma[col - 1] = v;
    recurse(col + 1);
    used[v] = 0;
    end_of[s] = col;
    start_of[e] = target;
  }

  void recurse(int col) {
    if (col > n) {
      ++count;
      if (*sink) (*sink)(EnumerationRecord{n, sigma, {}, {}, {}});
      return;
    }
    if (prefix && col <= static_cast<int>(prefix->size())) {
      try_value(col, (*prefix)[col - 1]);
      return;
    }
    for (int v = 1; v <= n; ++v) try_value(col, v);
  }
};

}  // namespace detail

// Streams every diagonal knot sigma_x of size n to `sink` in lexicographic
// order; returns the total count.  An optional prefix pins the leading
// column values (used for partitioned runs).
inline std::uint64_t enumerate_diagonal_prefixed(int n, const std::vector<int>& prefix,
                                                 const RecordSink& sink) {
  if (n < 2) fail(ErrorCode::InvalidSize, "grid size must be at least 2");
  detail::DiagonalEnumerator en(n);
  en.prefix = &prefix;
  en.sink = &sink;
  en.recurse(1);
  return en.count;
}

inline std::uint64_t enumerate_diagonal(int n, const RecordSink& sink) {
  return enumerate_diagonal_prefixed(n, {}, sink);
}

// The search tree partitioned by the first two column choices, in
// lexicographic order.  Concatenating the partitions' streams reproduces
// the single-run stream exactly.
inline std::vector<std::vector<int>> diagonal_partitions(int n) {
  if (n < 2) fail(ErrorCode::InvalidSize, "grid size must be at least 2");
  std::vector<std::vector<int>> parts;
  for (int v1 = 1; v1 <= n; ++v1) {
    if (v1 == n) continue;  // antidiagonal collision in column 1
    for (int v2 = 1; v2 <= n; ++v2) {
      if (v2 == v1 || v2 == n - 1) continue;
      if (n > 2 && n + 1 - v1 == 2 && n + 1 - v2 == 1) continue;  // closes a 2-cycle
      parts.push_back({v1, v2});
    }
  }
  return parts;
}

// Partitioned enumeration with `jobs` workers; the merged stream is
// byte-identical to a single run for every job count.
inline std::uint64_t enumerate_diagonal_parallel(int n, int jobs, const RecordSink& sink) {
  if (jobs <= 1) return enumerate_diagonal(n, sink);
  const std::vector<std::vector<int>> parts = diagonal_partitions(n);
  std::vector<std::vector<EnumerationRecord>> buffers(parts.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t k = next.fetch_add(1); k < parts.size(); k = next.fetch_add(1)) {
      enumerate_diagonal_prefixed(n, parts[k], [&](EnumerationRecord&& rec) {
        buffers[k].push_back(std::move(rec));
      });
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  std::uint64_t count = 0;
  for (std::vector<EnumerationRecord>& buf : buffers)
    for (EnumerationRecord& rec : buf) {
      ++count;
      sink(std::move(rec));
    }
  return count;
}

// Independent oracle: filter all n! permutations directly.
inline std::uint64_t count_diagonal(int n) {
  if (n < 2) fail(ErrorCode::InvalidSize, "grid size must be at least 2");
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i + 1;
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i)
      if (perm[i - 1] == n + 1 - i) ok = false;
    if (!ok) continue;
    int col = 1, steps = 0;
    do {
      col = n + 1 - perm[col - 1];
      ++steps;
    } while (col != 1 && steps <= n);
    if (steps == n) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// Keep only the lexicographically least sigma_x within its orbit under the
// diagonal-preserving translations (dx, -dx).  Post-filter; the raw stream
// stays undeduplicated.
inline bool is_canonical_diagonal_representative(int n, const std::vector<int>& sigma_x) {
  for (int d = 1; d < n; ++d) {
    std::vector<int> t(n);
    for (int c = 1; c <= n; ++c) {
      const int nc = (c - 1 + d) % n + 1;
      t[nc - 1] = ((sigma_x[c - 1] - 1 - d) % n + n) % n + 1;
    }
    if (t < sigma_x) return false;
  }
  return true;
}

// Fills in the requested invariants; a per-record failure is recorded in
// `error` instead of aborting the stream.
inline void annotate_record(EnumerationRecord& rec, bool with_tau, bool with_alexander) {
  try {
    const GridDiagram g = diagonal_from_x(rec.n, rec.sigma_x);
    if (with_tau) rec.tau = tau_diagonal(g);
    if (with_alexander) rec.alexander = alexander_polynomial(g).coeff_string();
  } catch (const Error& e) {
    rec.error = e.what();
  }
}

// Data-parallel annotation; input order is preserved for every job count.
inline std::vector<EnumerationRecord> annotate_records(std::vector<EnumerationRecord> records,
                                                       bool with_tau, bool with_alexander,
                                                       int jobs = 1) {
  if (jobs <= 1) {
    for (EnumerationRecord& rec : records) annotate_record(rec, with_tau, with_alexander);
    return records;
  }
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t k = next.fetch_add(1); k < records.size(); k = next.fetch_add(1))
      annotate_record(records[k], with_tau, with_alexander);
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  return records;
}

// ---- TSV transport ------------------------------------------------------
// Tab-separated, no header, LF line endings.  Columns: n, sigma_x,
// optional tau, optional alexander coefficient vector.  A record with an
// alexander column but no tau keeps an empty third field so columns stay
// positional.  Parse then re-emit is byte-identical.

namespace detail {

inline long long parse_strict_int(const std::string& field, int line_no, int field_no) {
  const bool neg = !field.empty() && field[0] == '-';
  const std::string digits = neg ? field.substr(1) : field;
  if (digits.empty() || digits.size() > 18 ||
      digits.find_first_not_of("0123456789") != std::string::npos ||
      (digits.size() > 1 && digits[0] == '0') || field == "-0")
    fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ", column " +
                                    std::to_string(field_no) + ": bad integer '" + field + "'");
  return std::stoll(field);
}

}  // namespace detail

inline std::string record_tsv_line(const EnumerationRecord& rec) {
  std::string line = std::to_string(rec.n) + '\t' + permutation_string(rec.sigma_x);
  if (rec.tau || rec.alexander) {
    line += '\t';
    if (rec.tau) line += std::to_string(*rec.tau);
  }
  if (rec.alexander) {
    line += '\t';
    line += *rec.alexander;
  }
  return line;
}

inline EnumerationRecord parse_tsv_line(const std::string& line, int line_no) {
  std::vector<std::string> fields;
  size_t pos = 0;
  while (true) {
    const size_t tab = line.find('\t', pos);
    fields.push_back(line.substr(pos, tab == std::string::npos ? std::string::npos : tab - pos));
    if (tab == std::string::npos) break;
    pos = tab + 1;
  }
  const auto at = [&](const std::string& reason, int field_no) {
    fail(ErrorCode::ParseError,
         "line " + std::to_string(line_no) + ", column " + std::to_string(field_no) + ": " + reason);
  };
  if (fields.size() < 2 || fields.size() > 4) at("expected 2 to 4 fields", 1);

  EnumerationRecord rec;
  const long long n = detail::parse_strict_int(fields[0], line_no, 1);
  if (n < 2 || n > 1000) at("grid size out of range", 1);
  rec.n = static_cast<int>(n);
  try {
    rec.sigma_x = parse_permutation(fields[1]);
    const GridDiagram g = diagonal_from_x(rec.n, rec.sigma_x);
    if (!is_single_component(g)) fail(ErrorCode::NotAKnot, "multiple components");
  } catch (const Error& e) {
    at(e.what(), 2);
  }
  if (fields.size() >= 3 && !fields[2].empty())
    rec.tau = detail::parse_strict_int(fields[2], line_no, 3);
  if (fields.size() == 4) {
    try {
      const LaurentPolynomial p = LaurentPolynomial::parse_coeffs(fields[3]);
      if (p.coeff_string() != fields[3]) fail(ErrorCode::ParseError, "not in canonical form");
    } catch (const Error& e) {
      at(e.what(), 4);
    }
    rec.alexander = fields[3];
  } else if (fields.size() == 3 && fields[2].empty()) {
    at("empty tau field without an alexander field", 3);
  }
  return rec;
}

inline std::vector<EnumerationRecord> read_tsv(std::istream& in) {
  std::vector<EnumerationRecord> records;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) records.push_back(parse_tsv_line(line, ++line_no));
  return records;
}

inline void write_tsv(std::ostream& out, const std::vector<EnumerationRecord>& records) {
  for (const EnumerationRecord& rec : records) out << record_tsv_line(rec) << '\n';
}

}  // namespace gridknot
