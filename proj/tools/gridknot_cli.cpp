// gridknot command line: generate, annotate, compute and simplify grid
// diagrams.  Output is machine-first (plain values, TSV); pass --verbose
// for labeled summaries.  Exit codes: 0 success, 1 domain error, 2 usage.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gridknot/gridknot.hpp"

namespace {

using namespace gridknot;

GridDiagram diagram_from_flags(const std::string& perm, const std::string& o_perm) {
  const std::vector<int> sx = parse_permutation(perm);
  const int n = static_cast<int>(sx.size());
  if (o_perm.empty()) return diagonal_from_x(n, sx);
  return validate(n, sx, parse_permutation(o_perm));
}

std::vector<EnumerationRecord> read_records(const std::string& path) {
  if (path.empty() || path == "-") return read_tsv(std::cin);
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
  return read_tsv(in);
}

void write_lines(const std::string& path, const std::string& payload) {
  if (path.empty() || path == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
  out << payload;
}

int run(int argc, char** argv) {
  CLI::App app{"exact knot invariants on grid diagrams"};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("--verbose", verbose, "human-readable summaries");

  // gen
  auto* gen = app.add_subcommand("gen", "enumerate diagonal knot diagrams as TSV");
  int gen_n = 0;
  std::string gen_out;
  int gen_jobs = 1;
  bool gen_dedup = false;
  gen->add_option("n", gen_n, "grid size")->required();
  gen->add_option("--out", gen_out, "output file (default stdout)");
  gen->add_option("--jobs", gen_jobs, "worker count; output is identical for any value");
  gen->add_flag("--dedup", gen_dedup, "keep one representative per translation orbit");

  // tau
  auto* tau_cmd = app.add_subcommand("tau", "tau invariant of a diagonal diagram");
  std::string tau_perm;
  tau_cmd->add_option("--perm", tau_perm, "X permutation, e.g. 3,2,1,5,4")->required();

  // alex
  auto* alex_cmd = app.add_subcommand("alex", "Alexander polynomial coefficient vector");
  std::string alex_perm, alex_operm;
  alex_cmd->add_option("--perm", alex_perm, "X permutation")->required();
  alex_cmd->add_option("--o-perm", alex_operm, "O permutation (default antidiagonal)");

  // annotate
  auto* ann = app.add_subcommand("annotate", "add invariant columns to a TSV stream");
  std::string ann_in, ann_out;
  bool ann_tau = false, ann_alex = false;
  int ann_jobs = 1;
  ann->add_option("--in", ann_in, "input TSV file ('-' for stdin)")->required();
  ann->add_option("--out", ann_out, "output file (default stdout)");
  ann->add_flag("--tau", ann_tau, "compute tau");
  ann->add_flag("--alex", ann_alex, "compute the Alexander polynomial");
  ann->add_option("--jobs", ann_jobs, "worker count; output order is unaffected");

  // simplify
  auto* simp = app.add_subcommand("simplify", "reduce grid size by knot-preserving moves");
  std::string simp_perm, simp_operm;
  int simp_depth = 4, simp_iters = 1000;
  simp->add_option("--perm", simp_perm, "X permutation")->required();
  simp->add_option("--o-perm", simp_operm, "O permutation (default antidiagonal)");
  simp->add_option("--depth", simp_depth, "commutation search depth");
  simp->add_option("--max-iterations", simp_iters, "destabilization rounds bound");

  // crossings
  auto* cross = app.add_subcommand("crossings", "crossing count, writhe and signs");
  std::string cross_perm, cross_operm;
  cross->add_option("--perm", cross_perm, "X permutation")->required();
  cross->add_option("--o-perm", cross_operm, "O permutation (default antidiagonal)");

  // torus
  auto* torus = app.add_subcommand("torus", "X permutation of the diagonal (p,q) torus grid");
  int torus_p = 0, torus_q = 0;
  torus->add_option("p", torus_p, "longitudes")->required();
  torus->add_option("q", torus_q, "meridians")->required();

  // gauss
  auto* gauss = app.add_subcommand("gauss", "Gauss code of the diagram");
  std::string gauss_perm, gauss_operm;
  gauss->add_option("--perm", gauss_perm, "X permutation")->required();
  gauss->add_option("--o-perm", gauss_operm, "O permutation (default antidiagonal)");

  // reduce
  auto* red = app.add_subcommand("reduce", "search for a lower-crossing position");
  std::string red_perm, red_operm;
  int red_depth = 3;
  red->add_option("--perm", red_perm, "X permutation")->required();
  red->add_option("--o-perm", red_operm, "O permutation (default antidiagonal)");
  red->add_option("--depth", red_depth, "move search depth");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // usage error
  }

  if (*gen) {
    std::ostringstream out;
    const std::uint64_t count =
        enumerate_diagonal_parallel(gen_n, gen_jobs, [&](EnumerationRecord&& rec) {
          if (gen_dedup && !is_canonical_diagonal_representative(rec.n, rec.sigma_x)) return;
          out << record_tsv_line(rec) << '\n';
        });
    write_lines(gen_out, out.str());
    if (verbose) std::cerr << "enumerated " << count << " diagrams\n";
  } else if (*tau_cmd) {
    const long long t = tau_diagonal(diagram_from_flags(tau_perm, ""));
    if (verbose) std::cout << "tau = ";
    std::cout << t << '\n';
  } else if (*alex_cmd) {
    const LaurentPolynomial p = alexander_polynomial(diagram_from_flags(alex_perm, alex_operm));
    if (verbose) std::cout << "alexander = ";
    std::cout << p.coeff_string() << '\n';
  } else if (*ann) {
    std::vector<EnumerationRecord> records =
        annotate_records(read_records(ann_in), ann_tau, ann_alex, ann_jobs);
    std::ostringstream out;
    int line_no = 0;
    for (const EnumerationRecord& rec : records) {
      ++line_no;
      if (rec.error)
        std::cerr << "record " << line_no << ": " << *rec.error << '\n';
      out << record_tsv_line(rec) << '\n';
    }
    write_lines(ann_out, out.str());
  } else if (*simp) {
    const GridDiagram g = diagram_from_flags(simp_perm, simp_operm);
    const SimplifyResult res = simplify_grid(g, simp_depth, simp_iters);
    if (verbose)
      std::cout << "size " << g.size() << " -> " << res.diagram.size() << '\n';
    std::cout << permutation_string(res.diagram.sigma_x()) << '\n'
              << permutation_string(res.diagram.sigma_o()) << '\n'
              << move_log_string(res.log);
  } else if (*cross) {
    const GridDiagram g = diagram_from_flags(cross_perm, cross_operm);
    const std::vector<Crossing> xs = crossings(g);
    int w = 0;
    for (const Crossing& c : xs) w += c.sign;
    if (verbose) std::cout << "count = ";
    std::cout << xs.size() << '\n';
    if (verbose) std::cout << "writhe = ";
    std::cout << w << '\n';
    for (const Crossing& c : xs)
      std::cout << c.column << '\t' << c.row << '\t' << (c.sign > 0 ? "+1" : "-1") << '\n';
  } else if (*torus) {
    std::cout << permutation_string(torus_grid(torus_p, torus_q).sigma_x()) << '\n';
  } else if (*gauss) {
    const std::vector<GaussEntry> code = gauss_code(diagram_from_flags(gauss_perm, gauss_operm));
    std::string line;
    for (const GaussEntry& e : code) {
      if (!line.empty()) line += ' ';
      line += e.over ? 'O' : 'U';
      line += std::to_string(e.id);
      line += e.sign > 0 ? '+' : '-';
    }
    std::cout << line << '\n';
  } else if (*red) {
    const ReduceResult res = reduce_crossings(diagram_from_flags(red_perm, red_operm), red_depth);
    if (verbose) std::cout << "crossings = ";
    std::cout << res.best_count << '\n'
              << permutation_string(res.diagram.sigma_x()) << '\n'
              << permutation_string(res.diagram.sigma_o()) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const gridknot::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
