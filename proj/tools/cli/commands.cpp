#include "cli/commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cli/report.hpp"
#include "cli/system_format.hpp"
#include "mroot/error.hpp"
#include "mroot/polytope.hpp"
#include "mroot/quotient.hpp"
#include "mroot/solver.hpp"

namespace mroot::cli {

namespace {

struct SolveArgs {
  std::string file;
  std::string mode;
  std::string blocks;
  std::uint64_t seed = kDefaultSeed;
  Tolerances tol;
  std::string output = "json";
  bool residuals = false;
  bool timings = false;
  std::string dump_matrix;
  std::string out;
  int degree_surplus = 0;
  bool no_precondition = false;
};

std::optional<Mode> mode_override(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto m = parse_mode(text);
  if (!m) throw Error(ErrorKind::kInvalidArgument, "unknown mode '" + text + "'");
  return m;
}

std::optional<VariableBlocks> blocks_override(const std::string& text, std::optional<Mode> mode) {
  if (text.empty()) return std::nullopt;
  VariableBlocks b;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v < 1) throw std::invalid_argument(item);
      b.sizes.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorKind::kInvalidArgument, "block sizes must be positive integers: '" + text + "'");
    }
  }
  b.homogeneous = mode && (*mode == Mode::kProjective || *mode == Mode::kMultihom);
  return b;
}

PolynomialSystem load(const std::string& file, const std::string& mode, const std::string& blocks) {
  const auto m = mode_override(mode);
  return parse_system(read_file(file), m, blocks_override(blocks, m ? m : std::optional<Mode>(Mode::kMultihom)));
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::kIo, "cannot write '" + path + "'");
  f << text;
  if (!f) throw Error(ErrorKind::kIo, "write to '" + path + "' failed");
}

BuildOptions build_options(const SolveArgs& a) {
  BuildOptions o;
  o.seed = a.seed;
  o.tol = a.tol;
  o.degree_surplus = a.degree_surplus;
  o.precondition = !a.no_precondition;
  return o;
}

int solve_command(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const PolynomialSystem system = load(a.file, a.mode, a.blocks);
  const BuildOptions options = build_options(a);
  if (!a.dump_matrix.empty()) write_text(a.dump_matrix, matrix_csv(macaulay_matrix(system, options), system.variables()));
  const RootSet roots = solve(system, options);
  for (const auto& w : roots.warnings) err << "warning: " << w << '\n';

  std::string text;
  if (a.output == "csv") {
    text = to_csv(roots, system.variables(), {a.residuals});
    if (a.timings) {
      const auto& t = roots.timings;
      err << "t_M,t_N,t_B,t_S,t_alg\n"
          << format_number(t.t_M) << ',' << format_number(t.t_N) << ',' << format_number(t.t_B) << ','
          << format_number(t.t_S) << ',' << format_number(t.t_alg) << '\n';
    }
  } else {
    text = to_json(roots).dump(2) + "\n";
  }
  if (a.out.empty()) {
    out << text;
  } else {
    write_text(a.out, text);
  }
  return 0;
}

}  // namespace

BenchRow bench_row(int n, int d, std::uint64_t seed, double max_bytes) {
  if (n < 1 || d < 1) throw Error(ErrorKind::kInvalidArgument, "bench needs n >= 1 and d >= 1");
  const double bytes = 16.0 * static_cast<double>(dense_macaulay_entries(n, d));
  // The SVD needs roughly three matrices of this size.
  if (3.0 * bytes > max_bytes) {
    throw Error(ErrorKind::kResource, "out of memory guard: n = " + std::to_string(n) + ", d = " + std::to_string(d) +
                                          " needs about " + std::to_string(static_cast<long>(3.0 * bytes / 1048576.0)) +
                                          " MiB, limit " + std::to_string(static_cast<long>(max_bytes / 1048576.0)) +
                                          " MiB");
  }
  const PolynomialSystem system = generate_dense_system(n, d, seed);
  BuildOptions options;
  options.seed = seed;
  const QuotientRep q = build(system, options);
  const RootSet roots = extract_roots(q, system, seed, options.tol);
  BenchRow row;
  row.delta = q.delta;
  row.m1 = q.macaulay_columns;
  row.m2 = q.macaulay_rows;
  row.n2 = q.delta;
  for (const auto& r : roots.roots) {
    row.res = std::max(row.res, r.residual);
    row.delta_alg += r.multiplicity;
  }
  row.timings = roots.timings;
  return row;
}

std::string bench_header() { return "delta,m1,m2,n2,res,delta_alg,t_M,t_N,t_B,t_S,t_alg"; }

std::string format_bench_row(const BenchRow& r) {
  std::ostringstream os;
  os << r.delta << ',' << r.m1 << ',' << r.m2 << ',' << r.n2 << ',' << format_number(r.res) << ',' << r.delta_alg
     << ',' << format_number(r.timings.t_M) << ',' << format_number(r.timings.t_N) << ','
     << format_number(r.timings.t_B) << ',' << format_number(r.timings.t_S) << ',' << format_number(r.timings.t_alg);
  return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynomial system solver based on Macaulay matrices"};
  app.require_subcommand(1);

  SolveArgs sa;
  auto* solve_cmd = app.add_subcommand("solve", "Compute all isolated roots of a square system");
  solve_cmd->add_option("--mode", sa.mode, "affine | toric | projective | multihom (overrides the file)");
  solve_cmd->add_option("--blocks", sa.blocks, "Block sizes n1,n2,... (overrides the file)");
  solve_cmd->add_option("--seed", sa.seed, "Seed for every random choice");
  solve_cmd->add_option("--tol-null", sa.tol.null, "Relative null space residual bound")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--tol-commute", sa.tol.commute, "Relative commutator bound")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--tol-cluster", sa.tol.cluster_rel, "Relative clustering radius")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--gap-min", sa.tol.gap_min, "Minimal singular value gap")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--cond-max", sa.tol.cond_max, "Warn when cond(N*) exceeds this")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--output", sa.output, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  solve_cmd->add_flag("--emit-residuals", sa.residuals, "Residual column in CSV output");
  solve_cmd->add_flag("--emit-timings", sa.timings, "Timings on stderr in CSV mode");
  solve_cmd->add_option("--dump-matrix", sa.dump_matrix, "Also write the Macaulay matrix as CSV");
  solve_cmd->add_option("--out", sa.out, "Write the result here instead of stdout");
  solve_cmd->add_option("--degree-surplus", sa.degree_surplus, "Multihom: extra degree in every block")
      ->check(CLI::NonNegativeNumber);
  solve_cmd->add_flag("--no-precondition", sa.no_precondition, "Multihom: skip the random change of coordinates");
  solve_cmd->add_option("FILE", sa.file, "System file")->required();

  std::string bkk_file;
  auto* bkk_cmd = app.add_subcommand("bkk", "Print the mixed volume of the Newton polytopes");
  bkk_cmd->add_option("FILE", bkk_file, "System file")->required();

  int bench_n = 2;
  int bench_d = 3;
  std::uint64_t bench_seed = kDefaultSeed;
  double bench_limit_mb = 4096;
  auto* bench_cmd = app.add_subcommand("bench", "Solve a random dense system and print one table row");
  bench_cmd->add_option("--n", bench_n, "Number of variables")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--d", bench_d, "Degree of every equation")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench_seed, "Coefficient seed");
  bench_cmd->add_option("--max-memory-mb", bench_limit_mb, "Refuse problems needing more memory")
      ->check(CLI::PositiveNumber);

  SolveArgs da;
  std::string dump_path;
  auto* dump_cmd = app.add_subcommand("dump-matrix", "Write the Macaulay matrix as CSV");
  dump_cmd->add_option("--mode", da.mode, "Mode override");
  dump_cmd->add_option("--blocks", da.blocks, "Block override");
  dump_cmd->add_option("--seed", da.seed, "Seed (toric shift)");
  dump_cmd->add_option("--degree-surplus", da.degree_surplus, "Multihom degree surplus")->check(CLI::NonNegativeNumber);
  dump_cmd->add_option("FILE", da.file, "System file")->required();
  dump_cmd->add_option("PATH", dump_path, "Output CSV")->required();

  std::string reg_file;
  int reg_degree = 0;
  std::uint64_t reg_seed = kDefaultSeed;
  auto* reg_cmd = app.add_subcommand("regularity", "Check surjectivity of N_h in a given degree");
  reg_cmd->add_option("--degree", reg_degree, "Degree d")->required();
  reg_cmd->add_option("--seed", reg_seed, "Seed for h");
  reg_cmd->add_option("FILE", reg_file, "Projective system file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (*solve_cmd) return solve_command(sa, out, err);
    if (*bkk_cmd) {
      const PolynomialSystem system = parse_system(read_file(bkk_file));
      out << bkk_bound(system) << '\n';
      return 0;
    }
    if (*bench_cmd) {
      const BenchRow row = bench_row(bench_n, bench_d, bench_seed, bench_limit_mb * 1048576.0);
      out << bench_header() << '\n' << format_bench_row(row) << '\n';
      return 0;
    }
    if (*dump_cmd) {
      const PolynomialSystem system = load(da.file, da.mode, da.blocks);
      write_text(dump_path, matrix_csv(macaulay_matrix(system, build_options(da)), system.variables()));
      return 0;
    }
    if (*reg_cmd) {
      const PolynomialSystem system = parse_system(read_file(reg_file), Mode::kProjective);
      const RegularityReport r = regularity_check(system, reg_degree, reg_seed);
      nlohmann::json j{{"regular", r.regular},
                       {"delta", r.delta},
                       {"nullity", r.nullity},
                       {"rank", r.rank},
                       {"sigma_ratio", r.sigma_ratio}};
      out << j.dump(2) << '\n';
      return 0;
    }
  } catch (const ParseError& e) {
    err << "error: parse: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return exit_code(ErrorKind::kResource);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace mroot::cli
