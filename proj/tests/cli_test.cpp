#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "cli/commands.hpp"
#include "cli/json.hpp"
#include "cli/report.hpp"
#include "cli/system_format.hpp"
#include "mroot/error.hpp"
#include "mroot/solver.hpp"
#include "support.hpp"

using namespace mroot;
using namespace mroot::testing;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "mroot");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Result r;
  r.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("mroot_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                         "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& content = "") const {
    const auto p = (path_ / name).string();
    if (!content.empty()) {
      std::ofstream f(p);
      f << content;
    }
    return p;
  }

 private:
  fs::path path_;
};

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::vector<std::string>> read_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    bool quoted = false;
    for (char c : line) {
      if (c == '"') {
        quoted = !quoted;
      } else if (c == ',' && !quoted) {
        cells.push_back(cell);
        cell.clear();
      } else {
        cell += c;
      }
    }
    cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

Complex parse_entry(const std::string& s) {
  // a+bi or a-bi
  std::size_t split = s.size() - 1;
  while (split > 0 && !((s[split] == '+' || s[split] == '-') && s[split - 1] != 'e')) --split;
  return {std::stod(s.substr(0, split)), std::stod(s.substr(split, s.size() - split - 1))};
}

}  // namespace

TEST(Parse, AffineExampleFile) {
  const PolynomialSystem s = cli::parse_system(slurp(data_path("example_affine.sys")));
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.varcount(), 2);
  EXPECT_EQ(s.mode(), Mode::kAffine);
  EXPECT_EQ(s.poly(1).coefficient({0, 1}), Complex(14.0));
  EXPECT_EQ(s.poly(0).coefficient({0, 2}), Complex(5.0));
}

TEST(Parse, ZeroPolynomial) {
  try {
    cli::parse_system("vars: x\nf: 0\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("zero polynomial"), std::string::npos);
    EXPECT_EQ(e.line(), 2);
  }
}

TEST(Parse, ComplexCoefficient) {
  const PolynomialSystem s = cli::parse_system("vars: x\nf: (1.5-2i)*x - 1\n");
  EXPECT_EQ(s.poly(0).coefficient({1}), Complex(1.5, -2.0));
}

TEST(Parse, ErrorsCarryPositions) {
  const auto expect_error = [](const std::string& text, int line, const std::string& fragment) {
    try {
      cli::parse_system(text);
      ADD_FAILURE() << "no error for " << text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), line) << e.what();
      EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
    }
  };
  expect_error("vars: x y\nf: x + z\n", 2, "unknown variable");
  expect_error("vars: x\nf: 2x\n", 2, "expected an operator");
  expect_error("vars: x i\nf: x\n", 1, "i");
  expect_error("vars: x\nf: x^\n", 2, "");
  expect_error("vars: x\nmode: sideways\nf: x\n", 2, "mode");
}

TEST(Parse, InconsistentBlocks) {
  EXPECT_THROW(cli::parse_system("vars: a b c\nmode: multihom\nblocks: 1,1\nf: a*c\n"), Error);
}

TEST(Parse, PrintParseFixpoint) {
  for (const char* name : {"example_affine.sys", "example_projective.sys", "example_multihom.sys", "sparse3.sys"}) {
    const PolynomialSystem a = cli::parse_system(slurp(data_path(name)));
    const std::string printed = cli::format_system(a);
    const PolynomialSystem b = cli::parse_system(printed);
    EXPECT_EQ(cli::format_system(b), printed) << name;
    EXPECT_EQ(a.polys(), b.polys()) << name;
    EXPECT_EQ(a.mode(), b.mode());
    EXPECT_EQ(a.blocks(), b.blocks());
  }
  const PolynomialSystem c = cli::parse_system("vars: x y\nf: (0.1+0.2i)*x*y - (3e-5)*y^2 + 1\nf: x - y\n");
  EXPECT_EQ(cli::parse_system(cli::format_system(c)).polys(), c.polys());
}

TEST(Solve, AffineExampleJson) {
  const Result r = run_cli({"solve", data_path("example_affine.sys")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(cli::validate_report(j).empty());
  EXPECT_EQ(j["delta"], 4);
  EXPECT_EQ(j["mode"], "affine");
  EXPECT_EQ(j["seed"], 1);
  ASSERT_EQ(j["roots"].size(), 4u);
  for (const auto& root : j["roots"]) EXPECT_LE(root["residual"].get<double>(), 1e-10);
  for (const char* t : {"t_M", "t_N", "t_B", "t_S", "t_alg"}) EXPECT_TRUE(j["timings"].contains(t)) << t;
}

TEST(Solve, CsvWithResidualsAndTimings) {
  const Result r = run_cli({"solve", "--output", "csv", "--emit-residuals", "--emit-timings", data_path("example_affine.sys")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = read_csv(r.out);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"multiplicity", "x1_re", "x1_im", "x2_re", "x2_im", "residual"}));
  EXPECT_NE(r.err.find("t_M,t_N,t_B,t_S,t_alg"), std::string::npos);
}

TEST(Solve, MultihomExampleWithOverrides) {
  TempDir dir;
  // The same pair without a header mode.
  const std::string text =
      "vars: x10 x11 x20 x21\n"
      "f: 2*x10*x20 - x20*x11 + 2*x10*x21 + 2*x11*x21\n"
      "f: 4*x10*x20 - 2*x20*x11 + x10*x21 + 4*x11*x21\n";
  const Result r = run_cli({"solve", "--mode", "multihom", "--blocks", "1,1", dir.file("pair.sys", text)});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(cli::validate_report(j).empty());
  ASSERT_EQ(j["roots"].size(), 2u);
  for (const auto& root : j["roots"]) {
    EXPECT_EQ(root["coords"].size(), 4u);
    EXPECT_TRUE(root.contains("blocks"));
  }
}

TEST(Solve, OutFileIsWritten) {
  TempDir dir;
  const std::string out = dir.file("roots.json");
  const Result r = run_cli({"solve", "--out", out, data_path("example_projective.sys")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  const auto j = nlohmann::json::parse(slurp(out));
  EXPECT_EQ(j["roots"].size(), 2u);
  EXPECT_TRUE(cli::validate_report(j).empty());
}

TEST(Solve, ExitCodes) {
  TempDir dir;
  const Result nonsquare = run_cli({"solve", dir.file("ns.sys", "vars: x y\nf: x - y\n")});
  EXPECT_EQ(nonsquare.code, 1);
  EXPECT_NE(nonsquare.err.find("square system required"), std::string::npos);

  const Result parse = run_cli({"solve", dir.file("bad.sys", "vars: x\nf: x +\n")});
  EXPECT_EQ(parse.code, 2);

  const Result genericity = run_cli({"solve", "--tol-null", "1e-300", data_path("example_affine.sys")});
  EXPECT_EQ(genericity.code, 3) << genericity.err;

  const Result regularity = run_cli({"solve", dir.file("line.sys", "vars: x0 x1 x2\nmode: projective\nf: x0*x1\nf: x0*x2\n")});
  EXPECT_TRUE(regularity.code == 3 || regularity.code == 4) << regularity.err;

  const Result missing = run_cli({"solve", dir.file("missing.sys")});
  EXPECT_EQ(missing.code, 1);

  const Result usage = run_cli({"solve", "--output", "xml", data_path("example_affine.sys")});
  EXPECT_EQ(usage.code, 1);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Solve, MalformedInputNeverCrashes) {
  TempDir dir;
  for (const char* text : {"", "f: x\n", "vars:\n", "vars: x\nf: ((x)\n", "vars: x\nf: x^-\n", "vars: x\nf: 1e999*x\n",
                           "vars: x x\nf: x\n", "vars: x\nblocks: a\nf: x\n", "\x01\x02\n"}) {
    const Result r = run_cli({"solve", dir.file("m.sys", std::string(text) + " ")});
    EXPECT_NE(r.code, 0) << text;
  }
}

TEST(Bkk, Counts) {
  TempDir dir;
  EXPECT_EQ(run_cli({"bkk", data_path("sparse3.sys")}).out, "2352\n");
  const Result dense = run_cli({"bkk", dir.file("d.sys", "vars: x y\nf: x^2 + y^2 + x*y + 1\nf: x^3 + y^3 + x + y + 1\n")});
  EXPECT_EQ(dense.out, "6\n");
  const Result bilinear = run_cli({"bkk", dir.file("b.sys", "vars: x y\nf: 1 + x + y + x*y\nf: 2 - x + 3*y + x*y\n")});
  EXPECT_EQ(bilinear.out, "2\n");
}

TEST(Bench, DenseRow) {
  const Result r = run_cli({"bench", "--n", "2", "--d", "3", "--seed", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = read_csv(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"delta", "m1", "m2", "n2", "res", "delta_alg", "t_M", "t_N", "t_B",
                                               "t_S", "t_alg"}));
  EXPECT_EQ(rows[1][0], "9");
  EXPECT_EQ(rows[1][5], "9");
  EXPECT_LE(std::stod(rows[1][4]), 1e-8);
}

TEST(Bench, SizesMatchClosedForms) {
  for (auto [n, d] : {std::pair{1, 5}, {2, 3}, {3, 2}}) {
    const cli::BenchRow row = cli::bench_row(n, d, 3, 1e9);
    const int rho = n * d - n + 1;
    EXPECT_EQ(row.m2, binomial(rho + n, n));
    EXPECT_EQ(row.m1, n * binomial(rho - d + n, n));
    EXPECT_EQ(row.n2, row.delta);
    EXPECT_EQ(row.delta_alg, row.delta);
    EXPECT_NEAR(row.timings.t_alg, row.timings.t_M + row.timings.t_N + row.timings.t_B + row.timings.t_S, 1e-12);
  }
}

TEST(Bench, MemoryGuard) {
  const Result r = run_cli({"bench", "--n", "5", "--d", "20", "--max-memory-mb", "64"});
  EXPECT_EQ(r.code, 5);
  EXPECT_NE(r.err.find("out of memory guard"), std::string::npos);
}

TEST(DumpMatrix, AffineExampleMatchesPrintedMatrix) {
  TempDir dir;
  const std::string path = dir.file("m.csv");
  ASSERT_EQ(run_cli({"dump-matrix", data_path("example_affine.sys"), path}).code, 0);
  const std::string first = slurp(path);
  const auto rows = read_csv(first);
  ASSERT_EQ(rows.size(), 11u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"monomial", "(1, 1)", "(1, x1)", "(1, x2)", "(2, 1)", "(2, x1)",
                                               "(2, x2)"}));
  const double printed[6][10] = {{7, 3, -6, -4, 2, 5, 0, 0, 0, 0},  {0, 7, 0, 3, -6, 0, -4, 2, 5, 0},
                                 {0, 0, 7, 0, 3, -6, 0, -4, 2, 5},  {-1, -3, 14, -2, 2, -3, 0, 0, 0, 0},
                                 {0, -1, 0, -3, 14, 0, -2, 2, -3, 0}, {0, 0, -1, 0, -3, 14, 0, -2, 2, -3}};
  const std::vector<std::string> monomials{"1", "x1", "x2", "x1^2", "x1*x2", "x2^2", "x1^3", "x1^2*x2", "x1*x2^2", "x2^3"};
  for (int r = 0; r < 10; ++r) {
    EXPECT_EQ(rows[r + 1][0], monomials[r]);
    for (int c = 0; c < 6; ++c) EXPECT_EQ(parse_entry(rows[r + 1][c + 1]), Complex(printed[c][r])) << rows[r + 1][c + 1];
  }
  ASSERT_EQ(run_cli({"dump-matrix", data_path("example_affine.sys"), path}).code, 0);
  EXPECT_EQ(slurp(path), first);
}

TEST(DumpMatrix, UnivariateLinear) {
  TempDir dir;
  const std::string path = dir.file("m.csv");
  ASSERT_EQ(run_cli({"dump-matrix", dir.file("l.sys", "vars: x\nf: x - 3\n"), path}).code, 0);
  const auto rows = read_csv(slurp(path));
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(parse_entry(rows[1][1]), Complex(-3.0));
  EXPECT_EQ(parse_entry(rows[2][1]), Complex(1.0));
}

TEST(DumpMatrix, SolveFlagWritesTheSameFile) {
  TempDir dir;
  const std::string a = dir.file("a.csv");
  const std::string b = dir.file("b.csv");
  ASSERT_EQ(run_cli({"solve", "--dump-matrix", a, data_path("example_multihom.sys")}).code, 0);
  ASSERT_EQ(run_cli({"dump-matrix", data_path("example_multihom.sys"), b}).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
}

TEST(Regularity, Command) {
  const Result r = run_cli({"regularity", "--degree", "2", data_path("example_projective.sys")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["regular"].get<bool>());
  EXPECT_EQ(j["delta"], 2);
}

TEST(Report, ValidatorCatchesSchemaViolations) {
  const RootSet set = solve(cli::parse_system(slurp(data_path("example_affine.sys"))));
  nlohmann::json j = cli::to_json(set);
  EXPECT_TRUE(cli::validate_report(j).empty());
  const auto round = nlohmann::json::parse(j.dump());
  EXPECT_TRUE(cli::validate_report(round).empty());
  EXPECT_EQ(round["roots"][0]["coords"][0]["re"].get<double>(), set.roots[0].coords[0].real());

  auto broken = j;
  broken.erase("timings");
  EXPECT_FALSE(cli::validate_report(broken).empty());
  broken = j;
  broken["roots"][0]["multiplicity"] = 0;
  EXPECT_FALSE(cli::validate_report(broken).empty());
  broken = j;
  broken["delta"] = 5;
  EXPECT_FALSE(cli::validate_report(broken).empty());
}
