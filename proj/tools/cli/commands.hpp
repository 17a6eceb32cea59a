#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "mroot/roots.hpp"

namespace mroot::cli {

// Runs the command line tool; returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// One row of the dense benchmark table.
struct BenchRow {
  int delta = 0;
  long m1 = 0;  // polynomial multiples (columns of M)
  long m2 = 0;  // monomials (rows of M, columns of N)
  long n2 = 0;  // null space dimension
  double res = 0.0;
  int delta_alg = 0;
  Timings timings;
};

// Solves a random dense system of n equations of degree d. Throws
// kResource when the Macaulay matrix would exceed max_bytes.
BenchRow bench_row(int n, int d, std::uint64_t seed, double max_bytes);

std::string bench_header();
std::string format_bench_row(const BenchRow& row);

}  // namespace mroot::cli
