#include <benchmark/benchmark.h>

// The distro's libbenchmark_main.a is LTO bytecode tied to a specific gcc,
// so the entry point lives here.
BENCHMARK_MAIN();
