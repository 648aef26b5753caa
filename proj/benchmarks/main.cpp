#include <benchmark/benchmark.h>

// The distro's libbenchmark_main.a ships LTO bytecode from another GCC
// release, so the entry point is compiled here instead.
BENCHMARK_MAIN();
