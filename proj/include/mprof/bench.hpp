#ifndef MPROF_BENCH_HPP
#define MPROF_BENCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mprof/profile.hpp"
#include "mprof/types.hpp"

namespace mprof {

struct BenchPlan {
  std::vector<Index> sizes;
  std::vector<Mode> modes;
  std::vector<int> workers;
  Index trials = 5;
  Index window = 100;
  std::uint64_t seed = 2018;
};

struct BenchRow {
  Mode mode;
  Index n = 0;
  int workers = 1;
  double median_seconds = 0.0;
  Index trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t workload_checksum = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;       // sorted by (algorithm, n, workers)
  std::vector<std::string> skipped; // invalid combinations with reasons
  std::string cpu;
  Index trials = 0;
};

// The seeded random-walk workload every cell consumes; byte-identical for a
// fixed (n, seed).
TimeSeries bench_workload(Index n, std::uint64_t seed);
std::uint64_t series_checksum(const TimeSeries &ts);

// Runs every (size, mode, workers) cell `trials` times on the same seeded
// series, after one untimed warm-up, and records the median wall time.
// Invalid combinations are skipped with a reported reason.
BenchReport run_bench(const BenchPlan &plan, const ProgressFn &progress = {});

std::string render_bench_table(const BenchReport &report);
std::string render_bench_csv(const BenchReport &report);

} // namespace mprof

#endif
