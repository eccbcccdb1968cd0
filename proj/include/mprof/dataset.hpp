#ifndef MPROF_DATASET_HPP
#define MPROF_DATASET_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mprof/types.hpp"

namespace mprof {

struct Dataset {
  std::string name;
  MultiTimeSeries series;
  std::string source;               // file path or generator spec
  std::vector<Index> ground_truth;  // known change points / planted positions
};

enum class TextFormat { csv, tsv };

struct ReadOptions {
  TextFormat format = TextFormat::csv;
  bool header = false;
  std::vector<Index> columns; // 0-based selection; empty -> all columns
};

// One column -> univariate dataset; several -> one dimension per column.
// Non-numeric, non-finite or ragged cells raise IoError naming row/column.
Dataset read_series(const std::string &path, const ReadOptions &opts = {});

// Full-precision text round-trip counterpart of read_series.
void write_series(const MultiTimeSeries &series, const std::string &path,
                  TextFormat format = TextFormat::csv);

// Name of the deterministic generator behind every synthetic dataset.
inline constexpr const char *kRngName = "mt19937_64";

// Cumulative sum of +-1 steps from a seeded mt19937_64 stream.
TimeSeries gen_random_walk(Index n, std::uint64_t seed);

// Cumulative sum of explicit +-1 steps (the testable core of the walk).
std::vector<double> walk_from_steps(const std::vector<int> &steps);

enum class PlantKind { motif, regime_change, chain, anomaly };

struct PlantParams {
  Index n = 4000;
  Index pattern_len = 80;
  Index copies = 2;           // motif: planted copies; chain: repetitions
  double noise = 0.1;         // background noise level
  double jitter = 0.0;        // per-copy perturbation of the planted pattern
  double drift = 0.35;        // chain: shape morph per repetition
  double change_frac = 0.5;   // regime_change: boundary position fraction
  double spike_amp = 8.0;     // anomaly: injected spike amplitude
  Index dims = 1;
  std::vector<Index> pattern_dims; // dims receiving the pattern; empty -> all
};

// Deterministic synthetic series with recorded ground-truth positions.
Dataset gen_planted(PlantKind kind, const PlantParams &params, std::uint64_t seed);

} // namespace mprof

#endif
