#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "kalah/board.hpp"

namespace kalah::bench {

struct BenchConfig {
  std::vector<int> depths{2, 4, 6, 8};
  int samples = 100;
  std::uint64_t rng_seed = 1;
  int playout_min = 0;
  int playout_max = 12;
  GameConfig game;

  /// Throws ConfigError on an empty depth list, depth < 1, samples < 1 or a bad playout range.
  void validate() const;
};

struct SampleRow {
  int depth = 0;
  int sample = 0;
  std::uint64_t nodes = 0;
  std::uint64_t baseline = 0;
  double percentage() const { return static_cast<double>(nodes) / static_cast<double>(baseline); }
};

struct DepthSummary {
  int depth = 0;
  std::uint64_t baseline = 0;
  double mean_nodes = 0.0;
  double percentage = 0.0;
};

struct BenchReport {
  std::vector<SampleRow> rows;  // ordered by depth (as configured), then sample
  std::vector<DepthSummary> summary;
};

/// Random playouts from the initial board, seeded by rng_seed. Playouts that
/// end the game are drawn again, so no returned state is terminal.
std::vector<BoardState> sample_states(const BenchConfig& config);

/// Restricted alpha-beta node counts per (depth, sample), spread over OpenMP threads.
BenchReport run_bench(const BenchConfig& config);

/// Single-threaded reference for run_bench.
BenchReport run_bench_serial(const BenchConfig& config);

/// Header, one row per sample, then a MEAN row after each depth's samples.
void write_csv(const BenchReport& report, std::ostream& out);

}  // namespace kalah::bench
