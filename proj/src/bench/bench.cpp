#include "kalah/bench.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <ostream>
#include <random>
#include <string>

#include "kalah/rules.hpp"
#include "kalah/search.hpp"

namespace kalah::bench {

void BenchConfig::validate() const {
  game.validate();
  if (depths.empty()) throw ConfigError("bench needs at least one depth");
  for (int d : depths) {
    if (d < 1) throw ConfigError("bench depths must be >= 1, got " + std::to_string(d));
  }
  if (samples < 1) throw ConfigError("samples must be >= 1");
  if (playout_min < 0 || playout_max < playout_min) {
    throw ConfigError(fmt::format("bad playout range {}..{}", playout_min, playout_max));
  }
}

std::vector<BoardState> sample_states(const BenchConfig& config) {
  config.validate();
  std::mt19937_64 rng(config.rng_seed);
  std::uniform_int_distribution<int> length(config.playout_min, config.playout_max);

  std::vector<BoardState> states;
  states.reserve(static_cast<std::size_t>(config.samples));
  const BoardState start = initial_board(config.game);
  while (static_cast<int>(states.size()) < config.samples) {
    BoardState board = start;
    const int moves = length(rng);
    for (int i = 0; i < moves && !is_terminal(board); ++i) {
      const MoveList legal = legal_move_list(board);
      std::uniform_int_distribution<std::size_t> pick(0, legal.size() - 1);
      board = apply_move(board, legal[pick(rng)], config.game).state;
    }
    if (!is_terminal(board)) states.push_back(board);
  }
  return states;
}

namespace {

BenchReport summarise(const BenchConfig& config, std::vector<SampleRow> rows) {
  BenchReport report;
  const std::size_t per_depth = static_cast<std::size_t>(config.samples);
  for (std::size_t d = 0; d < config.depths.size(); ++d) {
    DepthSummary s;
    s.depth = config.depths[d];
    s.baseline = search::full_tree_nodes(s.depth);
    double total = 0.0;
    for (std::size_t i = 0; i < per_depth; ++i) total += static_cast<double>(rows[d * per_depth + i].nodes);
    s.mean_nodes = total / static_cast<double>(per_depth);
    s.percentage = s.mean_nodes / static_cast<double>(s.baseline);
    report.summary.push_back(s);
  }
  report.rows = std::move(rows);
  return report;
}

SampleRow measure(const BenchConfig& config, const BoardState& state, int depth, int sample) {
  const auto r = search::minimax_restricted_ab(state, depth, state.to_move(), config.game);
  return SampleRow{depth, sample, r.nodes_generated, search::full_tree_nodes(depth)};
}

}  // namespace

BenchReport run_bench_serial(const BenchConfig& config) {
  const auto states = sample_states(config);
  std::vector<SampleRow> rows;
  rows.reserve(config.depths.size() * states.size());
  for (int depth : config.depths) {
    for (std::size_t i = 0; i < states.size(); ++i) {
      rows.push_back(measure(config, states[i], depth, static_cast<int>(i)));
    }
  }
  return summarise(config, std::move(rows));
}

BenchReport run_bench(const BenchConfig& config) {
  const auto states = sample_states(config);
  const long n_samples = static_cast<long>(states.size());
  const long n_jobs = static_cast<long>(config.depths.size()) * n_samples;
  std::vector<SampleRow> rows(static_cast<std::size_t>(n_jobs));

  // Each job writes its own slot, so the report does not depend on scheduling.
  #pragma omp parallel for schedule(dynamic, 1)
  for (long job = 0; job < n_jobs; ++job) {
    const auto d = static_cast<std::size_t>(job / n_samples);
    const auto i = static_cast<std::size_t>(job % n_samples);
    rows[static_cast<std::size_t>(job)] =
        measure(config, states[i], config.depths[d], static_cast<int>(i));
  }
  return summarise(config, std::move(rows));
}

void write_csv(const BenchReport& report, std::ostream& out) {
  out << "depth,sample,nodes,baseline,percentage\n";
  if (report.summary.empty()) return;
  const std::size_t per_depth = report.rows.size() / report.summary.size();
  std::size_t row = 0;
  for (const DepthSummary& s : report.summary) {
    for (const std::size_t end = row + per_depth; row < end; ++row) {
      const SampleRow& r = report.rows[row];
      fmt::print(out, "{},{},{},{},{:.4f}\n", r.depth, r.sample, r.nodes, r.baseline,
                 r.percentage());
    }
    fmt::print(out, "{},MEAN,{:.4f},{},{:.4f}\n", s.depth, s.mean_nodes, s.baseline,
               s.percentage);
  }
}

}  // namespace kalah::bench
