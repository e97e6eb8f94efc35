#include "kalah/search.hpp"

#include <string>

namespace kalah::search {

const char* algorithm_name(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::Plain: return "plain";
    case Algorithm::RestrictedAlphaBeta: return "restricted-ab";
    case Algorithm::ClassicAlphaBeta: return "classic-ab";
  }
  return "unknown";
}

int SearchParams::effective_depth() const {
  if (level) return depth_for_level(*level, coefficient);
  if (depth < 0) throw ConfigError("search depth must be non-negative");
  return depth;
}

int evaluate(const BoardState& state, Seat root) {
  return state.kalah(root) - state.kalah(opposite(root));
}

int depth_for_level(int level, int coefficient) {
  if (level < 1 || level > kLevelCount) {
    throw ConfigError("level must be in 1..4, got " + std::to_string(level));
  }
  if (coefficient < 1 || coefficient * kLevelCount > kMaxSearchDepth) {
    throw ConfigError("coefficient must be in 1..3, got " + std::to_string(coefficient));
  }
  return coefficient * level;
}

SearchResult run_search(const BoardState& state, const SearchParams& params, Seat root,
                        const GameConfig& config, const SearchObserver* observer) {
  const int depth = params.effective_depth();
  const KalahTree tree{config};
  TreeSearch<KalahTree> search(tree, params.algorithm, observer);
  const TreeResult r = search.run(state, depth, static_cast<int>(root));
  return SearchResult{r.best_move, r.value, r.stats.nodes_generated, depth, r.stats};
}

SearchResult minimax_plain(const BoardState& state, int depth, Seat root, const GameConfig& config,
                           const SearchObserver* observer) {
  SearchParams params;
  params.depth = depth;
  params.algorithm = Algorithm::Plain;
  return run_search(state, params, root, config, observer);
}

SearchResult minimax_restricted_ab(const BoardState& state, int depth, Seat root,
                                   const GameConfig& config, const SearchObserver* observer) {
  SearchParams params;
  params.depth = depth;
  params.algorithm = Algorithm::RestrictedAlphaBeta;
  return run_search(state, params, root, config, observer);
}

SearchResult best_move(const BoardState& state, int level, int coefficient,
                       const GameConfig& config) {
  return minimax_restricted_ab(state, depth_for_level(level, coefficient), state.to_move(),
                               config);
}

std::uint64_t full_tree_nodes(int depth, int branching) {
  std::uint64_t total = 0;
  std::uint64_t layer = 1;
  for (int i = 0; i <= depth; ++i) {
    total += layer;
    layer *= static_cast<std::uint64_t>(branching);
  }
  return total;
}

}  // namespace kalah::search
