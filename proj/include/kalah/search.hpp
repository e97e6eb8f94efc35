#pragma once

#include <cstdint>
#include <optional>

#include "kalah/board.hpp"
#include "kalah/rules.hpp"
#include "kalah/tree_search.hpp"

namespace kalah::search {

inline constexpr int kDefaultCoefficient = 2;
inline constexpr int kMaxSearchDepth = 12;
inline constexpr int kLevelCount = 4;

/// Kalah adapter for TreeSearch. Children are generated in ascending pit order.
struct KalahTree {
  using State = BoardState;

  GameConfig config;
  int eval_scale = 1;

  int side_to_move(const State& s) const noexcept { return static_cast<int>(s.to_move()); }
  bool is_terminal(const State& s) const noexcept { return kalah::is_terminal(s); }
  int evaluate(const State& s, int root_side) const noexcept {
    const Seat root = static_cast<Seat>(root_side);
    return eval_scale * (s.kalah(root) - s.kalah(opposite(root)));
  }

  template <class Visitor>
  void for_each_child(const State& s, Visitor&& visit) const {
    for (int pit : legal_move_list(s)) {
      const MoveOutcome out = apply_move(s, pit, config);
      if (!visit(pit, out.state, out.extra_turn)) return;
    }
  }
};

struct SearchParams {
  int depth = 0;
  Algorithm algorithm = Algorithm::RestrictedAlphaBeta;
  std::optional<int> level;
  int coefficient = kDefaultCoefficient;

  /// Depth from level when given, after validating level and coefficient.
  int effective_depth() const;
};

struct SearchResult {
  std::optional<int> best_pit;
  int value = 0;
  std::uint64_t nodes_generated = 0;
  int depth = 0;
  SearchStats stats;
};

/// Kalah differential from root's point of view.
int evaluate(const BoardState& state, Seat root);

/// Throws ConfigError unless 1 <= level <= 4 and coefficient * 4 <= 12.
int depth_for_level(int level, int coefficient = kDefaultCoefficient);

SearchResult minimax_plain(const BoardState& state, int depth, Seat root,
                           const GameConfig& config = {}, const SearchObserver* observer = nullptr);

SearchResult minimax_restricted_ab(const BoardState& state, int depth, Seat root,
                                   const GameConfig& config = {},
                                   const SearchObserver* observer = nullptr);

SearchResult run_search(const BoardState& state, const SearchParams& params, Seat root,
                        const GameConfig& config = {}, const SearchObserver* observer = nullptr);

/// Restricted alpha-beta for the side to move at coefficient * level plies.
SearchResult best_move(const BoardState& state, int level, int coefficient = kDefaultCoefficient,
                       const GameConfig& config = {});

/// Sum of branching^i for i = 0..depth: the node count of a full tree.
std::uint64_t full_tree_nodes(int depth, int branching = 6);

}  // namespace kalah::search
