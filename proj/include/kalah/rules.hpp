#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "kalah/board.hpp"

namespace kalah {

struct MoveOutcome {
  BoardState state;
  bool extra_turn = false;
  int captured = 0;
  bool terminal = false;
};

enum class Verdict { South, North, Draw, Undecided };

const char* verdict_name(Verdict v) noexcept;

/// Fixed-capacity list of legal pits, ascending.
class MoveList {
 public:
  void push_back(int pit) noexcept { pits_[size_++] = pit; }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  int operator[](std::size_t i) const noexcept { return pits_[i]; }
  const int* begin() const noexcept { return pits_.data(); }
  const int* end() const noexcept { return pits_.data() + size_; }

 private:
  std::array<int, kMaxPitsPerSide> pits_{};
  std::size_t size_ = 0;
};

BoardState initial_board(const GameConfig& config = {});

MoveList legal_move_list(const BoardState& state) noexcept;
std::vector<int> legal_moves(const BoardState& state);

bool is_legal(const BoardState& state, int pit) noexcept;

/// Sows the chosen pit for the side to move and resolves capture, extra turn
/// and the end-of-game sweep. Only config.capture_requires_opposite_nonempty
/// is consulted. Throws MoveError for an empty or out-of-range pit.
///
/// When the game ends, extra_turn is reported false and to_move is the
/// mover's opponent.
MoveOutcome apply_move(const BoardState& state, int pit, const GameConfig& config = {});

bool is_terminal(const BoardState& state) noexcept;

/// A seat holding more than half of all seeds wins even before the game ends.
Verdict winner(const BoardState& state) noexcept;

}  // namespace kalah
