#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kalah/board.hpp"

namespace kalah {

/// Sequence of positions with a cursor. Undo and redo move the cursor;
/// pushing discards anything after the cursor.
class GameHistory {
 public:
  struct Entry {
    BoardState state;
    std::optional<int> pit;  // move that produced this state; empty for the first
  };

  explicit GameHistory(BoardState initial);

  const BoardState& current() const noexcept { return entries_[cursor_].state; }
  const BoardState& initial() const noexcept { return entries_.front().state; }
  std::size_t cursor() const noexcept { return cursor_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const Entry& operator[](std::size_t i) const { return entries_.at(i); }
  const std::vector<Entry>& entries() const noexcept { return entries_; }

  void push(int pit, BoardState next);

  bool can_undo() const noexcept { return cursor_ > 0; }
  bool can_redo() const noexcept { return cursor_ + 1 < entries_.size(); }

  // Both return false (and change nothing) at the boundary.
  bool undo() noexcept;
  bool redo() noexcept;

  /// Moves the cursor to an existing entry.
  void seek(std::size_t cursor);

 private:
  std::vector<Entry> entries_;
  std::size_t cursor_ = 0;
};

/// Nearest earlier entry where `seat` is to move, skipping the moves in
/// between; nullopt at the start. Used to undo a whole opponent reply chain.
std::optional<std::size_t> previous_turn_of(const GameHistory& history, Seat seat);

/// Nearest later entry where `seat` is to move, or the last entry.
std::optional<std::size_t> next_turn_of(const GameHistory& history, Seat seat);

/// Re-applies every recorded move from the first state and checks each
/// stored state is reproduced exactly.
bool replays_exactly(const GameHistory& history, const GameConfig& config = {});

}  // namespace kalah
