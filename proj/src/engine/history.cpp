#include "kalah/history.hpp"

#include <stdexcept>

#include "kalah/rules.hpp"

namespace kalah {

GameHistory::GameHistory(BoardState initial) { entries_.push_back({std::move(initial), {}}); }

void GameHistory::push(int pit, BoardState next) {
  entries_.resize(cursor_ + 1);
  entries_.push_back({std::move(next), pit});
  ++cursor_;
}

bool GameHistory::undo() noexcept {
  if (!can_undo()) return false;
  --cursor_;
  return true;
}

bool GameHistory::redo() noexcept {
  if (!can_redo()) return false;
  ++cursor_;
  return true;
}

void GameHistory::seek(std::size_t cursor) {
  if (cursor >= entries_.size()) throw std::out_of_range("history cursor out of range");
  cursor_ = cursor;
}

std::optional<std::size_t> previous_turn_of(const GameHistory& history, Seat seat) {
  std::size_t at = history.cursor();
  if (at == 0) return std::nullopt;
  --at;
  while (at > 0 && history[at].state.to_move() != seat) --at;
  return at;
}

std::optional<std::size_t> next_turn_of(const GameHistory& history, Seat seat) {
  std::size_t at = history.cursor();
  if (at + 1 >= history.size()) return std::nullopt;
  ++at;
  while (at + 1 < history.size() && history[at].state.to_move() != seat) ++at;
  return at;
}

bool replays_exactly(const GameHistory& history, const GameConfig& config) {
  BoardState board = history.initial();
  for (std::size_t i = 1; i < history.size(); ++i) {
    const auto& entry = history[i];
    if (!entry.pit || !is_legal(board, *entry.pit)) return false;
    board = apply_move(board, *entry.pit, config).state;
    if (!(board == entry.state)) return false;
  }
  return true;
}

}  // namespace kalah
