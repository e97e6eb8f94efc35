#include "kalah/rules.hpp"

#include <algorithm>
#include <string>

namespace kalah {

const char* verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::South: return "South";
    case Verdict::North: return "North";
    case Verdict::Draw: return "draw";
    case Verdict::Undecided: return "undecided";
  }
  return "undecided";
}

BoardState initial_board(const GameConfig& config) {
  config.validate();
  BoardState board(config.pits_per_side);
  for (Seat s : {Seat::South, Seat::North}) {
    auto row = board.pits(s);
    std::fill(row.begin(), row.end(), config.seeds_per_pit);
  }
  board.set_to_move(Seat::South);
  return board;
}

MoveList legal_move_list(const BoardState& state) noexcept {
  MoveList moves;
  const auto row = state.pits(state.to_move());
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] > 0) moves.push_back(static_cast<int>(i));
  }
  return moves;
}

std::vector<int> legal_moves(const BoardState& state) {
  const MoveList list = legal_move_list(state);
  return {list.begin(), list.end()};
}

bool is_legal(const BoardState& state, int pit) noexcept {
  return pit >= 0 && pit < state.pits_per_side() && state.pits(state.to_move())[pit] > 0;
}

MoveOutcome apply_move(const BoardState& state, int pit, const GameConfig& config) {
  if (!is_legal(state, pit)) {
    throw MoveError("illegal move: pit " + std::to_string(pit) + " for " +
                    seat_name(state.to_move()));
  }

  MoveOutcome out{state};
  BoardState& board = out.state;
  const Seat mover = state.to_move();
  const Seat other = opposite(mover);
  const int n = board.pits_per_side();
  auto own = board.pits(mover);
  auto theirs = board.pits(other);

  // Ring positions: 0..n-1 own pits, n own kalah, n+1..2n opponent pits.
  const int ring = 2 * n + 1;
  int seeds = own[pit];
  own[pit] = 0;
  int pos = pit;
  while (seeds > 0) {
    pos = (pos + 1) % ring;
    if (pos < n) {
      ++own[pos];
    } else if (pos == n) {
      ++board.kalah(mover);
    } else {
      ++theirs[pos - n - 1];
    }
    --seeds;
  }

  if (pos == n) {
    out.extra_turn = true;
  } else if (pos < n && own[pos] == 1) {
    int& facing = theirs[n - 1 - pos];
    if (facing > 0 || !config.capture_requires_opposite_nonempty) {
      out.captured = 1 + facing;
      board.kalah(mover) += out.captured;
      facing = 0;
      own[pos] = 0;
    }
  }

  const Seat next = out.extra_turn ? mover : other;
  board.set_to_move(next);

  if (board.side_seeds(next) == 0) {
    const Seat sweeper = opposite(next);
    auto row = board.pits(sweeper);
    for (int& seeds_left : row) {
      board.kalah(sweeper) += seeds_left;
      seeds_left = 0;
    }
    out.terminal = true;
    out.extra_turn = false;
    board.set_to_move(other);
  }
  return out;
}

bool is_terminal(const BoardState& state) noexcept {
  return state.side_seeds(state.to_move()) == 0;
}

Verdict winner(const BoardState& state) noexcept {
  const int total = state.total_seeds();
  const int south = state.kalah(Seat::South);
  const int north = state.kalah(Seat::North);
  if (2 * south > total) return Verdict::South;
  if (2 * north > total) return Verdict::North;
  if (!is_terminal(state)) return Verdict::Undecided;
  if (south == north) return Verdict::Draw;
  return south > north ? Verdict::South : Verdict::North;
}

}  // namespace kalah
