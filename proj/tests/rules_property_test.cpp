// Randomised checks of the rules invariants over long runs of legal moves.

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "kalah/board_text.hpp"
#include "kalah/history.hpp"
#include "kalah/rules.hpp"
#include "support/sowing_oracle.hpp"

using namespace kalah;

namespace {

std::vector<int> flat(const BoardState& b) {
  std::vector<int> slots(b.pits(Seat::South).begin(), b.pits(Seat::South).end());
  slots.push_back(b.kalah(Seat::South));
  for (int v : b.pits(Seat::North)) slots.push_back(v);
  slots.push_back(b.kalah(Seat::North));
  return slots;
}

BoardState random_state(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pits(1, 8);
  std::uniform_int_distribution<int> seeds(0, 15);
  BoardState b(pits(rng));
  for (Seat s : {Seat::South, Seat::North}) {
    for (int& v : b.pits(s)) v = seeds(rng);
    b.kalah(s) = seeds(rng) * 3;
  }
  b.set_to_move(rng() % 2 ? Seat::South : Seat::North);
  return b;
}

}  // namespace

TEST(RulesProperty, InvariantsOverRandomGames) {
  std::mt19937_64 rng(20240611);
  const GameConfig config;
  const int total = config.total_seeds();
  int moves_checked = 0;
  int captures = 0;
  int extra_turns = 0;

  while (moves_checked < 12000) {
    BoardState board = initial_board(config);
    while (!is_terminal(board)) {
      const auto moves = legal_moves(board);
      const int pit = moves[rng() % moves.size()];
      const Seat mover = board.to_move();
      const int seeds = board.pits(mover)[pit];
      const int their_store_before = board.kalah(opposite(mover));

      const auto expected = oracle::sow_flat(flat(board), 6, mover == Seat::South, pit);
      const MoveOutcome out = apply_move(board, pit, config);
      ++moves_checked;

      ASSERT_EQ(out.state.total_seeds(), total);
      for (Seat s : {Seat::South, Seat::North}) {
        for (int v : out.state.pits(s)) ASSERT_GE(v, 0);
      }

      if (!out.terminal) {
        // Sowing never feeds the opponent's store.
        ASSERT_EQ(out.state.kalah(opposite(mover)), their_store_before);
        ASSERT_EQ(flat(out.state), expected.slots);
        ASSERT_EQ(out.extra_turn, expected.last_in_own_store);
      }

      ASSERT_EQ(out.captured, expected.captured);
      if (out.captured > 0) {
        ++captures;
        ASSERT_TRUE(expected.landed_in_empty_own_pit);
        ASSERT_EQ(out.captured, 1 + expected.opposite_before);
        ASSERT_GE(out.captured, 2);
      }

      if (seeds <= 6 - pit && !out.terminal) {
        ASSERT_EQ(out.extra_turn, seeds == 6 - pit);
      }
      if (out.extra_turn) ++extra_turns;
      ASSERT_FALSE(out.extra_turn && out.terminal);
      ASSERT_EQ(out.state.to_move(), out.extra_turn ? mover : opposite(mover));

      if (out.terminal) {
        ASSERT_TRUE(is_terminal(out.state));
        ASSERT_EQ(out.state.side_seeds(Seat::South), 0);
        ASSERT_EQ(out.state.side_seeds(Seat::North), 0);
        ASSERT_EQ(out.state.kalah(Seat::South) + out.state.kalah(Seat::North), total);
        ASSERT_NE(winner(out.state), Verdict::Undecided);
      }
      board = out.state;
    }
  }
  EXPECT_GT(captures, 0);
  EXPECT_GT(extra_turns, 0);
}

TEST(RulesProperty, HistoryReplaysRandomGames) {
  std::mt19937_64 rng(7);
  for (int game = 0; game < 50; ++game) {
    GameHistory history(initial_board());
    while (!is_terminal(history.current())) {
      const auto moves = legal_moves(history.current());
      const int pit = moves[rng() % moves.size()];
      history.push(pit, apply_move(history.current(), pit).state);
      if (rng() % 7 == 0) history.undo();
    }
    ASSERT_TRUE(replays_exactly(history));
  }
}

TEST(RulesProperty, BoardTextRoundTrip) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 2000; ++i) {
    const BoardState b = random_state(rng);
    ASSERT_EQ(decode_board(encode_board(b)), b) << encode_board(b);
  }
}
