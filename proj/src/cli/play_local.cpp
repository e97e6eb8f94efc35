// hvh, hvc and cvc on one machine, driven entirely by the engine and search.

#include <array>
#include <istream>
#include <ostream>

#include <fmt/format.h>

#include "kalah/board_text.hpp"
#include "kalah/history.hpp"
#include "kalah/search.hpp"
#include "play.hpp"

namespace kalah::cli {

int play_local(const PlayOptions& opts, std::istream& in, std::ostream& out, std::ostream&) {
  const GameConfig config;
  const BoardState start =
      opts.position ? decode_board(*opts.position, config.pits_per_side) : initial_board(config);
  const int depth = search::depth_for_level(opts.level, opts.coefficient);

  std::array<bool, 2> ai{false, false};  // indexed by seat
  if (opts.mode == "hvc") {
    ai[index(Seat::North)] = true;
    out << fmt::format("You are South. North is the computer at level {} (depth {}).\n",
                       opts.level, depth);
  } else if (opts.mode == "cvc") {
    ai = {true, true};
    out << fmt::format("Computer against computer at level {} (depth {}).\n", opts.level, depth);
  } else {
    out << "Two players on this machine. Pits are numbered 1-" << config.pits_per_side
        << " from each player's left.\n";
  }

  GameHistory history(start);
  out << render_board(start) << '\n';

  while (!is_terminal(history.current())) {
    const BoardState current = history.current();
    const Seat seat = current.to_move();
    int pit = -1;

    if (ai[index(seat)]) {
      const auto r = search::best_move(current, opts.level, opts.coefficient, config);
      pit = *r.best_pit;
      out << fmt::format("{} searched depth {}: {} nodes, value {:+}.\n", seat_name(seat), r.depth,
                         r.nodes_generated, r.value);
    } else {
      const Input input = read_input(in, out, seat, config.pits_per_side);
      switch (input.kind) {
        case Input::Eof:
        case Input::Quit:
          out << "Game abandoned.\n";
          return 0;
        case Input::Hint: {
          const auto r = search::best_move(current, opts.level, opts.coefficient, config);
          out << fmt::format("Hint: pit {} (value {:+}, {} nodes at depth {}).\n",
                             *r.best_pit + 1, r.value, r.nodes_generated, r.depth);
          continue;
        }
        case Input::Undo:
        case Input::Redo: {
          const bool undo = input.kind == Input::Undo;
          if (opts.mode == "hvc") {
            // Take back the computer's replies too, back to the human's turn.
            const auto at = undo ? previous_turn_of(history, Seat::South)
                                 : next_turn_of(history, Seat::South);
            if (at) history.seek(*at);
            if (!at) {
              out << (undo ? "nothing to undo\n" : "nothing to redo\n");
              continue;
            }
          } else if (!(undo ? history.undo() : history.redo())) {
            out << (undo ? "nothing to undo\n" : "nothing to redo\n");
            continue;
          }
          out << (undo ? "Undone.\n" : "Redone.\n") << render_board(history.current()) << '\n';
          continue;
        }
        case Input::Unknown:
          out << fmt::format("unknown input '{}': enter a pit 1-{}, hint, undo, redo or quit\n",
                             input.text, config.pits_per_side);
          continue;
        case Input::Pit:
          if (!is_legal(current, input.pit)) {
            out << fmt::format("illegal move: pit {} is {}\n", input.pit + 1,
                               input.pit < 0 || input.pit >= config.pits_per_side
                                   ? "out of range"
                                   : "empty");
            continue;
          }
          pit = input.pit;
          break;
      }
    }

    const int sown = current.pits(seat)[static_cast<std::size_t>(pit)];
    const MoveOutcome outcome = apply_move(current, pit, config);
    history.push(pit, outcome.state);
    out << describe_move(seat, pit, sown, outcome.captured, outcome.extra_turn) << '\n'
        << render_board(history.current()) << '\n';
  }

  out << describe_result(history.current(), winner(history.current())) << '\n';
  return 0;
}

}  // namespace kalah::cli
