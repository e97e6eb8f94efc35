#pragma once

// Shared pieces of the interactive `play` subcommand.

#include <iosfwd>
#include <optional>
#include <string>

#include "kalah/board.hpp"
#include "kalah/rules.hpp"

namespace kalah::cli {

struct PlayOptions {
  std::string mode;  // hvh | hvc | cvc | net-host | net-join
  int level = 1;
  int coefficient = 2;
  std::optional<std::string> position;
  std::string listen = "127.0.0.1:7777";
  std::optional<std::string> connect;
  std::optional<std::string> session;
};

int play_local(const PlayOptions& options, std::istream& in, std::ostream& out, std::ostream& err);
int play_net(const PlayOptions& options, std::istream& in, std::ostream& out, std::ostream& err);

// What the person at the prompt typed.
struct Input {
  enum Kind { Pit, Undo, Redo, Hint, Quit, Unknown, Eof } kind = Unknown;
  int pit = -1;  // 0-based sowing index when kind == Pit
  std::string text;
};

Input read_input(std::istream& in, std::ostream& out, Seat seat, int pits_per_side);

std::string describe_move(Seat mover, int pit, int sown, int captured, bool extra_turn);
std::string describe_result(const BoardState& final_state, Verdict verdict);

}  // namespace kalah::cli
