#include "play.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>

#include <fmt/format.h>

namespace kalah::cli {

namespace {

std::string trimmed_lower(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

}  // namespace

Input read_input(std::istream& in, std::ostream& out, Seat seat, int pits_per_side) {
  out << fmt::format("{} [pit 1-{}, hint, undo, redo, quit]> ", seat_name(seat), pits_per_side)
      << std::flush;
  std::string line;
  if (!std::getline(in, line)) {
    out << '\n';
    return {Input::Eof, -1, {}};
  }
  Input input;
  input.text = trimmed_lower(line);
  const std::string& t = input.text;
  if (t == "undo") {
    input.kind = Input::Undo;
  } else if (t == "redo") {
    input.kind = Input::Redo;
  } else if (t == "hint") {
    input.kind = Input::Hint;
  } else if (t == "quit" || t == "exit") {
    input.kind = Input::Quit;
  } else {
    int k = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), k);
    if (!t.empty() && ec == std::errc() && ptr == t.data() + t.size()) {
      // Pits are numbered 1..n from the player's own left, which is sowing order.
      input.kind = Input::Pit;
      input.pit = k - 1;
    }
  }
  return input;
}

std::string describe_move(Seat mover, int pit, int sown, int captured, bool extra_turn) {
  std::string s = fmt::format("{} plays pit {} ({} seed{}).", seat_name(mover), pit + 1, sown,
                              sown == 1 ? "" : "s");
  if (captured > 0) s += fmt::format(" Captures {}.", captured);
  if (extra_turn) s += fmt::format(" Last seed in the kalah: {} plays again.", seat_name(mover));
  return s;
}

std::string describe_result(const BoardState& s, Verdict verdict) {
  const std::string score =
      fmt::format("South {}, North {}", s.kalah(Seat::South), s.kalah(Seat::North));
  switch (verdict) {
    case Verdict::South: return fmt::format("Game over: {}. South wins.", score);
    case Verdict::North: return fmt::format("Game over: {}. North wins.", score);
    case Verdict::Draw: return fmt::format("Game over: {}. Draw.", score);
    case Verdict::Undecided: break;
  }
  return fmt::format("Game stopped: {}.", score);
}

}  // namespace kalah::cli
