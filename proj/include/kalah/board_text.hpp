#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "kalah/board.hpp"

namespace kalah {

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::string field, const std::string& what)
      : std::invalid_argument(what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// Format: "p0,..,pn/K/q0,..,qn/L S" with South pits, South kalah, North pits,
// North kalah and the side to move.
std::string encode_board(const BoardState& state);

/// expected_pits <= 0 accepts any row length up to kMaxPitsPerSide.
BoardState decode_board(std::string_view text, int expected_pits = 0);

/// Multi-line drawing for terminals. North's row is printed right to left
/// above South's so the sowing direction reads counterclockwise. The last
/// line is "position: <encoded board>" followed by the side to move in words.
std::string render_board(const BoardState& state);

}  // namespace kalah
