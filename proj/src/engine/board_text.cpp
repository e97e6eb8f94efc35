#include "kalah/board_text.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace kalah {
namespace {

void append_row(std::string& out, std::span<const int> row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(row[i]);
  }
}

int parse_count(std::string_view text, const std::string& field) {
  int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last || value < 0) {
    throw ParseError(field, "bad " + field + ": '" + std::string(text) + "'");
  }
  return value;
}

std::vector<int> parse_row(std::string_view text, const std::string& field) {
  std::vector<int> row;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    row.push_back(parse_count(text.substr(start, comma - start), field));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return row;
}

}  // namespace

std::string encode_board(const BoardState& state) {
  std::string out;
  append_row(out, state.pits(Seat::South));
  out += '/';
  out += std::to_string(state.kalah(Seat::South));
  out += '/';
  append_row(out, state.pits(Seat::North));
  out += '/';
  out += std::to_string(state.kalah(Seat::North));
  out += ' ';
  out += seat_letter(state.to_move());
  return out;
}

BoardState decode_board(std::string_view text, int expected_pits) {
  const auto space = text.find(' ');
  if (space == std::string_view::npos) {
    throw ParseError("side to move", "missing side to move in '" + std::string(text) + "'");
  }
  const std::string_view side = text.substr(space + 1);
  if (side != "S" && side != "N") {
    throw ParseError("side to move", "side to move must be S or N, got '" + std::string(side) + "'");
  }

  std::vector<std::string_view> fields;
  std::string_view body = text.substr(0, space);
  std::size_t start = 0;
  while (true) {
    const auto slash = body.find('/', start);
    fields.push_back(body.substr(start, slash - start));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  if (fields.size() != 4) {
    throw ParseError("layout", "expected 4 '/'-separated fields, got " +
                                   std::to_string(fields.size()));
  }

  const auto south = parse_row(fields[0], "south pits");
  const int south_kalah = parse_count(fields[1], "south kalah");
  const auto north = parse_row(fields[2], "north pits");
  const int north_kalah = parse_count(fields[3], "north kalah");

  if (south.size() > static_cast<std::size_t>(kMaxPitsPerSide)) {
    throw ParseError("south pits", "too many pits: " + std::to_string(south.size()));
  }
  if (north.size() != south.size()) {
    throw ParseError("north pits", "north has " + std::to_string(north.size()) +
                                       " pits, south has " + std::to_string(south.size()));
  }
  if (expected_pits > 0 && south.size() != static_cast<std::size_t>(expected_pits)) {
    throw ParseError("south pits", "expected " + std::to_string(expected_pits) + " pits, got " +
                                       std::to_string(south.size()));
  }

  BoardState board(static_cast<int>(south.size()));
  std::copy(south.begin(), south.end(), board.pits(Seat::South).begin());
  std::copy(north.begin(), north.end(), board.pits(Seat::North).begin());
  board.kalah(Seat::South) = south_kalah;
  board.kalah(Seat::North) = north_kalah;
  board.set_to_move(side == "S" ? Seat::South : Seat::North);
  return board;
}

std::string render_board(const BoardState& state) {
  const int n = state.pits_per_side();
  std::ostringstream out;
  auto cell = [](int v) {
    std::string s = std::to_string(v);
    return std::string(s.size() < 3 ? 3 - s.size() : 0, ' ') + s;
  };

  // North sits opposite, so its pit n-1 is leftmost from South's view; the
  // labels give the 1-based number each player types for that pit.
  out << "      ";
  for (int i = n - 1; i >= 0; --i) out << ' ' << cell(i + 1) << ' ';
  out << "   North\n";
  out << "      ";
  for (int i = n - 1; i >= 0; --i) out << '[' << cell(state.pits(Seat::North)[i]) << ']';
  out << '\n';
  out << ' ' << '[' << cell(state.kalah(Seat::North)) << ']'
      << std::string(static_cast<std::size_t>(5 * n), ' ') << ' ' << '['
      << cell(state.kalah(Seat::South)) << ']' << '\n';
  out << "      ";
  for (int i = 0; i < n; ++i) out << '[' << cell(state.pits(Seat::South)[i]) << ']';
  out << '\n';
  out << "      ";
  for (int i = 0; i < n; ++i) out << ' ' << cell(i + 1) << ' ';
  out << "   South\n";
  out << "position: " << encode_board(state) << "  (" << seat_name(state.to_move())
      << " to move)\n";
  return out.str();
}

}  // namespace kalah
