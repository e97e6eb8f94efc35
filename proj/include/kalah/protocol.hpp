#pragma once

// Wire protocol shared by the stream and WebSocket transports: one JSON
// object per line (or per WebSocket text frame) discriminated by "type".
//
//   client -> server: create {mode, level?, coefficient?, config?}
//                     join {session_id}  move {pit}  hint {level?}  undo  redo
//   server -> client: created {session_id, seat}  joined {seat}
//                     state {board, extra_turn, captured, terminal, winner?, last?}
//                     hint_result {pit, value, nodes}  error {code, message}
//
// Seats are "S" / "N"; pits are 0-based in sowing order; board uses the
// engine's text format.

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "kalah/board.hpp"
#include "kalah/rules.hpp"

namespace kalah::net {

using json = nlohmann::json;

enum class Mode { HumanVsHumanNet, HumanVsComputer, ComputerVsComputer };

std::optional<Mode> parse_mode(std::string_view text) noexcept;
const char* mode_name(Mode m) noexcept;

namespace error_code {
inline constexpr const char* kBadRequest = "bad_request";
inline constexpr const char* kNotFound = "not_found";
inline constexpr const char* kNoSession = "no_session";
inline constexpr const char* kAlreadyInSession = "already_in_session";
inline constexpr const char* kSessionFull = "session_full";
inline constexpr const char* kNotActive = "not_active";
inline constexpr const char* kSuspended = "suspended";
inline constexpr const char* kOutOfTurn = "out_of_turn";
inline constexpr const char* kIllegalMove = "illegal_move";
inline constexpr const char* kNoHint = "no_hint";
inline constexpr const char* kForbidden = "forbidden";
inline constexpr const char* kBoundary = "boundary";
inline constexpr const char* kOpponentDisconnected = "opponent_disconnected";
}  // namespace error_code

std::string seat_code(Seat s);
std::optional<Seat> parse_seat(std::string_view code) noexcept;
std::string verdict_code(Verdict v);  // "S", "N" or "draw"

struct LastMove {
  Seat seat;
  int pit;
};

json make_created(const std::string& session_id, std::optional<Seat> seat);
json make_joined(Seat seat);
json make_state(const BoardState& board, bool extra_turn, int captured, bool terminal,
                std::optional<Verdict> winner, std::optional<LastMove> last = std::nullopt);
json make_hint_result(std::optional<int> pit, int value, std::uint64_t nodes);
json make_error(std::string_view code, std::string_view message);

/// Checks a message against the schema above. Returns an explanation when
/// invalid. Used by tests and by clients to vet inbound traffic.
std::optional<std::string> schema_violation(const json& message);

/// Compact single-line encoding (no trailing newline).
std::string encode_line(const json& message);

}  // namespace kalah::net
