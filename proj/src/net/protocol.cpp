#include "kalah/protocol.hpp"

#include <set>

#include "kalah/board_text.hpp"

namespace kalah::net {

std::optional<Mode> parse_mode(std::string_view text) noexcept {
  if (text == "hvh-net") return Mode::HumanVsHumanNet;
  if (text == "hvc") return Mode::HumanVsComputer;
  if (text == "cvc") return Mode::ComputerVsComputer;
  return std::nullopt;
}

const char* mode_name(Mode m) noexcept {
  switch (m) {
    case Mode::HumanVsHumanNet: return "hvh-net";
    case Mode::HumanVsComputer: return "hvc";
    case Mode::ComputerVsComputer: return "cvc";
  }
  return "?";
}

std::string seat_code(Seat s) { return std::string(1, seat_letter(s)); }

std::optional<Seat> parse_seat(std::string_view code) noexcept {
  if (code == "S") return Seat::South;
  if (code == "N") return Seat::North;
  return std::nullopt;
}

std::string verdict_code(Verdict v) {
  switch (v) {
    case Verdict::South: return "S";
    case Verdict::North: return "N";
    case Verdict::Draw: return "draw";
    case Verdict::Undecided: break;
  }
  return "";
}

json make_created(const std::string& session_id, std::optional<Seat> seat) {
  return {{"type", "created"},
          {"session_id", session_id},
          {"seat", seat ? json(seat_code(*seat)) : json(nullptr)}};
}

json make_joined(Seat seat) { return {{"type", "joined"}, {"seat", seat_code(seat)}}; }

json make_state(const BoardState& board, bool extra_turn, int captured, bool terminal,
                std::optional<Verdict> winner, std::optional<LastMove> last) {
  json m = {{"type", "state"},
            {"board", encode_board(board)},
            {"extra_turn", extra_turn},
            {"captured", captured},
            {"terminal", terminal}};
  if (winner && *winner != Verdict::Undecided) m["winner"] = verdict_code(*winner);
  if (last) m["last"] = {{"seat", seat_code(last->seat)}, {"pit", last->pit}};
  return m;
}

json make_hint_result(std::optional<int> pit, int value, std::uint64_t nodes) {
  return {{"type", "hint_result"},
          {"pit", pit ? json(*pit) : json(nullptr)},
          {"value", value},
          {"nodes", nodes}};
}

json make_error(std::string_view code, std::string_view message) {
  return {{"type", "error"}, {"code", code}, {"message", message}};
}

std::string encode_line(const json& message) { return message.dump(); }

namespace {

using Check = std::optional<std::string>;

Check only_fields(const json& m, std::initializer_list<const char*> allowed) {
  std::set<std::string> ok{"type"};
  for (const char* f : allowed) ok.insert(f);
  for (const auto& [key, _] : m.items()) {
    if (!ok.count(key)) return "unexpected field '" + key + "'";
  }
  return std::nullopt;
}

Check need(const json& m, const char* field, bool (json::*is)() const noexcept) {
  if (!m.contains(field)) return std::string("missing field '") + field + "'";
  if (!(m.at(field).*is)()) return std::string("wrong type for '") + field + "'";
  return std::nullopt;
}

Check maybe(const json& m, const char* field, bool (json::*is)() const noexcept) {
  if (!m.contains(field) || m.at(field).is_null()) return std::nullopt;
  if (!(m.at(field).*is)()) return std::string("wrong type for '") + field + "'";
  return std::nullopt;
}

Check seat_field(const json& m, const char* field, bool nullable) {
  if (!m.contains(field)) return std::string("missing field '") + field + "'";
  const json& v = m.at(field);
  if (v.is_null() && nullable) return std::nullopt;
  if (!v.is_string() || !parse_seat(v.get<std::string>())) {
    return std::string("bad seat in '") + field + "'";
  }
  return std::nullopt;
}

template <class... Checks>
Check first(Checks... checks) {
  Check result;
  ((result = result ? result : checks), ...);
  return result;
}

}  // namespace

std::optional<std::string> schema_violation(const json& m) {
  if (!m.is_object()) return "message is not an object";
  if (!m.contains("type") || !m["type"].is_string()) return "missing string field 'type'";
  const std::string type = m["type"];

  if (type == "create") {
    if (auto e = first(only_fields(m, {"mode", "level", "coefficient", "config"}),
                       need(m, "mode", &json::is_string), maybe(m, "level", &json::is_number_integer),
                       maybe(m, "coefficient", &json::is_number_integer),
                       maybe(m, "config", &json::is_object))) {
      return e;
    }
    if (!parse_mode(m["mode"].get<std::string>())) return "unknown mode";
    return std::nullopt;
  }
  if (type == "join") {
    return first(only_fields(m, {"session_id"}), need(m, "session_id", &json::is_string));
  }
  if (type == "move") {
    return first(only_fields(m, {"pit"}), need(m, "pit", &json::is_number_integer));
  }
  if (type == "hint") {
    return first(only_fields(m, {"level"}), maybe(m, "level", &json::is_number_integer));
  }
  if (type == "undo" || type == "redo") return only_fields(m, {});
  if (type == "created") {
    return first(only_fields(m, {"session_id", "seat"}), need(m, "session_id", &json::is_string),
                 seat_field(m, "seat", true));
  }
  if (type == "joined") return first(only_fields(m, {"seat"}), seat_field(m, "seat", false));
  if (type == "state") {
    if (auto e = first(only_fields(m, {"board", "extra_turn", "captured", "terminal", "winner", "last"}),
                       need(m, "board", &json::is_string), need(m, "extra_turn", &json::is_boolean),
                       need(m, "captured", &json::is_number_integer),
                       need(m, "terminal", &json::is_boolean), maybe(m, "winner", &json::is_string),
                       maybe(m, "last", &json::is_object))) {
      return e;
    }
    if (m.contains("winner")) {
      const std::string w = m["winner"];
      if (w != "S" && w != "N" && w != "draw") return "bad winner";
    }
    if (m.contains("last")) {
      const json& last = m["last"];
      if (auto e = first(seat_field(last, "seat", false), need(last, "pit", &json::is_number_integer))) {
        return e;
      }
    }
    return std::nullopt;
  }
  if (type == "hint_result") {
    return first(only_fields(m, {"pit", "value", "nodes"}), maybe(m, "pit", &json::is_number_integer),
                 need(m, "value", &json::is_number_integer),
                 need(m, "nodes", &json::is_number_unsigned));
  }
  if (type == "error") {
    return first(only_fields(m, {"code", "message"}), need(m, "code", &json::is_string),
                 need(m, "message", &json::is_string));
  }
  return "unknown message type '" + type + "'";
}

}  // namespace kalah::net
