#include "kalah/service.hpp"

#include <array>
#include <algorithm>

#include <fmt/format.h>

#include "kalah/search.hpp"

namespace kalah::net {

struct Service::Session {
  std::string id;
  Mode mode = Mode::HumanVsComputer;
  GameConfig config;
  int level = 0;
  int coefficient = search::kDefaultCoefficient;
  GameHistory history{BoardState{}};
  std::array<std::optional<ConnectionId>, 2> seat_conn;
  std::array<bool, 2> ai{};
  std::vector<ConnectionId> members;
  SessionStatus status = SessionStatus::Waiting;
  std::optional<Seat> vacated;
  std::optional<Clock::time_point> deadline;
  bool closed = false;
  std::mutex mutex;

  std::optional<Seat> seat_of(ConnectionId conn) const {
    for (Seat s : {Seat::South, Seat::North}) {
      if (seat_conn[index(s)] == conn) return s;
    }
    return std::nullopt;
  }
  const BoardState& board() const { return history.current(); }
};

namespace {

int level_field(const json& m, const char* key, int fallback) {
  return m.contains(key) && !m[key].is_null() ? m[key].get<int>() : fallback;
}

GameConfig config_from(const json& m) {
  GameConfig c;
  if (!m.contains("config") || m["config"].is_null()) return c;
  const json& j = m["config"];
  c.pits_per_side = j.value("pits_per_side", c.pits_per_side);
  c.seeds_per_pit = j.value("seeds_per_pit", c.seeds_per_pit);
  c.capture_requires_opposite_nonempty =
      j.value("capture_requires_opposite_nonempty", c.capture_requires_opposite_nonempty);
  c.validate();
  return c;
}

json current_state(const BoardState& board) {
  return make_state(board, false, 0, is_terminal(board), winner(board));
}

}  // namespace

Service::Service(Sink sink, ServiceOptions options)
    : sink_(std::move(sink)),
      options_(options),
      id_rng_(options.id_seed ? *options.id_seed : std::random_device{}()) {}

Service::~Service() = default;

ConnectionId Service::connect() {
  std::lock_guard lock(mutex_);
  return next_connection_++;
}

std::string Service::new_session_id() {
  return fmt::format("{:016x}", id_rng_());
}

std::shared_ptr<Service::Session> Service::find_session(ConnectionId conn) const {
  std::lock_guard lock(mutex_);
  const auto member = membership_.find(conn);
  if (member == membership_.end()) return nullptr;
  const auto it = sessions_.find(member->second);
  return it == sessions_.end() ? nullptr : it->second;
}

void Service::send(ConnectionId conn, const json& m) const { sink_(conn, m); }

void Service::send_error(ConnectionId conn, std::string_view code,
                         std::string_view message) const {
  send(conn, make_error(code, message));
}

void Service::broadcast(const Session& s, const json& m) const {
  for (ConnectionId c : s.members) send(c, m);
}

void Service::handle(ConnectionId conn, std::string_view line) {
  json message = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (message.is_discarded()) {
    send_error(conn, error_code::kBadRequest, "message is not valid JSON");
    return;
  }
  handle_message(conn, message);
}

void Service::handle_message(ConnectionId conn, const json& m) {
  if (auto problem = schema_violation(m)) {
    send_error(conn, error_code::kBadRequest, *problem);
    return;
  }
  const std::string type = m["type"];
  if (type == "create") return on_create(conn, m);
  if (type == "join") return on_join(conn, m);
  if (type != "move" && type != "hint" && type != "undo" && type != "redo") {
    send_error(conn, error_code::kBadRequest, "'" + type + "' is a server message");
    return;
  }

  auto session = find_session(conn);
  if (!session) {
    send_error(conn, error_code::kNoSession, "create or join a session first");
    return;
  }
  std::lock_guard lock(session->mutex);
  if (type == "move") return on_move(conn, *session, m);
  if (type == "hint") return on_hint(conn, *session, m);
  on_undo_redo(conn, *session, type == "undo");
}

void Service::on_create(ConnectionId conn, const json& m) {
  auto s = std::make_shared<Session>();
  s->mode = *parse_mode(m["mode"].get<std::string>());
  try {
    s->config = config_from(m);
    s->coefficient = level_field(m, "coefficient", search::kDefaultCoefficient);
    if (s->mode != Mode::HumanVsHumanNet) {
      if (!m.contains("level") || m["level"].is_null()) {
        throw ConfigError(std::string("mode ") + mode_name(s->mode) + " needs a level");
      }
      s->level = m["level"].get<int>();
      search::depth_for_level(s->level, s->coefficient);
    }
  } catch (const ConfigError& e) {
    send_error(conn, error_code::kBadRequest, e.what());
    return;
  } catch (const json::exception& e) {
    send_error(conn, error_code::kBadRequest, e.what());
    return;
  }
  s->history = GameHistory(initial_board(s->config));
  s->members.push_back(conn);

  std::optional<Seat> creator_seat;
  switch (s->mode) {
    case Mode::HumanVsHumanNet:
      creator_seat = Seat::South;
      s->status = SessionStatus::Waiting;
      break;
    case Mode::HumanVsComputer:
      creator_seat = Seat::South;
      s->ai[index(Seat::North)] = true;
      s->status = SessionStatus::Active;
      break;
    case Mode::ComputerVsComputer:
      s->ai = {true, true};
      s->status = SessionStatus::Active;
      break;
  }
  if (creator_seat) s->seat_conn[index(*creator_seat)] = conn;

  {
    std::lock_guard lock(mutex_);
    if (membership_.count(conn)) {
      send_error(conn, error_code::kAlreadyInSession, "connection already belongs to a session");
      return;
    }
    do {
      s->id = new_session_id();
    } while (sessions_.count(s->id));
    sessions_[s->id] = s;
    membership_[conn] = s->id;
  }

  std::lock_guard lock(s->mutex);
  send(conn, make_created(s->id, creator_seat));
  if (s->status == SessionStatus::Active) {
    broadcast(*s, current_state(s->board()));
    play_ai_turns(*s);
  }
}

void Service::on_join(ConnectionId conn, const json& m) {
  const std::string id = m["session_id"];
  std::shared_ptr<Session> s;
  {
    std::lock_guard lock(mutex_);
    if (membership_.count(conn)) {
      send_error(conn, error_code::kAlreadyInSession, "connection already belongs to a session");
      return;
    }
    const auto it = sessions_.find(id);
    if (it != sessions_.end()) s = it->second;
  }
  if (!s) {
    send_error(conn, error_code::kNotFound, "no session " + id);
    return;
  }

  {
    std::lock_guard lock(s->mutex);
    std::optional<Seat> seat;
    if (s->closed) {
      send_error(conn, error_code::kNotFound, "no session " + id);
      return;
    }
    if (s->mode == Mode::HumanVsHumanNet && s->status == SessionStatus::Waiting) {
      seat = Seat::North;
      s->status = SessionStatus::Active;
    } else if (s->mode == Mode::HumanVsHumanNet && s->vacated &&
               s->status == SessionStatus::Active) {
      seat = s->vacated;
      s->vacated.reset();
      s->deadline.reset();
    }
    if (!seat) {
      send_error(conn, error_code::kSessionFull, "session " + id + " has no free seat");
      return;
    }
    s->seat_conn[index(*seat)] = conn;
    s->members.push_back(conn);
    {
      std::lock_guard map_lock(mutex_);
      membership_[conn] = id;
    }
    send(conn, make_joined(*seat));
    broadcast(*s, current_state(s->board()));
  }
}

void Service::on_move(ConnectionId conn, Session& s, const json& m) {
  if (s.status != SessionStatus::Active) {
    send_error(conn, error_code::kNotActive,
               s.status == SessionStatus::Waiting ? "waiting for an opponent" : "game is over");
    return;
  }
  if (s.vacated) {
    send_error(conn, error_code::kSuspended, "opponent disconnected; waiting for them to rejoin");
    return;
  }
  const Seat to_move = s.board().to_move();
  const auto seat = s.seat_of(conn);
  if (seat != to_move) {
    send_error(conn, error_code::kOutOfTurn, fmt::format("{} to move", seat_name(to_move)));
    return;
  }
  const int pit = m["pit"].get<int>();
  if (!is_legal(s.board(), pit)) {
    send_error(conn, error_code::kIllegalMove,
               fmt::format("pit {} is empty or out of range", pit));
    return;
  }
  apply_and_broadcast(s, pit);
  play_ai_turns(s);
}

void Service::apply_and_broadcast(Session& s, int pit) {
  const Seat mover = s.board().to_move();
  const MoveOutcome out = apply_move(s.board(), pit, s.config);
  s.history.push(pit, out.state);
  if (out.terminal) s.status = SessionStatus::Finished;
  broadcast(s, make_state(out.state, out.extra_turn, out.captured, out.terminal, winner(out.state),
                          LastMove{mover, pit}));
}

void Service::play_ai_turns(Session& s) {
  while (s.status == SessionStatus::Active && s.ai[index(s.board().to_move())]) {
    const auto result = search::best_move(s.board(), s.level, s.coefficient, s.config);
    if (!result.best_pit) break;
    apply_and_broadcast(s, *result.best_pit);
  }
}

void Service::on_hint(ConnectionId conn, Session& s, const json& m) {
  if (is_terminal(s.board())) {
    send_error(conn, error_code::kNoHint, "no hint available: the game is over");
    return;
  }
  if (s.status != SessionStatus::Active) {
    send_error(conn, error_code::kNotActive, "waiting for an opponent");
    return;
  }
  const Seat to_move = s.board().to_move();
  if (s.seat_of(conn) != to_move) {
    send_error(conn, error_code::kOutOfTurn, fmt::format("{} to move", seat_name(to_move)));
    return;
  }
  const int level =
      level_field(m, "level", s.level > 0 ? s.level : options_.default_hint_level);
  try {
    const auto r = search::best_move(s.board(), level, s.coefficient, s.config);
    send(conn, make_hint_result(r.best_pit, r.value, r.nodes_generated));
  } catch (const ConfigError& e) {
    send_error(conn, error_code::kBadRequest, e.what());
  }
}

void Service::on_undo_redo(ConnectionId conn, Session& s, bool undo) {
  if (s.mode != Mode::HumanVsComputer) {
    send_error(conn, error_code::kForbidden,
               fmt::format("undo and redo are not available in {} sessions", mode_name(s.mode)));
    return;
  }
  // Step over the AI's replies so the human lands on their own decision point.
  const auto at = undo ? previous_turn_of(s.history, Seat::South)
                       : next_turn_of(s.history, Seat::South);
  if (!at) {
    send_error(conn, error_code::kBoundary, undo ? "nothing to undo" : "nothing to redo");
    return;
  }
  s.history.seek(*at);
  s.status = is_terminal(s.board()) ? SessionStatus::Finished : SessionStatus::Active;
  broadcast(s, current_state(s.board()));
}

void Service::disconnect(ConnectionId conn, Clock::time_point now) {
  std::shared_ptr<Session> s;
  {
    std::lock_guard lock(mutex_);
    const auto member = membership_.find(conn);
    if (member == membership_.end()) return;
    const auto it = sessions_.find(member->second);
    if (it != sessions_.end()) s = it->second;
    membership_.erase(member);
  }
  if (!s) return;

  bool drop = false;
  {
    std::lock_guard lock(s->mutex);
    std::erase(s->members, conn);
    const auto seat = s->seat_of(conn);
    if (seat) s->seat_conn[index(*seat)].reset();

    if (s->mode == Mode::HumanVsHumanNet && seat) {
      if (s->status == SessionStatus::Waiting) {
        drop = true;
      } else if (s->status == SessionStatus::Active) {
        s->vacated = seat;
        s->deadline = now + options_.disconnect_grace;
        broadcast(*s, make_error(error_code::kOpponentDisconnected,
                                 fmt::format("{} disconnected", seat_name(*seat))));
      }
    }
    if (s->members.empty()) drop = true;
    if (drop) s->closed = true;
  }
  if (drop) {
    std::lock_guard lock(mutex_);
    sessions_.erase(s->id);
  }
}

void Service::expire(Clock::time_point now) {
  std::vector<std::shared_ptr<Session>> all;
  {
    std::lock_guard lock(mutex_);
    for (const auto& [_, s] : sessions_) all.push_back(s);
  }
  for (const auto& s : all) {
    std::lock_guard lock(s->mutex);
    if (!s->deadline || now < *s->deadline || !s->vacated) continue;
    const Seat stays = opposite(*s->vacated);
    s->status = SessionStatus::Finished;
    s->deadline.reset();
    broadcast(*s, make_state(s->board(), false, 0, true,
                             stays == Seat::South ? Verdict::South : Verdict::North));
  }
}

std::optional<SessionSnapshot> Service::snapshot(const std::string& session_id) const {
  std::shared_ptr<Session> s;
  {
    std::lock_guard lock(mutex_);
    const auto it = sessions_.find(session_id);
    if (it == sessions_.end()) return std::nullopt;
    s = it->second;
  }
  std::lock_guard lock(s->mutex);
  return SessionSnapshot{s->id,          s->mode,
                         s->status,      s->board(),
                         s->history.size(), s->history.cursor(),
                         s->vacated.has_value()};
}

std::optional<std::string> Service::session_of(ConnectionId conn) const {
  std::lock_guard lock(mutex_);
  const auto it = membership_.find(conn);
  if (it == membership_.end()) return std::nullopt;
  return it->second;
}

std::size_t Service::session_count() const {
  std::lock_guard lock(mutex_);
  return sessions_.size();
}

}  // namespace kalah::net
