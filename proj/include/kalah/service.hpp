#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "kalah/history.hpp"
#include "kalah/protocol.hpp"

namespace kalah::net {

using ConnectionId = std::uint64_t;
using Clock = std::chrono::steady_clock;

/// Receives every outbound message. Called from whichever thread handles
/// the triggering message, possibly concurrently for different sessions.
using Sink = std::function<void(ConnectionId, const json&)>;

struct ServiceOptions {
  std::chrono::milliseconds disconnect_grace{30'000};
  // Seeds session-id generation; unset draws from std::random_device.
  std::optional<std::uint64_t> id_seed;
  int default_hint_level = 1;
};

enum class SessionStatus { Waiting, Active, Finished };

struct SessionSnapshot {
  std::string id;
  Mode mode;
  SessionStatus status;
  BoardState board;
  std::size_t history_size = 0;
  std::size_t cursor = 0;
  bool suspended = false;
};

/// Game sessions behind the wire protocol, independent of any transport.
///
/// A connection belongs to at most one session, which it enters with
/// create or join. Messages for one session are handled one at a time;
/// different sessions proceed in parallel, AI searches included.
class Service {
 public:
  explicit Service(Sink sink, ServiceOptions options = {});
  ~Service();

  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  ConnectionId connect();
  void disconnect(ConnectionId conn, Clock::time_point now = Clock::now());

  /// One inbound message as received on the wire.
  void handle(ConnectionId conn, std::string_view line);
  void handle_message(ConnectionId conn, const json& message);

  /// Forfeits suspended sessions whose grace period ended before now.
  void expire(Clock::time_point now = Clock::now());

  std::optional<SessionSnapshot> snapshot(const std::string& session_id) const;
  std::optional<std::string> session_of(ConnectionId conn) const;
  std::size_t session_count() const;

 private:
  struct Session;

  std::shared_ptr<Session> find_session(ConnectionId conn) const;
  std::string new_session_id();

  void on_create(ConnectionId conn, const json& m);
  void on_join(ConnectionId conn, const json& m);
  void on_move(ConnectionId conn, Session& s, const json& m);
  void on_hint(ConnectionId conn, Session& s, const json& m);
  void on_undo_redo(ConnectionId conn, Session& s, bool undo);

  void play_ai_turns(Session& s);
  void apply_and_broadcast(Session& s, int pit);
  void broadcast(const Session& s, const json& m) const;
  void send(ConnectionId conn, const json& m) const;
  void send_error(ConnectionId conn, std::string_view code, std::string_view message) const;

  Sink sink_;
  ServiceOptions options_;

  mutable std::mutex mutex_;  // guards the maps and the id generator
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::map<ConnectionId, std::string> membership_;
  ConnectionId next_connection_ = 1;
  std::mt19937_64 id_rng_;
};

}  // namespace kalah::net
