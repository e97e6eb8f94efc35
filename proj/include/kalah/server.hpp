#pragma once

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "kalah/protocol.hpp"
#include "kalah/service.hpp"

namespace kalah::net {

struct Endpoint {
  std::string host = "127.0.0.1";
  std::uint16_t port = 0;

  /// "host:port", ":port" or "port".
  static Endpoint parse(std::string_view text);
  std::string to_string() const;
};

/// Serves the protocol on one TCP port. A connection whose first bytes are an
/// HTTP GET is upgraded to WebSocket (one message per text frame); anything
/// else is read as newline-delimited JSON.
class Server {
 public:
  struct Options {
    ServiceOptions service;
    unsigned io_threads = 2;
    unsigned worker_threads = 2;
    std::chrono::milliseconds expiry_interval{500};
  };

  Server(const Endpoint& listen, Options options);
  ~Server();

  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  /// Bound port (useful when listening on port 0).
  std::uint16_t port() const noexcept;
  Service& service() noexcept;

  void stop();
  /// Blocks until stop() is called from another thread or a signal arrives.
  void wait();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Blocking NDJSON client with a background reader. Inbound messages are
/// queued in arrival order.
class Client {
 public:
  explicit Client(const Endpoint& server);
  ~Client();

  Client(const Client&) = delete;
  Client& operator=(const Client&) = delete;

  void send(const json& message);

  /// Next inbound message, or nullopt on timeout or once the connection closed.
  std::optional<json> receive(std::chrono::milliseconds timeout = std::chrono::seconds(30));
  bool closed() const;
  void close();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace kalah::net
