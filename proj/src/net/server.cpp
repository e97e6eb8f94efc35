#include "kalah/server.hpp"

#include <atomic>
#include <charconv>
#include <map>

#include <boost/asio.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/http.hpp>
#include <boost/beast/websocket.hpp>

namespace kalah::net {

namespace asio = boost::asio;
namespace beast = boost::beast;
namespace websocket = beast::websocket;
using tcp = asio::ip::tcp;

Endpoint Endpoint::parse(std::string_view text) {
  Endpoint e;
  std::string_view port_text = text;
  if (const auto colon = text.rfind(':'); colon != std::string_view::npos) {
    if (colon > 0) e.host = std::string(text.substr(0, colon));
    port_text = text.substr(colon + 1);
  }
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(port_text.data(), port_text.data() + port_text.size(), value);
  if (port_text.empty() || ec != std::errc() || ptr != port_text.data() + port_text.size() ||
      value > 65535) {
    throw std::invalid_argument("bad address '" + std::string(text) + "': expected host:port");
  }
  e.port = static_cast<std::uint16_t>(value);
  return e;
}

std::string Endpoint::to_string() const { return host + ":" + std::to_string(port); }

namespace {

tcp::endpoint resolve(asio::io_context& io, const Endpoint& e) {
  tcp::resolver resolver(io);
  auto results = resolver.resolve(e.host, std::to_string(e.port));
  return results.begin()->endpoint();
}

}  // namespace

// ---------------------------------------------------------------------------
// Server

class Connection : public std::enable_shared_from_this<Connection> {
 public:
  Connection(asio::io_context& io, tcp::socket socket, Service& service,
             asio::thread_pool& workers)
      : socket_(std::move(socket)),
        strand_(asio::make_strand(io)),
        service_(service),
        workers_(workers) {}

  virtual ~Connection() = default;

  ConnectionId id() const noexcept { return id_; }

  void start(ConnectionId id) {
    id_ = id;
    // Peek one line's worth to choose the framing.
    auto self = shared_from_this();
    asio::async_read_until(socket_, buffer_, '\n',
                           asio::bind_executor(strand_, [self](beast::error_code ec, std::size_t) {
                             self->on_first_line(ec);
                           }));
  }

  void deliver(std::string line) {
    asio::post(strand_, [self = shared_from_this(), line = std::move(line)]() mutable {
      self->outbox_.push_back(std::move(line));
      if (self->outbox_.size() == 1) self->write_next();
    });
  }

  void close() {
    asio::post(strand_, [self = shared_from_this()] { self->shutdown(); });
  }

  std::function<void(ConnectionId)> on_closed;

 private:
  void on_first_line(beast::error_code ec) {
    if (ec) return finish();
    const auto data = buffer_.data();
    const std::string head(asio::buffers_begin(data),
                           asio::buffers_begin(data) + std::min<std::size_t>(4, buffer_.size()));
    if (head == "GET ") {
      upgrade();
    } else {
      on_line();
    }
  }

  // --- newline-delimited JSON ---------------------------------------------
  void read_line() {
    auto self = shared_from_this();
    asio::async_read_until(socket_, buffer_, '\n',
                           asio::bind_executor(strand_, [self](beast::error_code ec, std::size_t) {
                             if (ec) return self->finish();
                             self->on_line();
                           }));
  }

  void on_line() {
    std::istream in(&buffer_);
    std::string line;
    std::getline(in, line);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) return read_line();
    dispatch(std::move(line), [](const std::shared_ptr<Connection>& c) { c->read_line(); });
  }

  // --- WebSocket ----------------------------------------------------------
  void upgrade() {
    // The HTTP request bytes already buffered are handed to the parser.
    ws_.emplace(std::move(socket_));
    auto self = shared_from_this();
    request_ = std::make_unique<beast::http::request<beast::http::string_body>>();
    beast::http::async_read(
        ws_->next_layer(), buffer_, *request_,
        asio::bind_executor(strand_, [self](beast::error_code ec, std::size_t) {
          if (ec) return self->finish();
          self->ws_->text(true);
          self->ws_->async_accept(*self->request_,
                                  asio::bind_executor(self->strand_, [self](beast::error_code ec) {
                                    if (ec) return self->finish();
                                    self->read_frame();
                                  }));
        }));
  }

  void read_frame() {
    auto self = shared_from_this();
    ws_->async_read(frame_, asio::bind_executor(strand_, [self](beast::error_code ec, std::size_t) {
                      if (ec) return self->finish();
                      std::string text = beast::buffers_to_string(self->frame_.data());
                      self->frame_.consume(self->frame_.size());
                      self->dispatch(std::move(text),
                                     [](const std::shared_ptr<Connection>& c) { c->read_frame(); });
                    }));
  }

  // Runs the service on the worker pool so a long search never stalls the
  // I/O threads; the next read starts only after this message is handled.
  template <class Next>
  void dispatch(std::string message, Next next) {
    asio::post(workers_, [self = shared_from_this(), message = std::move(message), next] {
      self->service_.handle(self->id_, message);
      asio::post(self->strand_, [self, next] { next(self); });
    });
  }

  void write_next() {
    auto self = shared_from_this();
    auto done = asio::bind_executor(strand_, [self](beast::error_code ec, std::size_t) {
      if (ec) return self->finish();
      self->outbox_.pop_front();
      if (!self->outbox_.empty()) self->write_next();
    });
    if (ws_) {
      ws_->async_write(asio::buffer(outbox_.front()), std::move(done));
    } else {
      outbox_.front() += '\n';
      asio::async_write(socket_, asio::buffer(outbox_.front()), std::move(done));
    }
  }

  void shutdown() {
    beast::error_code ignored;
    if (ws_) {
      ws_->next_layer().close(ignored);
    } else {
      socket_.close(ignored);
    }
  }

  void finish() {
    if (finished_) return;
    finished_ = true;
    shutdown();
    if (on_closed) on_closed(id_);
  }

  tcp::socket socket_;
  asio::strand<asio::io_context::executor_type> strand_;
  Service& service_;
  asio::thread_pool& workers_;
  ConnectionId id_ = 0;
  asio::streambuf buffer_;
  std::optional<websocket::stream<tcp::socket>> ws_;
  std::unique_ptr<beast::http::request<beast::http::string_body>> request_;
  beast::flat_buffer frame_;
  std::deque<std::string> outbox_;
  bool finished_ = false;
};

struct Server::Impl {
  Impl(const Endpoint& listen, Options opts)
      : options(opts),
        workers(std::max(1u, opts.worker_threads)),
        service([this](ConnectionId id, const json& m) { route(id, m); }, opts.service),
        acceptor(io),
        expiry(io),
        signals(io, SIGINT, SIGTERM) {
    const tcp::endpoint ep = resolve(io, listen);
    acceptor.open(ep.protocol());
    acceptor.set_option(asio::socket_base::reuse_address(true));
    acceptor.bind(ep);
    acceptor.listen();
    accept();
    schedule_expiry();
    signals.async_wait([this](beast::error_code ec, int) {
      if (!ec) stop();
    });
    for (unsigned i = 0; i < std::max(1u, opts.io_threads); ++i) {
      threads.emplace_back([this] { io.run(); });
    }
  }

  ~Impl() {
    stop();
    for (auto& t : threads) {
      if (t.joinable()) t.join();
    }
    workers.join();
  }

  void accept() {
    acceptor.async_accept([this](beast::error_code ec, tcp::socket socket) {
      if (ec) return;
      auto conn = std::make_shared<Connection>(io, std::move(socket), service, workers);
      const ConnectionId id = service.connect();
      {
        std::lock_guard lock(mutex);
        connections[id] = conn;
      }
      conn->on_closed = [this](ConnectionId closed) {
        service.disconnect(closed);
        std::lock_guard lock(mutex);
        connections.erase(closed);
      };
      conn->start(id);
      accept();
    });
  }

  void route(ConnectionId id, const json& m) {
    std::shared_ptr<Connection> conn;
    {
      std::lock_guard lock(mutex);
      const auto it = connections.find(id);
      if (it == connections.end()) return;
      conn = it->second;
    }
    conn->deliver(encode_line(m));
  }

  void schedule_expiry() {
    expiry.expires_after(options.expiry_interval);
    expiry.async_wait([this](beast::error_code ec) {
      if (ec) return;
      service.expire();
      schedule_expiry();
    });
  }

  void stop() {
    if (stopped.exchange(true)) return;
    asio::post(io, [this] {
      beast::error_code ignored;
      acceptor.close(ignored);
      expiry.cancel();
      signals.cancel();
      std::lock_guard lock(mutex);
      for (auto& [_, c] : connections) c->close();
    });
    // Let pending closes flush before the loop stops.
    asio::post(io, [this] { io.stop(); });
    std::lock_guard lock(stop_mutex);
    stop_cv.notify_all();
  }

  Options options;
  asio::io_context io;
  asio::thread_pool workers;
  Service service;
  tcp::acceptor acceptor;
  asio::steady_timer expiry;
  asio::signal_set signals;
  std::vector<std::thread> threads;
  std::mutex mutex;
  std::map<ConnectionId, std::shared_ptr<Connection>> connections;
  std::atomic<bool> stopped{false};
  std::mutex stop_mutex;
  std::condition_variable stop_cv;
};

Server::Server(const Endpoint& listen, Options options)
    : impl_(std::make_unique<Impl>(listen, options)) {}

Server::~Server() = default;

std::uint16_t Server::port() const noexcept { return impl_->acceptor.local_endpoint().port(); }

Service& Server::service() noexcept { return impl_->service; }

void Server::stop() { impl_->stop(); }

void Server::wait() {
  std::unique_lock lock(impl_->stop_mutex);
  impl_->stop_cv.wait(lock, [this] { return impl_->stopped.load(); });
}

// ---------------------------------------------------------------------------
// Client

struct Client::Impl {
  explicit Impl(const Endpoint& server) : socket(io) {
    asio::connect(socket, std::vector<tcp::endpoint>{resolve(io, server)});
    reader = std::thread([this] { read_loop(); });
  }

  ~Impl() {
    close();
    if (reader.joinable()) reader.join();
  }

  void read_loop() {
    asio::streambuf buf;
    beast::error_code ec;
    while (true) {
      asio::read_until(socket, buf, '\n', ec);
      if (ec) break;
      std::istream in(&buf);
      std::string line;
      std::getline(in, line);
      if (line.empty()) continue;
      json m = json::parse(line, nullptr, false);
      if (m.is_discarded()) continue;
      std::lock_guard lock(mutex);
      inbox.push_back(std::move(m));
      cv.notify_all();
    }
    std::lock_guard lock(mutex);
    is_closed = true;
    cv.notify_all();
  }

  void close() {
    beast::error_code ignored;
    socket.shutdown(tcp::socket::shutdown_both, ignored);
    socket.close(ignored);
  }

  asio::io_context io;
  tcp::socket socket;
  std::thread reader;
  std::mutex mutex;
  std::mutex write_mutex;
  std::condition_variable cv;
  std::deque<json> inbox;
  bool is_closed = false;
};

Client::Client(const Endpoint& server) : impl_(std::make_unique<Impl>(server)) {}

Client::~Client() = default;

void Client::send(const json& message) {
  const std::string line = encode_line(message) + "\n";
  std::lock_guard lock(impl_->write_mutex);
  asio::write(impl_->socket, asio::buffer(line));
}

std::optional<json> Client::receive(std::chrono::milliseconds timeout) {
  std::unique_lock lock(impl_->mutex);
  impl_->cv.wait_for(lock, timeout, [this] { return !impl_->inbox.empty() || impl_->is_closed; });
  if (impl_->inbox.empty()) return std::nullopt;
  json m = std::move(impl_->inbox.front());
  impl_->inbox.pop_front();
  return m;
}

bool Client::closed() const {
  std::lock_guard lock(impl_->mutex);
  return impl_->is_closed && impl_->inbox.empty();
}

void Client::close() { impl_->close(); }

}  // namespace kalah::net
