// net-host and net-join: a thin protocol client. The server is the only
// rules authority; this side renders what it is sent and forwards input.

#include <istream>
#include <memory>
#include <ostream>

#include <fmt/format.h>

#include "kalah/board_text.hpp"
#include "kalah/cli.hpp"
#include "kalah/server.hpp"
#include "play.hpp"

namespace kalah::cli {

namespace {

using net::json;

class NetPlayer {
 public:
  NetPlayer(net::Client& client, std::string address, Seat seat, int level, std::istream& in,
            std::ostream& out, std::ostream& err)
      : client_(client),
        address_(std::move(address)),
        seat_(seat),
        level_(level),
        in_(in),
        out_(out),
        err_(err) {}

  int run() {
    while (true) {
      auto m = client_.receive(std::chrono::milliseconds(250));
      if (!m) {
        if (client_.closed()) {
          err_ << "connection to " << address_ << " lost\n";
          return kExitConnection;
        }
        continue;
      }
      const std::string type = m->value("type", "");
      bool my_prompt = false;
      if (type == "state") {
        if (on_state(*m)) return kExitOk;
        my_prompt = board_ && board_->to_move() == seat_;
      } else if (type == "hint_result") {
        if ((*m)["pit"].is_null()) {
          out_ << "Hint: no move available.\n";
        } else {
          out_ << fmt::format("Hint: pit {} (value {:+}, {} nodes).\n",
                              (*m)["pit"].get<int>() + 1, (*m)["value"].get<int>(),
                              (*m)["nodes"].get<std::uint64_t>());
        }
        my_prompt = awaiting_;
      } else if (type == "error") {
        const std::string code = m->value("code", "");
        const std::string message = m->value("message", "");
        if (code == net::error_code::kIllegalMove) {
          out_ << "illegal move: " << message << '\n';
        } else if (code == net::error_code::kOpponentDisconnected) {
          out_ << "Opponent disconnected; waiting for them to rejoin.\n";
        } else {
          out_ << "server: " << message << '\n';
        }
        my_prompt = awaiting_;
      }
      if (my_prompt) {
        awaiting_ = false;
        if (!prompt()) {
          out_ << "Left the game.\n";
          client_.close();
          return kExitOk;
        }
      }
    }
  }

 private:
  // Returns true once the game is over.
  bool on_state(const json& m) {
    const BoardState next = decode_board(m["board"].get<std::string>());
    if (m.contains("last") && board_) {
      const Seat mover = *net::parse_seat(m["last"]["seat"].get<std::string>());
      const int pit = m["last"]["pit"].get<int>();
      const int sown = board_->pits(mover)[static_cast<std::size_t>(pit)];
      out_ << describe_move(mover, pit, sown, m["captured"].get<int>(),
                            m["extra_turn"].get<bool>())
           << '\n';
    }
    const bool changed = !board_ || *board_ != next || m.contains("last");
    board_ = next;
    if (changed) out_ << render_board(next) << '\n';
    if (!m["terminal"].get<bool>()) return false;

    Verdict verdict = Verdict::Undecided;
    if (m.contains("winner")) {
      const std::string w = m["winner"];
      verdict = w == "S" ? Verdict::South : w == "N" ? Verdict::North : Verdict::Draw;
    }
    if (!is_terminal(next)) out_ << "The opponent did not come back in time.\n";
    out_ << describe_result(next, verdict) << '\n';
    return true;
  }

  // Reads until something is sent to the server; false when the player quits.
  bool prompt() {
    while (true) {
      const Input input = read_input(in_, out_, seat_, board_->pits_per_side());
      switch (input.kind) {
        case Input::Eof:
        case Input::Quit:
          return false;
        case Input::Pit:
          client_.send({{"type", "move"}, {"pit", input.pit}});
          break;
        case Input::Hint:
          client_.send({{"type", "hint"}, {"level", level_}});
          break;
        case Input::Undo:
          client_.send({{"type", "undo"}});
          break;
        case Input::Redo:
          client_.send({{"type", "redo"}});
          break;
        case Input::Unknown:
          out_ << fmt::format("unknown input '{}': enter a pit 1-{}, hint, undo, redo or quit\n",
                              input.text, board_->pits_per_side());
          continue;
      }
      awaiting_ = true;
      return true;
    }
  }

  net::Client& client_;
  std::string address_;
  Seat seat_;
  int level_;
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  std::optional<BoardState> board_;
  bool awaiting_ = false;
};

std::optional<json> expect_reply(net::Client& client, const std::string& address,
                                 std::ostream& err) {
  auto m = client.receive(std::chrono::seconds(30));
  if (!m) err << "no reply from " << address << '\n';
  return m;
}

}  // namespace

int play_net(const PlayOptions& opts, std::istream& in, std::ostream& out, std::ostream& err) {
  if (opts.position) {
    err << "--position is not available for network games; sessions start from the initial board\n";
    return kExitUsage;
  }
  std::unique_ptr<net::Server> server;
  net::Endpoint target;
  std::string address;

  if (opts.mode == "net-host") {
    const net::Endpoint listen = net::Endpoint::parse(opts.listen);
    try {
      server = std::make_unique<net::Server>(listen, net::Server::Options{});
    } catch (const std::exception& e) {
      err << "cannot listen on " << listen.to_string() << ": " << e.what() << '\n';
      return kExitConnection;
    }
    target = listen;
    target.port = server->port();
    if (target.host == "0.0.0.0" || target.host == "::") target.host = "127.0.0.1";
  } else {
    if (!opts.connect || !opts.session) {
      err << "net-join needs --connect ADDR and --session ID\n";
      return kExitUsage;
    }
    target = net::Endpoint::parse(*opts.connect);
  }
  address = target.to_string();

  std::unique_ptr<net::Client> client;
  try {
    client = std::make_unique<net::Client>(target);
  } catch (const std::exception& e) {
    err << "cannot connect to " << address << ": " << e.what() << '\n';
    return kExitConnection;
  }

  Seat seat = Seat::South;
  if (server) {
    client->send({{"type", "create"}, {"mode", "hvh-net"}});
    const auto created = expect_reply(*client, address, err);
    if (!created || (*created)["type"] != "created") return kExitConnection;
    const std::string id = (*created)["session_id"];
    out << fmt::format("Hosting session {} on {}. You are South.\n", id, address);
    out << fmt::format("Opponent joins with: kalah play --mode net-join --connect {} --session {}\n",
                       address, id);
    out << "Waiting for an opponent..." << std::endl;
  } else {
    client->send({{"type", "join"}, {"session_id", *opts.session}});
    const auto joined = expect_reply(*client, address, err);
    if (!joined) return kExitConnection;
    if ((*joined)["type"] != "joined") {
      err << "cannot join session " << *opts.session << ": "
          << joined->value("message", std::string("unexpected reply")) << '\n';
      return kExitUsage;
    }
    seat = *net::parse_seat((*joined)["seat"].get<std::string>());
    out << fmt::format("Joined session {} on {} as {}.\n", *opts.session, address,
                       seat_name(seat));
  }

  NetPlayer player(*client, address, seat, opts.level, in, out, err);
  const int code = player.run();
  client.reset();
  if (server) server->stop();
  return code;
}

}  // namespace kalah::cli
