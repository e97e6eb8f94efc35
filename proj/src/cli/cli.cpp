#include "kalah/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "kalah/bench.hpp"
#include "kalah/board_text.hpp"
#include "kalah/search.hpp"
#include "kalah/server.hpp"
#include "play.hpp"

namespace kalah::cli {

namespace {

struct AnalyzeOptions {
  std::optional<std::string> position;
  std::optional<int> depth;
  std::optional<int> level;
  int coefficient = search::kDefaultCoefficient;
  bool classic = false;
};

struct BenchOptions {
  std::vector<int> depths{2, 4, 6, 8};
  int samples = 100;
  std::uint64_t seed = 1;
  std::string playout_moves = "0..12";
  std::optional<std::string> out_path;
  bool serial = false;
};

struct ServeOptions {
  std::string listen = "127.0.0.1:7777";
  int grace_seconds = 30;
  unsigned workers = 2;
};

// "A..B" or a single "A".
std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  const std::string lo = text.substr(0, dots);
  const std::string hi = dots == std::string::npos ? lo : text.substr(dots + 2);
  auto number = [&](const std::string& part) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw ConfigError("--playout-moves expects A..B, got '" + text + "'");
    }
    return v;
  };
  return {number(lo), number(hi)};
}

std::string pit_label(const std::optional<int>& pit) {
  return pit ? std::to_string(*pit + 1) : std::string("-");
}

int analyze(const AnalyzeOptions& opts, std::ostream& out) {
  const GameConfig config;
  const BoardState state = opts.position ? decode_board(*opts.position, config.pits_per_side)
                                         : initial_board(config);
  search::SearchParams params;
  params.level = opts.level;
  params.coefficient = opts.coefficient;
  params.depth = opts.depth.value_or(opts.level ? 0 : 2);
  const int depth = params.effective_depth();
  if (depth > search::kMaxSearchDepth) {
    throw ConfigError(fmt::format("depth must be at most {}", search::kMaxSearchDepth));
  }
  const Seat root = state.to_move();

  out << render_board(state) << '\n';
  if (is_terminal(state)) {
    out << fmt::format("Terminal position: final margin {:+} for {}.\n", search::evaluate(state, root),
                       seat_name(root));
    out << describe_result(state, winner(state)) << '\n';
    return kExitOk;
  }

  const auto plain = search::minimax_plain(state, depth, root, config);
  const auto restricted = search::minimax_restricted_ab(state, depth, root, config);
  out << fmt::format("depth {}, values from {}'s side\n", depth, seat_name(root));
  out << fmt::format("{:<22} best pit {:>2}  value {:+4}  nodes {}\n", "plain:",
                     pit_label(plain.best_pit), plain.value, plain.nodes_generated);
  out << fmt::format("{:<22} best pit {:>2}  value {:+4}  nodes {}  cutoffs {}\n",
                     "restricted-alphabeta:", pit_label(restricted.best_pit), restricted.value,
                     restricted.nodes_generated, restricted.stats.cutoffs);
  if (opts.classic) {
    search::SearchParams p;
    p.depth = depth;
    p.algorithm = search::Algorithm::ClassicAlphaBeta;
    const auto classic = search::run_search(state, p, root, config);
    out << fmt::format("{:<22} best pit {:>2}  value {:+4}  nodes {}  (experimental, unsound)\n",
                       "classic-alphabeta:", pit_label(classic.best_pit), classic.value,
                       classic.nodes_generated);
  }
  const double pct = 100.0 * static_cast<double>(restricted.nodes_generated) /
                     static_cast<double>(plain.nodes_generated);
  out << fmt::format("reduction: restricted search generates {:.2f}% of plain's nodes ({:.2f}% fewer)\n",
                     pct, 100.0 - pct);
  return kExitOk;
}

int bench_command(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
  bench::BenchConfig config;
  config.depths = opts.depths;
  config.samples = opts.samples;
  config.rng_seed = opts.seed;
  std::tie(config.playout_min, config.playout_max) = parse_range(opts.playout_moves);
  config.validate();

  std::ofstream file;
  if (opts.out_path) {
    file.open(*opts.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "cannot write " << *opts.out_path << '\n';
      return kExitIo;
    }
  }
  const bench::BenchReport report =
      opts.serial ? bench::run_bench_serial(config) : bench::run_bench(config);

  if (!opts.out_path) {
    bench::write_csv(report, out);
    return kExitOk;
  }
  bench::write_csv(report, file);
  file.close();
  if (!file) {
    err << "cannot write " << *opts.out_path << '\n';
    return kExitIo;
  }
  out << fmt::format("{:>5}  {:>10}  {:>12}  {:>10}\n", "depth", "baseline", "mean nodes",
                     "percentage");
  for (const auto& s : report.summary) {
    out << fmt::format("{:>5}  {:>10}  {:>12.1f}  {:>9.2f}%\n", s.depth, s.baseline, s.mean_nodes,
                       100.0 * s.percentage);
  }
  out << "wrote " << *opts.out_path << '\n';
  return kExitOk;
}

int serve(const ServeOptions& opts, std::ostream& out, std::ostream& err) {
  const net::Endpoint listen = net::Endpoint::parse(opts.listen);
  net::Server::Options options;
  options.service.disconnect_grace = std::chrono::seconds(opts.grace_seconds);
  options.worker_threads = opts.workers;
  std::unique_ptr<net::Server> server;
  try {
    server = std::make_unique<net::Server>(listen, options);
  } catch (const std::exception& e) {
    err << "cannot listen on " << listen.to_string() << ": " << e.what() << '\n';
    return kExitConnection;
  }
  out << fmt::format("kalah server on {}:{} (newline-delimited JSON or WebSocket); Ctrl-C stops\n",
                     listen.host, server->port())
      << std::flush;
  server->wait();
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kalah(6,6) with extra-turn-aware minimax search"};
  app.require_subcommand(1);

  PlayOptions play;
  auto* play_cmd = app.add_subcommand("play", "Play a game (local, against the computer, or networked)");
  play_cmd->add_option("--mode", play.mode, "hvh, hvc, cvc, net-host or net-join")
      ->required()
      ->check(CLI::IsMember({"hvh", "hvc", "cvc", "net-host", "net-join"}));
  play_cmd->add_option("--level", play.level, "Computer level 1..4 (also used for hints)")
      ->check(CLI::Range(1, 4))
      ->capture_default_str();
  play_cmd->add_option("--coefficient", play.coefficient, "Search depth per level")
      ->check(CLI::Range(1, 3))
      ->capture_default_str();
  play_cmd->add_option("--position", play.position, "Start position, e.g. \"6,6,6,6,6,6/0/6,6,6,6,6,6/0 S\"");
  play_cmd->add_option("--listen", play.listen, "Address to host on (net-host)")->capture_default_str();
  play_cmd->add_option("--connect", play.connect, "Server address (net-join)");
  play_cmd->add_option("--session", play.session, "Session id to join (net-join)");

  AnalyzeOptions analyze_opts;
  auto* analyze_cmd = app.add_subcommand("analyze", "Search one position with plain and pruned minimax");
  analyze_cmd->add_option("--position", analyze_opts.position, "Position text (default: initial board)");
  auto* depth_opt = analyze_cmd->add_option("--depth", analyze_opts.depth, "Search depth (default 2)")
                        ->check(CLI::Range(0, search::kMaxSearchDepth));
  analyze_cmd->add_option("--level", analyze_opts.level, "Level 1..4 instead of a depth")
      ->check(CLI::Range(1, 4))
      ->excludes(depth_opt);
  analyze_cmd->add_option("--coefficient", analyze_opts.coefficient, "Search depth per level")
      ->check(CLI::Range(1, 3))
      ->capture_default_str();
  analyze_cmd->add_flag("--experimental-classic", analyze_opts.classic,
                        "Also run unrestricted alpha-beta (may disagree with plain minimax)");

  BenchOptions bench_opts;
  auto* bench_cmd = app.add_subcommand("bench", "Node-count benchmark against the full-tree baseline");
  bench_cmd->add_option("--depths", bench_opts.depths, "Comma-separated depths")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--samples", bench_opts.samples, "Sampled positions per depth")
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench_opts.seed, "Sampling seed")->capture_default_str();
  bench_cmd->add_option("--playout-moves", bench_opts.playout_moves,
                        "Random moves played from the start, A..B")
      ->capture_default_str();
  bench_cmd->add_option("--out", bench_opts.out_path, "CSV file (default: standard output)");
  bench_cmd->add_flag("--serial", bench_opts.serial, "Use the single-threaded reference");

  ServeOptions serve_opts;
  auto* serve_cmd = app.add_subcommand("serve", "Run the game server");
  serve_cmd->add_option("--listen", serve_opts.listen, "host:port")->capture_default_str();
  serve_cmd->add_option("--grace", serve_opts.grace_seconds,
                        "Seconds a disconnected player may take to rejoin")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  serve_cmd->add_option("--workers", serve_opts.workers, "Message-handling threads")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*play_cmd) {
      if (play.mode == "net-host" || play.mode == "net-join") return play_net(play, in, out, err);
      return play_local(play, in, out, err);
    }
    if (*analyze_cmd) return analyze(analyze_opts, out);
    if (*bench_cmd) return bench_command(bench_opts, out, err);
    return serve(serve_opts, out, err);
  } catch (const ParseError& e) {
    err << "bad position (" << e.field() << "): " << e.what() << '\n';
  } catch (const ConfigError& e) {
    err << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  std::vector<const char*> argv{"kalah"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), in, out, err);
}

}  // namespace kalah::cli
