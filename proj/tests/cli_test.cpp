// Scripted runs of the command-line front end through string streams.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "kalah/board_text.hpp"
#include "kalah/cli.hpp"
#include "kalah/rules.hpp"
#include "kalah/server.hpp"

using namespace kalah;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

CliRun run_cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  CliRun r;
  r.code = cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> position_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream s(text);
  for (std::string line; std::getline(s, line);) {
    if (line.rfind("position: ", 0) == 0) lines.push_back(line.substr(10, line.find("  (") - 10));
  }
  return lines;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

int count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (auto at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

}  // namespace

TEST(CliPlay, ComputerGamesFinishAndRepeat) {
  for (int level = 1; level <= 4; ++level) {
    const auto args = std::vector<std::string>{"play", "--mode", "cvc", "--level",
                                               std::to_string(level)};
    const CliRun a = run_cli(args);
    ASSERT_EQ(a.code, cli::kExitOk) << a.err;
    EXPECT_EQ(count(a.out, "Game over: "), 1) << "level " << level;

    // Every printed position follows from the one before by a legal move.
    const auto positions = position_lines(a.out);
    ASSERT_GE(positions.size(), 2u);
    const BoardState last = decode_board(positions.back());
    EXPECT_TRUE(is_terminal(last));
    EXPECT_EQ(last.total_seeds(), 72);

    EXPECT_EQ(run_cli(args).out, a.out) << "level " << level;
  }
}

TEST(CliPlay, LevelFourSearchesDepthEight) {
  const CliRun r = run_cli({"play", "--mode", "hvc", "--level", "4"}, "2\nquit\n");
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.out.find("North searched depth 8:"), std::string::npos) << r.out;
}

TEST(CliPlay, EmptyPitRepromptsWithoutChangingState) {
  // Pit 3 is emptied by South's first move; after North replies it is still empty.
  const CliRun r = run_cli({"play", "--mode", "hvc", "--level", "1"}, "3\n3\nquit\n");
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(count(r.out, "illegal move"), 1);
  const auto positions = position_lines(r.out);
  ASSERT_EQ(positions.size(), 3u);  // start, after South, after North; nothing after the rejection
  EXPECT_EQ(count(r.out, "South [pit"), 3);
}

TEST(CliPlay, HotSeatUndoRedoStepOnePly) {
  const CliRun r = run_cli({"play", "--mode", "hvh"}, "3\n1\nundo\nundo\nundo\nredo\nquit\n");
  EXPECT_EQ(r.code, cli::kExitOk);
  const auto p = position_lines(r.out);
  ASSERT_EQ(p.size(), 6u);
  EXPECT_EQ(p[3], p[1]);  // undo North's move
  EXPECT_EQ(p[4], p[0]);  // undo South's move
  EXPECT_EQ(p[5], p[1]);  // redo
  EXPECT_EQ(count(r.out, "nothing to undo"), 1);
}

TEST(CliPlay, ComputerModeUndoSkipsTheReplyChain) {
  const CliRun r = run_cli({"play", "--mode", "hvc", "--level", "1"}, "3\nundo\nredo\nquit\n");
  const auto p = position_lines(r.out);
  ASSERT_EQ(p.size(), 5u);
  EXPECT_EQ(p[3], p[0]);
  EXPECT_EQ(p[4], p[2]);
}

TEST(CliPlay, StartsFromGivenPosition) {
  const CliRun r = run_cli({"play", "--mode", "hvh", "--position", "0,0,0,0,0,1/30/1,0,0,0,0,0/40 S"},
                        "6\n");
  EXPECT_EQ(r.code, cli::kExitOk);
  // Landing in the kalah with an empty row ends the game instead of granting another turn.
  EXPECT_NE(r.out.find("South plays pit 6 (1 seed).\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("Game over: South 31, North 41. North wins."), std::string::npos) << r.out;
}

TEST(CliPlay, ConfigurationErrors) {
  EXPECT_EQ(run_cli({"play", "--mode", "cvc", "--level", "5"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"play", "--mode", "chess"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"play"}).code, cli::kExitUsage);
  const CliRun bad = run_cli({"play", "--mode", "hvh", "--position", "6,6/0/6,6/0 S"});
  EXPECT_EQ(bad.code, cli::kExitUsage);
  EXPECT_NE(bad.err.find("bad position"), std::string::npos);
  EXPECT_EQ(run_cli({"play", "--mode", "net-join"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"--help"}).code, cli::kExitOk);
}

TEST(CliPlay, ConnectionFailureNamesTheAddress) {
  // Bind then release a port so nothing is listening on it.
  std::uint16_t port = 0;
  {
    net::Server probe({"127.0.0.1", 0}, {});
    port = probe.port();
  }
  const std::string addr = "127.0.0.1:" + std::to_string(port);
  const CliRun r = run_cli({"play", "--mode", "net-join", "--connect", addr, "--session", "x"});
  EXPECT_EQ(r.code, cli::kExitConnection);
  EXPECT_NE(r.err.find(addr), std::string::npos) << r.err;
}

TEST(CliPlay, JoinsNetworkGameAndRelaysMoves) {
  net::Server server({"127.0.0.1", 0}, {});
  const std::string addr = "127.0.0.1:" + std::to_string(server.port());
  net::Client south(net::Endpoint{"127.0.0.1", server.port()});
  south.send({{"type", "create"}, {"mode", "hvh-net"}});
  const auto created = south.receive();
  ASSERT_TRUE(created);
  const std::string id = (*created)["session_id"];

  CliRun joiner;
  std::thread t([&] {
    joiner = run_cli({"play", "--mode", "net-join", "--connect", addr, "--session", id},
                     "3\nfoo\nquit\n");
  });
  auto next_state = [&] {
    while (auto m = south.receive()) {
      if ((*m)["type"] == "state") return (*m)["board"].get<std::string>();
    }
    return std::string();
  };
  next_state();  // opponent joined
  south.send({{"type", "move"}, {"pit", 2}});
  next_state();
  const std::string after_north = next_state();
  south.send({{"type", "move"}, {"pit", 0}});
  next_state();
  t.join();

  EXPECT_EQ(joiner.code, cli::kExitOk) << joiner.err;
  EXPECT_NE(joiner.out.find("as North"), std::string::npos);
  EXPECT_NE(joiner.out.find("North plays pit 3 (6 seeds)."), std::string::npos) << joiner.out;
  EXPECT_EQ(after_north, "7,7,0,7,7,7/1/7,7,0,7,7,7/1 S");
  EXPECT_NE(joiner.out.find("unknown input 'foo'"), std::string::npos) << joiner.out;
}

TEST(CliAnalyze, InitialPositionDepthTwo) {
  const CliRun r = run_cli({"analyze", "--depth", "2"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_NE(r.out.find("plain:                 best pit  1  value   +2  nodes 42"), std::string::npos)
      << r.out;
  EXPECT_NE(r.out.find("restricted-alphabeta:  best pit  1  value   +2"), std::string::npos);
  EXPECT_NE(r.out.find("reduction: restricted search generates"), std::string::npos);
}

TEST(CliAnalyze, DepthZeroAndTerminal) {
  const CliRun zero = run_cli({"analyze", "--depth", "0", "--position", "6,6,6,6,6,6/3/6,6,6,6,6,0/0 N"});
  EXPECT_NE(zero.out.find("best pit  -  value   -3  nodes 1"), std::string::npos) << zero.out;
  const CliRun done = run_cli({"analyze", "--position", "0,0,0,0,0,0/38/0,0,0,0,0,0/34 S"});
  EXPECT_EQ(done.code, cli::kExitOk);
  EXPECT_NE(done.out.find("Terminal position: final margin +4 for South."), std::string::npos);
  EXPECT_EQ(done.out.find("best pit"), std::string::npos);
}

TEST(CliAnalyze, LevelAndDepthAreExclusive) {
  EXPECT_EQ(run_cli({"analyze", "--level", "1", "--depth", "3"}).code, cli::kExitUsage);
  const CliRun r = run_cli({"analyze", "--level", "2"});
  EXPECT_NE(r.out.find("depth 4,"), std::string::npos);
}

TEST(CliBench, RepeatableFilesAndSingleSample) {
  const auto dir = std::filesystem::temp_directory_path() / "kalah_cli_test";
  std::filesystem::create_directories(dir);
  const auto a = dir / "a.csv";
  const auto b = dir / "b.csv";
  const std::vector<std::string> base{"bench", "--depths", "2,4", "--samples", "10", "--seed", "7"};
  auto with_out = [&](const std::filesystem::path& p) {
    auto args = base;
    args.insert(args.end(), {"--out", p.string()});
    return args;
  };
  ASSERT_EQ(run_cli(with_out(a)).code, cli::kExitOk);
  ASSERT_EQ(run_cli(with_out(b)).code, cli::kExitOk);
  EXPECT_FALSE(slurp(a).empty());
  EXPECT_EQ(slurp(a), slurp(b));

  auto serial = with_out(b);
  serial.push_back("--serial");
  ASSERT_EQ(run_cli(serial).code, cli::kExitOk);
  EXPECT_EQ(slurp(a), slurp(b));

  const CliRun one = run_cli({"bench", "--depths", "2", "--samples", "1", "--playout-moves", "0"});
  EXPECT_EQ(one.out,
            "depth,sample,nodes,baseline,percentage\n"
            "2,0,17,43,0.3953\n"
            "2,MEAN,17.0000,43,0.3953\n");
  std::filesystem::remove_all(dir);
}

TEST(CliBench, Errors) {
  EXPECT_EQ(run_cli({"bench", "--out", "/nonexistent-dir/x.csv"}).code, cli::kExitIo);
  EXPECT_EQ(run_cli({"bench", "--playout-moves", "5..2"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"bench", "--playout-moves", "a..b"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"bench", "--samples", "0"}).code, cli::kExitUsage);
}
