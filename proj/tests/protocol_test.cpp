#include <gtest/gtest.h>

#include "kalah/protocol.hpp"
#include "kalah/rules.hpp"

using namespace kalah;
using namespace kalah::net;

TEST(Protocol, BuildersProduceValidMessages) {
  const BoardState b = initial_board();
  for (const json& m : {make_created("abc", Seat::South), make_created("abc", std::nullopt),
                        make_joined(Seat::North),
                        make_state(b, true, 0, false, Verdict::Undecided, LastMove{Seat::South, 0}),
                        make_state(b, false, 3, true, Verdict::Draw),
                        make_hint_result(2, -4, 17), make_hint_result(std::nullopt, 0, 1),
                        make_error("out_of_turn", "South to move")}) {
    EXPECT_FALSE(schema_violation(m)) << m.dump();
  }
  EXPECT_FALSE(make_state(b, false, 0, false, Verdict::Undecided).contains("winner"));
  EXPECT_EQ(make_state(b, false, 0, true, Verdict::North)["winner"], "N");
}

TEST(Protocol, ClientMessages) {
  EXPECT_FALSE(schema_violation(json{{"type", "create"}, {"mode", "hvc"}, {"level", 2}}));
  EXPECT_FALSE(schema_violation(
      json{{"type", "create"}, {"mode", "hvh-net"}, {"config", {{"pits_per_side", 4}}}}));
  EXPECT_FALSE(schema_violation(json{{"type", "join"}, {"session_id", "x"}}));
  EXPECT_FALSE(schema_violation(json{{"type", "move"}, {"pit", 3}}));
  EXPECT_FALSE(schema_violation(json{{"type", "hint"}}));
  EXPECT_FALSE(schema_violation(json{{"type", "undo"}}));
  EXPECT_FALSE(schema_violation(json{{"type", "redo"}}));
}

TEST(Protocol, RejectsMalformed) {
  EXPECT_TRUE(schema_violation(json::array()));
  EXPECT_TRUE(schema_violation(json{{"pit", 3}}));
  EXPECT_TRUE(schema_violation(json{{"type", "move"}}));
  EXPECT_TRUE(schema_violation(json{{"type", "move"}, {"pit", 1.5}}));
  EXPECT_TRUE(schema_violation(json{{"type", "move"}, {"pit", 1}, {"extra", 1}}));
  EXPECT_TRUE(schema_violation(json{{"type", "create"}, {"mode", "solo"}}));
  EXPECT_TRUE(schema_violation(json{{"type", "joined"}, {"seat", "E"}}));
  EXPECT_TRUE(schema_violation(json{{"type", "undo"}, {"steps", 2}}));
  EXPECT_TRUE(schema_violation(json{{"type", "teleport"}}));
  json s = make_state(initial_board(), false, 0, true, Verdict::Draw);
  s["winner"] = "both";
  EXPECT_TRUE(schema_violation(s));
}

TEST(Protocol, Modes) {
  for (Mode m : {Mode::HumanVsHumanNet, Mode::HumanVsComputer, Mode::ComputerVsComputer}) {
    EXPECT_EQ(parse_mode(mode_name(m)), m);
  }
  EXPECT_FALSE(parse_mode("hvh"));
}
