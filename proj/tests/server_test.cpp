// End-to-end over real sockets: NDJSON clients and a WebSocket client
// against one server port.

#include <gtest/gtest.h>

#include <boost/asio.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/websocket.hpp>

#include "kalah/server.hpp"

using namespace kalah::net;
namespace asio = boost::asio;
namespace beast = boost::beast;

namespace {

Server::Options quick_options() {
  Server::Options o;
  o.service.id_seed = 5;
  o.io_threads = 2;
  o.worker_threads = 2;
  return o;
}

json expect_message(Client& c, const char* type) {
  auto m = c.receive(std::chrono::seconds(10));
  if (!m) {
    ADD_FAILURE() << "no message, wanted " << type;
    return {};
  }
  EXPECT_EQ((*m)["type"], type) << m->dump();
  EXPECT_FALSE(schema_violation(*m)) << m->dump();
  return *m;
}

}  // namespace

TEST(Endpoint, Parse) {
  const Endpoint a = Endpoint::parse("localhost:9000");
  EXPECT_EQ(a.host, "localhost");
  EXPECT_EQ(a.port, 9000);
  EXPECT_EQ(Endpoint::parse(":81").host, "127.0.0.1");
  EXPECT_EQ(Endpoint::parse("82").port, 82);
  EXPECT_THROW(Endpoint::parse("host:"), std::invalid_argument);
  EXPECT_THROW(Endpoint::parse("host:70000"), std::invalid_argument);
  EXPECT_THROW(Endpoint::parse("host:12x"), std::invalid_argument);
}

TEST(Server, TwoStreamClientsPlayOverTcp) {
  Server server({"127.0.0.1", 0}, quick_options());
  const Endpoint ep{"127.0.0.1", server.port()};

  Client south(ep);
  Client north(ep);
  south.send({{"type", "create"}, {"mode", "hvh-net"}});
  const json created = expect_message(south, "created");
  north.send({{"type", "join"}, {"session_id", created["session_id"]}});
  EXPECT_EQ(expect_message(north, "joined")["seat"], "N");
  EXPECT_EQ(expect_message(north, "state"), expect_message(south, "state"));

  south.send({{"type", "move"}, {"pit", 2}});
  const json s1 = expect_message(south, "state");
  EXPECT_EQ(s1, expect_message(north, "state"));
  EXPECT_EQ(s1["board"], "6,6,0,7,7,7/1/7,7,6,6,6,6/0 N");

  south.send({{"type", "move"}, {"pit", 0}});
  EXPECT_EQ(expect_message(south, "error")["code"], "out_of_turn");

  north.send({{"type", "hint"}});
  expect_message(north, "hint_result");
  server.stop();
}

TEST(Server, DroppedClientSuspendsSession) {
  Server server({"127.0.0.1", 0}, quick_options());
  const Endpoint ep{"127.0.0.1", server.port()};
  Client south(ep);
  auto north = std::make_unique<Client>(ep);
  south.send({{"type", "create"}, {"mode", "hvh-net"}});
  const json created = expect_message(south, "created");
  north->send({{"type", "join"}, {"session_id", created["session_id"]}});
  expect_message(*north, "joined");
  expect_message(south, "state");
  north.reset();
  EXPECT_EQ(expect_message(south, "error")["code"], "opponent_disconnected");
}

TEST(Server, WebSocketClientUsesSameSchema) {
  Server server({"127.0.0.1", 0}, quick_options());

  asio::io_context io;
  asio::ip::tcp::resolver resolver(io);
  beast::websocket::stream<asio::ip::tcp::socket> ws(io);
  asio::connect(ws.next_layer(), resolver.resolve("127.0.0.1", std::to_string(server.port())));
  ws.handshake("127.0.0.1", "/");

  auto roundtrip = [&](const json& out) {
    if (!out.is_null()) ws.write(asio::buffer(encode_line(out)));
    beast::flat_buffer buf;
    ws.read(buf);
    return json::parse(beast::buffers_to_string(buf.data()));
  };

  const json created = roundtrip({{"type", "create"}, {"mode", "hvc"}, {"level", 1}});
  EXPECT_EQ(created["type"], "created");
  EXPECT_EQ(created["seat"], "S");
  const json state = roundtrip(nullptr);
  EXPECT_EQ(state["board"], "6,6,6,6,6,6/0/6,6,6,6,6,6/0 S");
  const json hint = roundtrip({{"type", "hint"}});
  EXPECT_EQ(hint["type"], "hint_result");
  EXPECT_FALSE(schema_violation(hint));

  ws.close(beast::websocket::close_code::normal);
  server.stop();
}
