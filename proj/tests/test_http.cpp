#include <gtest/gtest.h>

#include <httplib.h>

#include <nlohmann/json.hpp>
#include <thread>

#include "ratlab/http_service.hpp"

using namespace ratlab;
using namespace ratlab::service;
using nlohmann::json;

namespace {

class HttpTest : public ::testing::Test {
 protected:
  void SetUp() override {
    ServerOptions options;
    options.port = 0;
    options.cors_origin = "http://localhost:5173";
    service_ = std::make_unique<HttpService>(store_, options);
    port_ = service_->bind();
    thread_ = std::thread([this] { service_->serve(); });
    client_ = std::make_unique<httplib::Client>("127.0.0.1", port_);
    client_->set_connection_timeout(5);
  }

  void TearDown() override {
    service_->stop();
    thread_.join();
  }

  httplib::Result post(const std::string& path, const json& body) {
    return client_->Post(path, body.dump(), "application/json");
  }

  std::string create(const json& body) {
    auto res = post("/games", body);
    EXPECT_TRUE(res);
    EXPECT_EQ(res->status, 201);
    return json::parse(res->body)["id"];
  }

  SessionStore store_;
  std::unique_ptr<HttpService> service_;
  int port_ = 0;
  std::thread thread_;
  std::unique_ptr<httplib::Client> client_;
};

}  // namespace

TEST_F(HttpTest, CreateEngineFirst) {
  auto res = post("/games", {{"d", 4}, {"start", {7, 13, 27, 53}}, {"engine_moves_first", true}});
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 201);
  const json s = json::parse(res->body);
  EXPECT_EQ(s["position"], json({5, 10, 19, 38}));
  EXPECT_EQ(s["turn"], "human");
  EXPECT_EQ(s["status"], "ongoing");
  EXPECT_EQ(s["engine_style"], "optimal");
  EXPECT_EQ(s["history"][0]["mover"], "engine");
  EXPECT_EQ(s["history"][0]["subtraction"], json({2, 3, 8, 15}));
  EXPECT_EQ(res->get_header_value("Access-Control-Allow-Origin"), "http://localhost:5173");
}

TEST_F(HttpTest, PlayAndInspect) {
  const std::string id = create({{"d", 3}, {"start", {1, 3, 7}}});

  auto hint = client_->Get("/games/" + id + "/hint");
  ASSERT_TRUE(hint);
  EXPECT_EQ(json::parse(hint->body), json({{"status", "N"}, {"subtraction", {0, 1, 3}}, {"target", {1, 2, 4}}}));

  auto bad = post("/games/" + id + "/moves", {{"subtraction", {1, 3, 7}}});
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->status, 200);
  const json b = json::parse(bad->body);
  EXPECT_FALSE(b["accepted"]);
  EXPECT_EQ(b["verdict"]["status"], "ForbiddenB");
  EXPECT_TRUE(b["verdict"]["condition_b"]["holds"]);
  EXPECT_NE(b["verdict"]["explanation"].get<std::string>().find("condition b"), std::string::npos);
  EXPECT_EQ(b["session"]["ply"], 0);

  auto good = post("/games/" + id + "/moves", {{"subtraction", {0, 1, 3}}, {"ply", 0}});
  ASSERT_TRUE(good);
  const json g = json::parse(good->body);
  EXPECT_TRUE(g["accepted"]);
  EXPECT_EQ(g["verdict"]["status"], "Allowed");
  EXPECT_EQ(g["session"]["ply"], 2);

  auto get = client_->Get("/games/" + id);
  ASSERT_TRUE(get);
  EXPECT_EQ(json::parse(get->body), g["session"]);
}

TEST_F(HttpTest, ForbiddenA) {
  const std::string id = create({{"d", 3}, {"start", {1, 2, 4}}});
  auto hint = client_->Get("/games/" + id + "/hint");
  EXPECT_EQ(json::parse(hint->body)["status"], "P");
  auto res = post("/games/" + id + "/moves", {{"subtraction", {1, 2, 4}}});
  EXPECT_EQ(json::parse(res->body)["verdict"]["status"], "ForbiddenA");
}

TEST_F(HttpTest, Errors) {
  auto missing = client_->Get("/games/nope");
  ASSERT_TRUE(missing);
  EXPECT_EQ(missing->status, 404);
  const json m = json::parse(missing->body);
  EXPECT_EQ(m["code"], "unknown_session");
  EXPECT_EQ(m["detail"]["id"], "nope");

  auto bad_json = client_->Post("/games", "{", "application/json");
  EXPECT_EQ(bad_json->status, 400);
  EXPECT_EQ(json::parse(bad_json->body)["code"], "invalid_json");

  auto bad_d = post("/games", {{"d", 1}, {"start", {1}}});
  EXPECT_EQ(bad_d->status, 400);
  auto bad_style = post("/games", {{"d", 2}, {"start", {1, 1}}, {"engine_style", "sneaky"}});
  EXPECT_EQ(bad_style->status, 400);

  const std::string id = create({{"d", 3}, {"start", {1, 3, 7}}});
  auto negative = post("/games/" + id + "/moves", {{"subtraction", {2, 0, 0}}});
  EXPECT_EQ(negative->status, 422);
  EXPECT_EQ(json::parse(negative->body)["code"], "negative_subtraction");
  auto stale = post("/games/" + id + "/moves", {{"subtraction", {0, 1, 3}}, {"ply", 4}});
  EXPECT_EQ(stale->status, 409);
  EXPECT_EQ(json::parse(stale->body)["code"], "conflict");

  const std::string over = create({{"d", 2}, {"start", {0, 0}}});
  auto late = post("/games/" + over + "/moves", {{"subtraction", {0, 0}}});
  EXPECT_EQ(late->status, 409);
  EXPECT_EQ(json::parse(late->body)["code"], "game_over");

  auto route = client_->Get("/nothing");
  EXPECT_EQ(route->status, 404);
}

TEST_F(HttpTest, Preflight) {
  auto res = client_->Options("/games");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 204);
  EXPECT_EQ(res->get_header_value("Access-Control-Allow-Origin"), "http://localhost:5173");
  EXPECT_NE(res->get_header_value("Access-Control-Allow-Methods").find("POST"), std::string::npos);
}

TEST_F(HttpTest, ConcurrentMovesOneWins) {
  const std::string id = create({{"d", 3}, {"start", {20, 20, 20}}});
  const json hint = json::parse(client_->Get("/games/" + id + "/hint")->body);
  std::atomic<int> ok{0};
  std::atomic<int> conflicts{0};
  std::vector<std::thread> threads;
  for (int i = 0; i < 6; ++i) {
    threads.emplace_back([&] {
      httplib::Client c("127.0.0.1", port_);
      auto res = c.Post("/games/" + id + "/moves", json{{"subtraction", hint["subtraction"]}, {"ply", 0}}.dump(),
                        "application/json");
      if (res && res->status == 200) ++ok;
      if (res && res->status == 409) ++conflicts;
    });
  }
  for (auto& t : threads) t.join();
  EXPECT_EQ(ok.load(), 1);
  EXPECT_EQ(conflicts.load(), 5);
}

TEST(HttpBind, PortInUse) {
  SessionStore store;
  ServerOptions a;
  a.port = 0;
  HttpService first(store, a);
  ServerOptions b;
  b.port = first.bind();
  HttpService second(store, b);
  EXPECT_THROW(second.bind(), Error);
}
