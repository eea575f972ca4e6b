#include <chrono>
#include <string>
#include <thread>

#include <gtest/gtest.h>

#include "sutra/cli.hpp"
#include "sutra/service.hpp"

using namespace sutra;

namespace {

Json bodyOf(const service::Response& r) { return Json::parse(r.body); }

service::Response post(const std::string& body) { return service::handle("POST", "/api/trace", body); }

}  // namespace

TEST(Service, HealthAndMethods) {
  EXPECT_EQ(service::handle("GET", "/api/health", "").body, "{\"status\":\"ok\"}");
  const auto methods = service::handle("GET", "/api/methods", "");
  EXPECT_EQ(methods.status, 200);
  EXPECT_EQ(methods.body, canonicalSerialize(listMethods()));
  EXPECT_EQ(service::handle("GET", "/api/methods/vedic.sqrt.duplex", "").status, 200);
  const auto unknown = service::handle("GET", "/api/methods/nope", "");
  EXPECT_EQ(unknown.status, 404);
  EXPECT_EQ(bodyOf(unknown).at("code"), "UNKNOWN_METHOD");
  EXPECT_EQ(service::handle("POST", "/api/methods", "").status, 405);
  EXPECT_EQ(service::handle("GET", "/api/other", "").status, 404);
}

TEST(Service, TraceByMethodMatchesCliBytes) {
  const auto r = post(R"({"methodId":"vedic.sqrt.duplex","operands":["2026"]})");
  ASSERT_EQ(r.status, 200);
  std::ostringstream out, err;
  cli::TraceArgs args;
  args.method = "vedic.sqrt.duplex";
  args.operands = "2026";
  args.format = cli::Format::Json;
  ASSERT_EQ(cli::runTrace(args, out, err), 0);
  EXPECT_EQ(r.body, out.str());
}

TEST(Service, ComparisonByOperation) {
  const auto r = post(R"({"operation":"multiply","operands":["12","345"],"options":{"latentDisplay":"both"}})");
  ASSERT_EQ(r.status, 200);
  const Json j = bodyOf(r);
  EXPECT_EQ(j.at("deltas").at("digitMultiplications"), 3);
  EXPECT_EQ(j.at("vedic").at("latentDisplay"), "both");
}

TEST(Service, ErrorResponses) {
  EXPECT_EQ(post("not json").status, 400);
  EXPECT_EQ(post(R"({"operands":["1"]})").status, 400);
  EXPECT_EQ(post(R"({"operation":"add","methodId":"x","operands":["1"]})").status, 400);
  EXPECT_EQ(post(R"({"operation":"divide","operands":["1","2"]})").status, 400);

  const auto parse = post(R"({"operation":"add","operands":["1","2x"]})");
  EXPECT_EQ(parse.status, 400);
  EXPECT_EQ(bodyOf(parse).at("code"), "PARSE_ERROR");
  EXPECT_EQ(bodyOf(parse).at("operand"), 1);
  EXPECT_EQ(bodyOf(parse).at("position"), 1);

  const auto negative = post(R"({"operation":"subtract","operands":["1","2"]})");
  EXPECT_EQ(negative.status, 422);
  EXPECT_EQ(bodyOf(negative).at("code"), "NEGATIVE_RESULT");
  EXPECT_FALSE(bodyOf(negative).at("warnings").empty());

  EXPECT_EQ(bodyOf(post(R"({"operation":"sqrt","operands":["1","2"]})")).at("code"), "ARITY");
  const std::string big(51, '7');
  EXPECT_EQ(bodyOf(post(R"({"operation":"add","operands":[")" + big + R"(","1"]})")).at("code"), "OPERAND_TOO_LONG");
  EXPECT_EQ(post(R"({"methodId":"nope","operands":["1"]})").status, 404);
  EXPECT_EQ(service::handle("GET", "/api/trace", "").status, 405);
}

TEST(Service, RealServerRoundTrip) {
  httplib::Server server;
  service::Config config;
  config.corsOrigin = "http://localhost:5173";
  service::mount(server, config);
  const int port = server.bind_to_any_port("127.0.0.1");
  ASSERT_GT(port, 0);
  std::thread worker([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  httplib::Client client("127.0.0.1", port);
  const auto health = client.Get("/api/health");
  ASSERT_TRUE(health);
  EXPECT_EQ(health->status, 200);
  EXPECT_EQ(health->get_header_value("Access-Control-Allow-Origin"), "http://localhost:5173");

  const std::string body = R"({"methodId":"traditional.multiply.long","operands":["12","34"]})";
  const auto traced = client.Post("/api/trace", body, "application/json");
  ASSERT_TRUE(traced);
  EXPECT_EQ(traced->status, 200);
  EXPECT_EQ(traced->body, service::handle("POST", "/api/trace", body).body);

  const auto blocked = client.Post("/api/trace", R"({"operation":"subtract","operands":["1","2"]})", "application/json");
  ASSERT_TRUE(blocked);
  EXPECT_EQ(blocked->status, 422);

  const auto preflight = client.Options("/api/trace");
  ASSERT_TRUE(preflight);
  EXPECT_EQ(preflight->status, 204);

  server.stop();
  worker.join();
}
