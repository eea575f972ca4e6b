#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <httplib.h>

#include "sutra/engine.hpp"
#include "sutra/serialize.hpp"

// Stateless HTTP/JSON facade over the engine.
//
//   GET  /api/health           {"status":"ok"}
//   GET  /api/methods          method descriptors, registry order
//   GET  /api/methods/{id}     one descriptor, 404 UNKNOWN_METHOD otherwise
//   POST /api/trace            {"operation", "operands", "options"} -> comparison report
//                              {"methodId",  "operands", "options"} -> single trace
//
// Every body is canonical JSON. Routing lives in handle() so it can be tested
// without a socket; serve() only binds it to cpp-httplib.

namespace sutra::service {

struct Config {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::size_t maxDigits = kDefaultMaxDigits;
  std::string corsOrigin = "*";
};

struct Response {
  int status = 200;
  std::string body;
  std::string contentType = "application/json";
};

namespace detail {

inline Response error(int status, std::string_view code, const std::string& message, Json extra = Json::object()) {
  extra["code"] = code;
  extra["message"] = message;
  return {status, canonicalDump(extra)};
}

inline Response badRequest(const std::string& message) { return error(400, "BAD_REQUEST", message); }

inline Options parseOptions(const Json& body, const Config& config) {
  Options options;
  options.maxDigits = config.maxDigits;
  if (!body.contains("options") || body.at("options").is_null()) return options;
  const Json& o = body.at("options");
  if (!o.is_object()) throw std::invalid_argument("options must be an object");
  if (o.contains("maxDigits")) {
    const Json& m = o.at("maxDigits");
    if (!m.is_number_unsigned() || m.get<std::size_t>() == 0) {
      throw std::invalid_argument("options.maxDigits must be a positive integer");
    }
    options.maxDigits = m.get<std::size_t>();
  }
  if (o.contains("latentDisplay")) {
    const Json& l = o.at("latentDisplay");
    auto display = l.is_string() ? parseLatentDisplay(l.get<std::string>()) : std::nullopt;
    if (!display) throw std::invalid_argument("options.latentDisplay must be vedic, both or none");
    options.latentDisplay = *display;
  }
  return options;
}

inline Response handleTrace(std::string_view rawBody, const Config& config) {
  Json body;
  try {
    body = Json::parse(rawBody);
  } catch (const Json::exception&) {
    return badRequest("request body is not valid JSON");
  }
  if (!body.is_object()) return badRequest("request body must be a JSON object");
  const bool byOperation = body.contains("operation");
  const bool byMethod = body.contains("methodId");
  if (byOperation == byMethod) return badRequest("give exactly one of \"operation\" or \"methodId\"");
  if (!body.contains("operands") || !body.at("operands").is_array()) {
    return badRequest("\"operands\" must be an array of digit strings");
  }

  Options options;
  try {
    options = parseOptions(body, config);
  } catch (const std::invalid_argument& e) {
    return badRequest(e.what());
  }

  std::vector<DigitString> operands;
  for (const auto& item : body.at("operands")) {
    if (!item.is_string()) return badRequest("\"operands\" must be an array of digit strings");
    try {
      operands.push_back(parseOperand(item.get<std::string>()));
    } catch (const ParseError& e) {
      return error(400, codes::kParseError, e.what(),
                   Json{{"operand", operands.size()}, {"position", e.position()}});
    }
  }

  try {
    if (byMethod) {
      if (!body.at("methodId").is_string()) return badRequest("\"methodId\" must be a string");
      return {200, canonicalSerialize(buildTrace(body.at("methodId").get<std::string>(), operands, options))};
    }
    const Json& opField = body.at("operation");
    const auto op = opField.is_string() ? parseOperation(opField.get<std::string>()) : std::nullopt;
    if (!op) return badRequest("\"operation\" must be one of add, subtract, multiply, sqrt");
    return {200, canonicalSerialize(buildComparison(*op, operands, options))};
  } catch (const ApplicabilityError& e) {
    std::string code = codes::kArity;
    for (const auto& w : e.warnings()) {
      if (w.blocking) {
        code = w.code;
        break;
      }
    }
    return error(422, code, e.what(), Json{{"warnings", e.warnings()}});
  } catch (const UnknownMethodError& e) {
    return error(404, codes::kUnknownMethod, e.what());
  }
}

}  // namespace detail

inline Response handle(std::string_view method, std::string_view path, std::string_view body,
                       const Config& config = {}) {
  constexpr std::string_view kMethods = "/api/methods";
  try {
    if (path == "/api/health") {
      if (method != "GET") return detail::error(405, "METHOD_NOT_ALLOWED", "use GET");
      return {200, canonicalDump(Json{{"status", "ok"}})};
    }
    if (path == kMethods) {
      if (method != "GET") return detail::error(405, "METHOD_NOT_ALLOWED", "use GET");
      return {200, canonicalSerialize(listMethods())};
    }
    if (path.starts_with(kMethods) && path.size() > kMethods.size() + 1 && path[kMethods.size()] == '/') {
      if (method != "GET") return detail::error(405, "METHOD_NOT_ALLOWED", "use GET");
      const std::string id(path.substr(kMethods.size() + 1));
      try {
        return {200, canonicalSerialize(describeMethod(id))};
      } catch (const UnknownMethodError& e) {
        return detail::error(404, codes::kUnknownMethod, e.what());
      }
    }
    if (path == "/api/trace") {
      if (method != "POST") return detail::error(405, "METHOD_NOT_ALLOWED", "use POST");
      return detail::handleTrace(body, config);
    }
    return detail::error(404, "NOT_FOUND", "no such endpoint");
  } catch (const std::exception& e) {
    return detail::error(500, "INTERNAL", e.what());
  }
}

// Registers every route on `server`. The server object owns no engine state.
inline void mount(httplib::Server& server, const Config& config) {
  auto forward = [config](const httplib::Request& req, httplib::Response& res) {
    const Response r = handle(req.method, req.path, req.body, config);
    res.status = r.status;
    res.set_content(r.body, r.contentType);
  };
  server.Get("/api/health", forward);
  server.Get("/api/methods", forward);
  server.Get(R"(/api/methods/(.+))", forward);
  server.Post("/api/trace", forward);
  server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  server.set_post_routing_handler([origin = config.corsOrigin](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", origin);
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
  });
}

// Blocks serving requests until the process is stopped. Returns false if the
// address could not be bound.
inline bool serve(const Config& config) {
  httplib::Server server;
  mount(server, config);
  return server.listen(config.host, config.port);
}

}  // namespace sutra::service
