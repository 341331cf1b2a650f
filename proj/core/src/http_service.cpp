#include "ratlab/http_service.hpp"

#include <httplib.h>

#include <nlohmann/json.hpp>

namespace ratlab::service {
namespace {

using nlohmann::json;

json vec(const HeapVector& v) { return std::vector<Int>(v.entries().begin(), v.entries().end()); }

json session_json(const GameSession& s) {
  json history = json::array();
  for (const auto& h : s.history) {
    history.push_back({{"mover", mover_name(h.mover)}, {"subtraction", vec(h.subtraction)},
                       {"position", vec(h.position)}});
  }
  return json{{"id", s.id},
              {"d", s.d},
              {"position", vec(s.position)},
              {"history", std::move(history)},
              {"turn", mover_name(s.turn)},
              {"status", status_name(s.status)},
              {"engine_style", style_name(s.engine_style)},
              {"ply", s.ply()}};
}

json trace_json(const ConditionTrace& t) {
  json failed = nullptr;
  if (t.failed_column) failed = *t.failed_column;
  return json{{"holds", t.holds()}, {"congruence", t.congruence}, {"failed_column", failed}};
}

json verdict_json(const MoveVerdict& v) {
  return json{{"status", verdict_name(v.status)},
              {"allowed", v.allowed()},
              {"explanation", v.explanation()},
              {"condition_a", trace_json(v.condition_a)},
              {"condition_b", trace_json(v.condition_b)}};
}

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownSession: return 404;
    case ErrorCode::kNotYourTurn:
    case ErrorCode::kGameOver:
    case ErrorCode::kConflict: return 409;
    case ErrorCode::kNegativeSubtraction: return 422;
    case ErrorCode::kUnreachableTarget:
    case ErrorCode::kOverflow: return 500;
    default: return 400;
  }
}

void send_error(httplib::Response& res, int status, std::string_view code, const std::string& message,
                json detail = nullptr) {
  res.status = status;
  res.set_content(json{{"code", code}, {"message", message}, {"detail", std::move(detail)}}.dump(),
                  "application/json");
}

HeapVector vector_field(const json& body, const char* key) {
  if (!body.contains(key) || !body[key].is_array()) {
    throw Error(ErrorCode::kInvalidArgument, std::string("field '") + key + "' must be an array of integers");
  }
  std::vector<Int> out;
  for (const auto& v : body[key]) {
    if (!v.is_number_integer()) {
      throw Error(ErrorCode::kInvalidArgument, std::string("field '") + key + "' must hold integers");
    }
    out.push_back(v.get<Int>());
  }
  return HeapVector(std::move(out));
}

// Wraps a handler so that every failure becomes an error body.
template <typename Fn>
httplib::Server::Handler guarded(Fn fn) {
  return [fn](const httplib::Request& req, httplib::Response& res) {
    try {
      fn(req, res);
    } catch (const Error& e) {
      json detail = nullptr;
      if (req.matches.size() > 1) detail = json{{"id", req.matches[1].str()}};
      send_error(res, http_status(e.code()), error_code_name(e.code()), e.what(), std::move(detail));
    } catch (const json::exception& e) {
      send_error(res, 400, "invalid_json", "request body is not valid JSON", e.what());
    } catch (const std::exception& e) {
      send_error(res, 500, "internal", e.what());
    }
  };
}

json parse_body(const httplib::Request& req) {
  if (req.body.empty()) return json::object();
  json body = json::parse(req.body);
  if (!body.is_object()) throw Error(ErrorCode::kInvalidArgument, "request body must be a JSON object");
  return body;
}

}  // namespace

std::string session_to_json(const GameSession& s) { return session_json(s).dump(); }

struct HttpService::Impl {
  SessionStore& store;
  ServerOptions options;
  httplib::Server server;
  int port = -1;

  Impl(SessionStore& s, ServerOptions o) : store(s), options(std::move(o)) {}

  void routes() {
    // httplib also sets SO_REUSEPORT, which would let a second server share the port.
    server.set_socket_options([](socket_t sock) {
      int yes = 1;
      setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const char*>(&yes), sizeof(yes));
    });
    server.set_default_headers({{"Access-Control-Allow-Origin", options.cors_origin},
                                {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                                {"Access-Control-Allow-Headers", "Content-Type"}});
    server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

    server.Post("/games", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const json body = parse_body(req);
      CreateRequest r;
      if (!body.contains("d") || !body["d"].is_number_integer()) {
        throw Error(ErrorCode::kInvalidArgument, "field 'd' must be an integer");
      }
      r.d = body["d"].get<int>();
      r.start = vector_field(body, "start");
      r.engine_moves_first = body.value("engine_moves_first", false);
      const std::string style = body.value("engine_style", std::string("optimal"));
      auto parsed = parse_style(style);
      if (!parsed) throw Error(ErrorCode::kInvalidArgument, "engine_style must be 'optimal' or 'teasing'");
      r.engine_style = *parsed;
      res.status = 201;
      res.set_content(session_json(store.create(r)).dump(), "application/json");
    }));

    server.Get(R"(/games/([^/]+))", guarded([this](const httplib::Request& req, httplib::Response& res) {
      res.set_content(session_json(store.get(req.matches[1].str())).dump(), "application/json");
    }));

    server.Post(R"(/games/([^/]+)/moves)", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const json body = parse_body(req);
      const HeapVector sub = vector_field(body, "subtraction");
      std::optional<std::size_t> ply;
      if (body.contains("ply") && !body["ply"].is_null()) ply = body["ply"].get<std::size_t>();
      const SubmitResult r = store.submit(req.matches[1].str(), sub, ply);
      res.set_content(
          json{{"accepted", r.accepted}, {"verdict", verdict_json(r.verdict)}, {"session", session_json(r.session)}}
              .dump(),
          "application/json");
    }));

    server.Get(R"(/games/([^/]+)/hint)", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const Hint h = store.hint(req.matches[1].str());
      json out{{"status", h.over ? "over" : (h.p_position ? "P" : "N")}, {"subtraction", nullptr},
               {"target", nullptr}};
      if (h.subtraction) out["subtraction"] = vec(*h.subtraction);
      if (h.target) out["target"] = vec(*h.target);
      res.set_content(out.dump(), "application/json");
    }));

    server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
      if (res.body.empty()) send_error(res, res.status, "not_found", "no such route");
    });
  }
};

HttpService::HttpService(SessionStore& store, ServerOptions options)
    : impl_(std::make_unique<Impl>(store, std::move(options))) {
  impl_->routes();
}

HttpService::~HttpService() { stop(); }

int HttpService::bind() {
  if (impl_->options.port == 0) {
    impl_->port = impl_->server.bind_to_any_port(impl_->options.host);
  } else if (impl_->server.bind_to_port(impl_->options.host, impl_->options.port)) {
    impl_->port = impl_->options.port;
  }
  if (impl_->port <= 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot listen on " + impl_->options.host + ":" + std::to_string(impl_->options.port));
  }
  return impl_->port;
}

void HttpService::serve() { impl_->server.listen_after_bind(); }

void HttpService::stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace ratlab::service
