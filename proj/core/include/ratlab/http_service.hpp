#pragma once

#include <memory>
#include <string>

#include "ratlab/session.hpp"

namespace ratlab::service {

struct ServerOptions {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  std::string cors_origin = "*";
};

// JSON over HTTP:
//   POST /games                 {d, start, engine_moves_first?, engine_style?}
//   GET  /games/{id}
//   POST /games/{id}/moves      {subtraction, ply?}
//   GET  /games/{id}/hint
// Errors are {code, message, detail}.
class HttpService {
 public:
  HttpService(SessionStore& store, ServerOptions options);
  ~HttpService();
  HttpService(const HttpService&) = delete;
  HttpService& operator=(const HttpService&) = delete;

  // Binds the socket; returns the bound port. Throws kInvalidArgument when
  // the address is unavailable.
  int bind();
  // Serves until stop(). Call bind() first.
  void serve();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Codec shared with the command line.
std::string session_to_json(const GameSession& s);

}  // namespace ratlab::service
