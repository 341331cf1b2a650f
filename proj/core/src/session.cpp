#include "ratlab/session.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "ratlab/matrices.hpp"

namespace ratlab::service {
namespace {

HeapVector unit(std::size_t size, std::size_t j) {
  std::vector<Int> e(size, 0);
  e[j] = 1;
  return HeapVector(std::move(e));
}

HeapVector smallest_unit_move(const HeapVector& x) {
  const Dimension d = x.dimension();
  // (0,..,0,1) sorts first, so scan from the last heap.
  for (std::size_t j = x.size(); j-- > 0;) {
    if (x[j] == 0) continue;
    HeapVector s = unit(x.size(), j);
    if (classify_subtraction(d, s).allowed()) return s;
  }
  throw Error(ErrorCode::kUnreachableTarget, "no unit move from " + x.to_string());
}

bool within(const HeapVector& v, const HeapVector& limit, Int slack) {
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] > limit[j] + slack) return false;
  }
  return true;
}

// Proper shortcuts and rat vectors with every coordinate at most x_j + 1.
std::vector<HeapVector> anchors(const HeapVector& x) {
  const Dimension d = x.dimension();
  std::vector<HeapVector> out;
  for (RatIndex n = 1;; ++n) {
    HeapVector r = rat_vector(d, n);
    if (r.at(d.value()) > x.at(d.value()) + 1) break;
    if (within(r, x, 1)) out.push_back(std::move(r));
  }
  const ShortcutMatrix f = build_shortcut_matrix(d);
  for (std::size_t row = 0; row < f.rows.rows(); ++row) {
    for (Int t = 0;; ++t) {
      HeapVector s = f.rows.evaluate(row, t);
      if (s.at(d.value()) > x.at(d.value()) + 1) break;
      if (!s.is_zero() && within(s, x, 1)) out.push_back(std::move(s));
    }
  }
  return out;
}

HeapVector teasing_move(const HeapVector& x) {
  const Dimension d = x.dimension();
  // distance -> candidate subtractions; std::set keeps them lexicographic.
  std::map<int, std::set<HeapVector>> candidates;
  auto consider = [&](std::vector<Int> y, int distance) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j] < 0 || y[j] > x[j]) return;
    }
    const HeapVector target(std::move(y));
    if (target == x) return;
    candidates[distance].insert(x - target);
  };
  for (const HeapVector& a : anchors(x)) {
    std::vector<Int> y(a.entries().begin(), a.entries().end());
    consider(y, 0);
    for (std::size_t j = 0; j < y.size(); ++j) {
      for (Int delta : {-1, 1}) {
        std::vector<Int> z = y;
        z[j] += delta;
        consider(std::move(z), 1);
      }
    }
  }
  for (const auto& [distance, subtractions] : candidates) {
    for (const HeapVector& s : subtractions) {
      if (classify_subtraction(d, s).allowed()) return s;
    }
  }
  return smallest_unit_move(x);
}

nlohmann::json vec(const HeapVector& v) { return std::vector<Int>(v.entries().begin(), v.entries().end()); }

}  // namespace

std::string_view mover_name(Mover m) { return m == Mover::kHuman ? "human" : "engine"; }

std::string_view status_name(GameStatus s) {
  switch (s) {
    case GameStatus::kOngoing: return "ongoing";
    case GameStatus::kHumanWon: return "human_won";
    case GameStatus::kEngineWon: return "engine_won";
  }
  return "?";
}

std::string_view style_name(EngineStyle s) { return s == EngineStyle::kOptimal ? "optimal" : "teasing"; }

std::optional<EngineStyle> parse_style(std::string_view name) {
  if (name == "optimal") return EngineStyle::kOptimal;
  if (name == "teasing") return EngineStyle::kTeasing;
  return std::nullopt;
}

HeapVector engine_move(const HeapVector& x, EngineStyle style) {
  if (x.is_zero()) throw Error(ErrorCode::kGameOver, "no moves from the empty position");
  if (auto move = winning_move(x)) return move->subtraction;
  return style == EngineStyle::kTeasing ? teasing_move(x) : smallest_unit_move(x);
}

SessionStore::SessionStore(std::optional<std::filesystem::path> event_log) {
  if (event_log) {
    log_.emplace(*event_log, std::ios::app);
    if (!*log_) throw Error(ErrorCode::kInvalidArgument, "cannot open event log " + event_log->string());
  }
}

void SessionStore::log_event(const std::string& line) {
  if (!log_) return;
  std::lock_guard lock(log_mutex_);
  *log_ << line << '\n';
  log_->flush();
}

void SessionStore::play_engine(GameSession& s) {
  const HeapVector sub = engine_move(s.position, s.engine_style);
  s.position = s.position - sub;
  s.history.push_back(HistoryEntry{Mover::kEngine, sub, s.position});
  s.turn = Mover::kHuman;
  if (s.position.is_zero()) s.status = GameStatus::kEngineWon;
  log_event(nlohmann::json{{"event", "move"}, {"id", s.id}, {"ply", s.ply()}, {"mover", "engine"},
                           {"subtraction", vec(sub)}, {"position", vec(s.position)}}
                .dump());
}

GameSession SessionStore::create(const CreateRequest& request) {
  if (request.d < Dimension::kMin || request.d > kMaxSessionDimension) {
    throw Error(ErrorCode::kInvalidArgument, "sessions support 2 <= d <= " + std::to_string(kMaxSessionDimension));
  }
  if (static_cast<int>(request.start.size()) != request.d) {
    throw Error(ErrorCode::kDimensionMismatch, "start has " + std::to_string(request.start.size()) +
                                                   " heaps, expected " + std::to_string(request.d));
  }
  for (Int v : request.start.entries()) {
    if (v > kMaxSessionCoordinate) {
      throw Error(ErrorCode::kInvalidArgument, "heap sizes are capped at " + std::to_string(kMaxSessionCoordinate));
    }
  }
  auto slot = std::make_unique<Slot>();
  GameSession& s = slot->session;
  s.id = "g" + std::to_string(next_id_.fetch_add(1));
  s.d = request.d;
  s.position = request.start;
  s.engine_style = request.engine_style;
  s.turn = request.engine_moves_first ? Mover::kEngine : Mover::kHuman;
  log_event(nlohmann::json{{"event", "create"}, {"id", s.id}, {"d", s.d}, {"start", vec(s.position)},
                           {"engine_moves_first", request.engine_moves_first},
                           {"engine_style", style_name(s.engine_style)}}
                .dump());
  if (s.position.is_zero()) {
    // Whoever is to act cannot move.
    s.status = s.turn == Mover::kEngine ? GameStatus::kHumanWon : GameStatus::kEngineWon;
  } else if (s.turn == Mover::kEngine) {
    play_engine(s);
  }
  GameSession copy = s;
  std::unique_lock lock(map_mutex_);
  sessions_.emplace(copy.id, std::move(slot));
  return copy;
}

SessionStore::Slot& SessionStore::slot(const std::string& id) const {
  std::shared_lock lock(map_mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw Error(ErrorCode::kUnknownSession, "no session '" + id + "'");
  return *it->second;
}

GameSession SessionStore::get(const std::string& id) const {
  Slot& s = slot(id);
  std::lock_guard lock(s.mutex);
  return s.session;
}

SubmitResult SessionStore::submit(const std::string& id, const HeapVector& subtraction,
                                  std::optional<std::size_t> expected_ply) {
  Slot& slot_ref = slot(id);
  std::lock_guard lock(slot_ref.mutex);
  GameSession& s = slot_ref.session;
  if (expected_ply && *expected_ply != s.ply()) {
    throw Error(ErrorCode::kConflict, "expected ply " + std::to_string(*expected_ply) + " but the game is at ply " +
                                          std::to_string(s.ply()));
  }
  if (s.status != GameStatus::kOngoing) throw Error(ErrorCode::kGameOver, "the game is over");
  if (s.turn != Mover::kHuman) throw Error(ErrorCode::kNotYourTurn, "it is the engine's turn");
  require_same_size(s.position, subtraction);
  const HeapVector next = s.position - subtraction;

  SubmitResult result;
  result.verdict = classify_subtraction(Dimension(s.d), subtraction);
  result.accepted = result.verdict.allowed();
  if (result.accepted) {
    s.position = next;
    s.history.push_back(HistoryEntry{Mover::kHuman, subtraction, s.position});
    log_event(nlohmann::json{{"event", "move"}, {"id", s.id}, {"ply", s.ply()}, {"mover", "human"},
                             {"subtraction", vec(subtraction)}, {"position", vec(s.position)}}
                  .dump());
    if (s.position.is_zero()) {
      s.status = GameStatus::kHumanWon;
    } else {
      s.turn = Mover::kEngine;
      play_engine(s);
    }
  } else {
    log_event(nlohmann::json{{"event", "rejected"}, {"id", s.id}, {"ply", s.ply()},
                             {"subtraction", vec(subtraction)}, {"verdict", verdict_name(result.verdict.status)}}
                  .dump());
  }
  result.session = s;
  return result;
}

Hint SessionStore::hint(const std::string& id) const {
  const GameSession s = get(id);
  Hint h;
  if (s.status != GameStatus::kOngoing) {
    h.over = true;
    return h;
  }
  auto move = winning_move(s.position);
  h.p_position = !move.has_value();
  if (move) {
    h.subtraction = move->subtraction;
    h.target = move->target;
  }
  return h;
}

std::size_t SessionStore::size() const {
  std::shared_lock lock(map_mutex_);
  return sessions_.size();
}

}  // namespace ratlab::service
