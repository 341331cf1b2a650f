#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ratlab/rules.hpp"
#include "ratlab/types.hpp"

namespace ratlab::service {

enum class Mover { kHuman, kEngine };
enum class GameStatus { kOngoing, kHumanWon, kEngineWon };
enum class EngineStyle { kOptimal, kTeasing };

std::string_view mover_name(Mover m);          // "human", "engine"
std::string_view status_name(GameStatus s);    // "ongoing", "human_won", "engine_won"
std::string_view style_name(EngineStyle s);    // "optimal", "teasing"
std::optional<EngineStyle> parse_style(std::string_view name);

struct HistoryEntry {
  Mover mover = Mover::kHuman;
  HeapVector subtraction;
  HeapVector position;  // after the move
};

struct GameSession {
  std::string id;
  int d = 2;
  HeapVector position;
  std::vector<HistoryEntry> history;
  Mover turn = Mover::kHuman;
  GameStatus status = GameStatus::kOngoing;
  EngineStyle engine_style = EngineStyle::kOptimal;

  std::size_t ply() const noexcept { return history.size(); }
};

struct CreateRequest {
  int d = 3;
  HeapVector start;
  bool engine_moves_first = false;
  EngineStyle engine_style = EngineStyle::kOptimal;
};

struct SubmitResult {
  bool accepted = false;
  MoveVerdict verdict;
  GameSession session;
};

struct Hint {
  bool over = false;
  bool p_position = false;
  std::optional<HeapVector> subtraction;
  std::optional<HeapVector> target;
};

inline constexpr int kMaxSessionDimension = 8;
inline constexpr Int kMaxSessionCoordinate = 1'000'000;

// The engine's subtraction from a nonzero position. N-positions use
// winning_move. At P-positions Optimal takes the smallest legal unit move and
// Teasing lands on or next to a proper shortcut or rat vector, minimizing the
// L1 distance and then the subtraction lexicographically.
HeapVector engine_move(const HeapVector& x, EngineStyle style);

// In-memory sessions. Each session has its own mutex, so moves on one game
// serialize while different games proceed independently.
class SessionStore {
 public:
  explicit SessionStore(std::optional<std::filesystem::path> event_log = std::nullopt);

  GameSession create(const CreateRequest& request);
  GameSession get(const std::string& id) const;
  // expected_ply, when given, must equal the current ply or kConflict is thrown.
  SubmitResult submit(const std::string& id, const HeapVector& subtraction,
                      std::optional<std::size_t> expected_ply = std::nullopt);
  Hint hint(const std::string& id) const;
  std::size_t size() const;

 private:
  struct Slot {
    mutable std::mutex mutex;
    GameSession session;
  };

  Slot& slot(const std::string& id) const;
  void play_engine(GameSession& s);
  void log_event(const std::string& line);

  mutable std::shared_mutex map_mutex_;
  std::unordered_map<std::string, std::unique_ptr<Slot>> sessions_;
  std::atomic<std::uint64_t> next_id_{1};

  std::mutex log_mutex_;
  std::optional<std::ofstream> log_;
};

}  // namespace ratlab::service
