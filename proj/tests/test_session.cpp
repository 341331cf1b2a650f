#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <random>
#include <thread>

#include "ratlab/session.hpp"

using namespace ratlab;
using namespace ratlab::service;

namespace {

CreateRequest request(HeapVector start, bool engine_first, EngineStyle style = EngineStyle::kOptimal) {
  CreateRequest r;
  r.d = static_cast<int>(start.size());
  r.start = std::move(start);
  r.engine_moves_first = engine_first;
  r.engine_style = style;
  return r;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

// Uniformly random legal subtraction, falling back to a single token.
HeapVector random_move(const HeapVector& x, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 50; ++attempt) {
    std::vector<Int> s(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) s[j] = static_cast<Int>(rng() % static_cast<std::uint64_t>(x[j] + 1));
    const HeapVector v(s);
    if (classify_subtraction(x.dimension(), v).allowed()) return v;
  }
  for (std::size_t j = x.size(); j-- > 0;) {
    if (x[j] == 0) continue;
    std::vector<Int> s(x.size(), 0);
    s[j] = 1;
    if (classify_subtraction(x.dimension(), HeapVector(s)).allowed()) return HeapVector(s);
  }
  ADD_FAILURE() << "no unit move from " << x.to_string();
  return x;
}

}  // namespace

TEST(Session, HumanPlaysWinningLine) {
  SessionStore store;
  const GameSession s = store.create(request(HeapVector{1, 3, 7}, false));
  EXPECT_EQ(s.id, "g1");
  EXPECT_EQ(s.turn, Mover::kHuman);

  const SubmitResult bad = store.submit(s.id, HeapVector{1, 3, 7});
  EXPECT_FALSE(bad.accepted);
  EXPECT_EQ(bad.verdict.status, Verdict::kForbiddenB);
  EXPECT_EQ(bad.session.ply(), 0u);

  const SubmitResult good = store.submit(s.id, HeapVector{0, 1, 3});
  EXPECT_TRUE(good.accepted);
  // The engine answered from (1,2,4).
  ASSERT_EQ(good.session.history.size(), 2u);
  EXPECT_EQ(good.session.history[0].position, (HeapVector{1, 2, 4}));
  EXPECT_EQ(good.session.history[1].mover, Mover::kEngine);
  EXPECT_EQ(good.session.turn, Mover::kHuman);
}

TEST(Session, EngineFirstOnNPosition) {
  SessionStore store;
  const GameSession s = store.create(request(HeapVector{1, 3, 7}, true));
  ASSERT_EQ(s.history.size(), 1u);
  EXPECT_EQ(s.position, (HeapVector{1, 2, 4}));
  EXPECT_EQ(s.turn, Mover::kHuman);
  const Hint h = store.hint(s.id);
  EXPECT_TRUE(h.p_position);
  EXPECT_FALSE(h.subtraction.has_value());
}

TEST(Session, StartAtZero) {
  SessionStore store;
  EXPECT_EQ(store.create(request(HeapVector{0, 0}, false)).status, GameStatus::kEngineWon);
  EXPECT_EQ(store.create(request(HeapVector{0, 0}, true)).status, GameStatus::kHumanWon);
  const GameSession s = store.create(request(HeapVector{0, 0}, false));
  EXPECT_EQ(code_of([&] { store.submit(s.id, HeapVector{0, 1}); }), ErrorCode::kGameOver);
  EXPECT_TRUE(store.hint(s.id).over);
}

TEST(Session, HumanCanWin) {
  SessionStore store;
  const GameSession s = store.create(request(HeapVector{0, 0, 1}, false));
  const Hint h = store.hint(s.id);
  ASSERT_TRUE(h.subtraction.has_value());
  const SubmitResult r = store.submit(s.id, *h.subtraction);
  EXPECT_TRUE(r.accepted);
  EXPECT_EQ(r.session.status, GameStatus::kHumanWon);
}

TEST(Session, Errors) {
  SessionStore store;
  EXPECT_EQ(code_of([&] { store.get("g9"); }), ErrorCode::kUnknownSession);
  EXPECT_EQ(code_of([&] { store.create(request(HeapVector{1, 2, 3, 4, 5, 6, 7, 8, 9}, false)); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { store.create(request(HeapVector{1, 2'000'000}, false)); }), ErrorCode::kInvalidArgument);
  CreateRequest mismatch = request(HeapVector{1, 2}, false);
  mismatch.d = 3;
  EXPECT_EQ(code_of([&] { store.create(mismatch); }), ErrorCode::kDimensionMismatch);

  const GameSession s = store.create(request(HeapVector{1, 3, 7}, false));
  EXPECT_EQ(code_of([&] { store.submit(s.id, HeapVector{2, 0, 0}); }), ErrorCode::kNegativeSubtraction);
  EXPECT_EQ(code_of([&] { store.submit(s.id, HeapVector{1, 0}); }), ErrorCode::kDimensionMismatch);
  EXPECT_EQ(code_of([&] { store.submit(s.id, HeapVector{0, 1, 3}, 5); }), ErrorCode::kConflict);
}

TEST(Session, EngineBeatsRandomPlayer) {
  std::mt19937_64 rng(12345);
  for (EngineStyle style : {EngineStyle::kOptimal, EngineStyle::kTeasing}) {
    SessionStore store;
    int games = 0;
    while (games < 250) {
      const HeapVector start{static_cast<Int>(rng() % 31), static_cast<Int>(rng() % 31),
                             static_cast<Int>(rng() % 31)};
      if (is_p_position(start)) continue;
      ++games;
      GameSession s = store.create(request(start, true, style));
      while (s.status == GameStatus::kOngoing) {
        ASSERT_TRUE(is_p_position(s.position)) << s.position.to_string();
        const SubmitResult r = store.submit(s.id, random_move(s.position, rng), s.ply());
        ASSERT_TRUE(r.accepted);
        s = r.session;
      }
      EXPECT_EQ(s.status, GameStatus::kEngineWon) << start.to_string();
    }
  }
}

TEST(Session, EngineMoveStyles) {
  // At a P-position the optimal engine removes one token.
  const HeapVector unit = engine_move(HeapVector{1, 2, 4}, EngineStyle::kOptimal);
  EXPECT_EQ(unit.total(), 1);
  const HeapVector tease = engine_move(HeapVector{3, 6, 11}, EngineStyle::kTeasing);
  EXPECT_TRUE(classify_subtraction(Dimension(3), tease).allowed());
  EXPECT_EQ(engine_move(HeapVector{1, 3, 7}, EngineStyle::kTeasing), (HeapVector{0, 1, 3}));
}

TEST(Session, ConcurrentSubmitsWithPly) {
  SessionStore store;
  const GameSession s = store.create(request(HeapVector{20, 20, 20}, false));
  const HeapVector sub = *store.hint(s.id).subtraction;
  std::atomic<int> ok{0};
  std::atomic<int> conflicts{0};
  std::vector<std::thread> threads;
  for (int i = 0; i < 8; ++i) {
    threads.emplace_back([&] {
      try {
        if (store.submit(s.id, sub, 0).accepted) ++ok;
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kConflict) ++conflicts;
      }
    });
  }
  for (auto& t : threads) t.join();
  EXPECT_EQ(ok.load(), 1);
  EXPECT_EQ(conflicts.load(), 7);
  EXPECT_EQ(store.get(s.id).ply(), 2u);
}

TEST(Session, ConcurrentGames) {
  SessionStore store;
  std::vector<std::thread> threads;
  for (int i = 0; i < 4; ++i) {
    threads.emplace_back([&store, i] {
      std::mt19937_64 rng(static_cast<std::uint64_t>(i));
      for (int g = 0; g < 20; ++g) {
        GameSession s = store.create(request(HeapVector{1, 3, 7}, true));
        while (s.status == GameStatus::kOngoing) s = store.submit(s.id, random_move(s.position, rng)).session;
      }
    });
  }
  for (auto& t : threads) t.join();
  EXPECT_EQ(store.size(), 80u);
}

TEST(Session, EventLogReplays) {
  const auto path = std::filesystem::temp_directory_path() / "ratlab_session_log.jsonl";
  std::filesystem::remove(path);
  std::string id;
  std::vector<HistoryEntry> history;
  {
    SessionStore store(path);
    GameSession s = store.create(request(HeapVector{1, 3, 7}, false));
    id = s.id;
    store.submit(id, HeapVector{1, 3, 7});
    s = store.submit(id, HeapVector{0, 1, 3}).session;
    history = s.history;
  }
  std::ifstream in(path);
  std::vector<nlohmann::json> moves;
  std::string line;
  bool rejected = false;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    if (j["event"] == "move") moves.push_back(j);
    if (j["event"] == "rejected") rejected = true;
  }
  EXPECT_TRUE(rejected);
  ASSERT_EQ(moves.size(), history.size());
  for (std::size_t k = 0; k < moves.size(); ++k) {
    EXPECT_EQ(moves[k]["mover"], std::string(mover_name(history[k].mover)));
    EXPECT_EQ(moves[k]["position"].get<std::vector<Int>>(),
              std::vector<Int>(history[k].position.entries().begin(), history[k].position.entries().end()));
  }
  std::filesystem::remove(path);
}
