#include <gtest/gtest.h>

#include "ratlab/grundy.hpp"
#include "ratlab/published.hpp"
#include "ratlab/rules.hpp"

using namespace ratlab;

namespace {

std::vector<SumComponent> with_nim(std::initializer_list<Int> heaps, HeapVector rat) {
  std::vector<SumComponent> out;
  for (Int h : heaps) out.push_back(SumComponent::nim(h));
  out.push_back(SumComponent::rat(std::move(rat)));
  return out;
}

}  // namespace

TEST(GrundyFast, Examples) {
  EXPECT_EQ(grundy_fast(HeapVector{1, 2}).value, 0);
  EXPECT_EQ(grundy_fast(HeapVector{2, 2}).value, 4);
  EXPECT_EQ(grundy_fast(HeapVector{3, 0, 5, 6}).value, 14);
  EXPECT_EQ(grundy_fast(HeapVector{0, 0, 0}).value, 0);
  EXPECT_EQ(grundy_fast(HeapVector{1, 2}).method, GrundyMethod::kFastFormula);
}

TEST(GrundyFast, VerifiedBounds) {
  EXPECT_EQ(grundy_verified_bound(Dimension(2)), (HeapVector{4, 4}));
  EXPECT_EQ(grundy_verified_bound(Dimension(3)), (HeapVector{16, 16, 16}));
  EXPECT_FALSE(grundy_verified_bound(Dimension(5)).has_value());
}

TEST(GrundyMex, AgreesInsideVerifiedBounds) {
  for (int d = 2; d <= 3; ++d) {
    const HeapVector bound = *grundy_verified_bound(Dimension(d));
    const oracle::SolveTable t = oracle::mex_grundy(oracle::Box(bound));
    for (std::size_t i = 0; i < t.box.cells(); ++i) {
      const HeapVector x = t.box.at(i);
      ASSERT_EQ((*t.grundy)[i], grundy_fast(x).value) << x.to_string();
    }
  }
}

TEST(GrundyMex, AgreesForFourHeaps) {
  const oracle::SolveTable t = oracle::mex_grundy(oracle::Box::cube(Dimension(4), 6));
  for (std::size_t i = 0; i < t.box.cells(); ++i) {
    ASSERT_EQ((*t.grundy)[i], grundy_fast(t.box.at(i)).value) << t.box.at(i).to_string();
  }
}

// With two heaps the total-count formula breaks at (1, 3k + 2): reaching
// (0, 3k) would take the forbidden subtraction (1, 2).
TEST(GrundyMex, TwoHeapExceptions) {
  const oracle::SolveTable t = oracle::mex_grundy(oracle::Box(HeapVector{1, 62}));
  for (Int k = 1; 3 * k + 2 <= 62; ++k) {
    const HeapVector x{1, 3 * k + 2};
    EXPECT_EQ(t.grundy_at(x), 3 * k) << x.to_string();
    EXPECT_EQ(grundy_fast(x).value, 3 * k + 3);
  }
  EXPECT_EQ(grundy_mex(HeapVector{1, 5}).value, 3);
  EXPECT_EQ(grundy_mex(HeapVector{1, 5}).method, GrundyMethod::kMexOracle);
}

TEST(GrundyMex, PublishedTableElsewhere) {
  const auto& table = published::grundy_table_2heaps();
  const oracle::SolveTable t = oracle::mex_grundy(oracle::Box(HeapVector{6, 8}));
  int mismatches = 0;
  for (std::size_t row = 0; row < table.size(); ++row) {
    for (std::size_t col = 0; col < table[row].size(); ++col) {
      const HeapVector x{static_cast<Int>(col), static_cast<Int>(row)};
      if (t.grundy_at(x) != table[row][col]) {
        ++mismatches;
        EXPECT_EQ(col, 1u);
        EXPECT_TRUE(row == 5 || row == 8) << x.to_string();
      }
    }
  }
  EXPECT_EQ(mismatches, 2);
}

TEST(GrundyMex, CapExceeded) {
  try {
    grundy_mex(HeapVector{1000, 1000, 1000}, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCapExceeded);
  }
}

TEST(Gamma, Examples) {
  EXPECT_EQ(gamma_statistic(Dimension(2), 3), 1);
  EXPECT_EQ(gamma_statistic(Dimension(2), 4), 0);
  EXPECT_EQ(gamma_statistic(Dimension(3), 7), 1);
  for (int d = 2; d <= 6; ++d) {
    for (Int n = 0; n <= 500; ++n) EXPECT_LE(gamma_statistic(Dimension(d), n), 1);
  }
}

TEST(SumAdvisor, RatComponentToRat) {
  const auto game = with_nim({1, 4, 5}, HeapVector{1, 4, 5});
  EXPECT_EQ(sum_grundy(game), 10);
  const auto m = sum_advisor(game);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->component, 3u);
  EXPECT_EQ(m->result.position, (HeapVector{1, 2, 4}));
}

TEST(SumAdvisor, RatComponentToValue) {
  const auto game = with_nim({1, 2, 5, 8}, HeapVector{3, 4, 5, 6});
  const auto m = sum_advisor(game);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->component, 4u);
  EXPECT_EQ(m->result.position, (HeapVector{3, 0, 5, 6}));
  EXPECT_EQ(m->result.grundy(), 14);
}

TEST(SumAdvisor, NimHeap) {
  const auto game = with_nim({1, 2, 5, 8}, HeapVector{11, 21, 42, 83});
  const auto m = sum_advisor(game);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->component, 3u);
  EXPECT_EQ(m->result.to_string(), "nim 6");
  auto after = game;
  after[m->component] = m->result;
  EXPECT_EQ(sum_grundy(after), 0);
}

TEST(SumAdvisor, ZeroSum) {
  const auto game = with_nim({1, 2, 5, 6}, HeapVector{11, 21, 42, 83});
  EXPECT_EQ(sum_grundy(game), 0);
  EXPECT_FALSE(sum_advisor(game).has_value());
}

TEST(SumComponent, Text) {
  EXPECT_EQ(SumComponent::rat(HeapVector{3, 0, 5, 6}).to_string(), "rat 3,0,5,6");
  EXPECT_EQ(SumComponent::nim(8).grundy(), 8);
}
