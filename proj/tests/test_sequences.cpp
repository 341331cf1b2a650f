#include <gtest/gtest.h>

#include <random>

#include "ratlab/sequences.hpp"

using namespace ratlab;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST(Dimension, Constants) {
  Dimension d(3);
  EXPECT_EQ(d.modulus(), 7);
  EXPECT_EQ(d.period(), 4);
  EXPECT_EQ(d.column_slope(1), 7);
  EXPECT_EQ(d.column_slope(3), 28);
  EXPECT_EQ(code_of([] { Dimension(1); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { Dimension(63); }), ErrorCode::kInvalidArgument);
}

TEST(HeapVector, ParseAndArithmetic) {
  const HeapVector x = parse_heap_vector(" 1, 3 ,7");
  EXPECT_EQ(x, (HeapVector{1, 3, 7}));
  EXPECT_EQ(x.to_string(), "1,3,7");
  EXPECT_EQ(x.total(), 11);
  EXPECT_EQ(x - HeapVector({1, 2, 4}), (HeapVector{0, 1, 3}));
  EXPECT_EQ(code_of([&] { (void)(HeapVector{1, 2, 4} - x); }), ErrorCode::kNegativeSubtraction);
  EXPECT_EQ(code_of([&] { (void)(x - HeapVector{1, 2}); }), ErrorCode::kDimensionMismatch);
  EXPECT_EQ(code_of([] { parse_heap_vector("1,x"); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { HeapVector{1, -2}; }), ErrorCode::kInvalidArgument);
}

TEST(RatEntry, Examples) {
  EXPECT_EQ(rat_entry(Dimension(3), 3, 1), 4);
  EXPECT_EQ(rat_entry(Dimension(2), 2, 1), 2);
  EXPECT_EQ(rat_entry(Dimension(4), 1, 6), 11);
}

TEST(RatEntry, Errors) {
  EXPECT_EQ(code_of([] { rat_entry(Dimension(3), 0, 1); }), ErrorCode::kIndexOutOfRange);
  EXPECT_EQ(code_of([] { rat_entry(Dimension(3), 4, 1); }), ErrorCode::kIndexOutOfRange);
  EXPECT_EQ(code_of([] { rat_entry(Dimension(3), 1, 0); }), ErrorCode::kIndexOutOfRange);
  EXPECT_EQ(code_of([] { rat_entry(Dimension(40), 40, Int{1} << 40); }), ErrorCode::kOverflow);
}

TEST(RatVector, Examples) {
  EXPECT_EQ(rat_vector(Dimension(3), 1), (HeapVector{1, 2, 4}));
  EXPECT_EQ(rat_vector(Dimension(4), 9), (HeapVector{16, 32, 64, 128}));
  EXPECT_EQ(rat_vector(Dimension(4), 3), (HeapVector{5, 10, 19, 38}));
  EXPECT_EQ(rat_vector(Dimension(2), 2), (HeapVector{3, 5}));
  EXPECT_EQ(rat_vector(Dimension(2), 3), (HeapVector{4, 8}));
}

TEST(RatVector, StrictlyIncreasing) {
  for (int d = 2; d <= 8; ++d) {
    HeapVector prev = rat_vector(Dimension(d), 1);
    for (RatIndex n = 2; n <= 300; ++n) {
      const HeapVector cur = rat_vector(Dimension(d), n);
      for (std::size_t j = 0; j < cur.size(); ++j) ASSERT_LT(prev[j], cur[j]) << "d=" << d << " n=" << n;
      prev = cur;
    }
  }
}

TEST(Gap, Examples) {
  EXPECT_EQ(gap(Dimension(4), 4, 5), 15);
  EXPECT_EQ(gap(Dimension(3), 1, 2), 2);
  EXPECT_EQ(gap(Dimension(3), 1, 4), 2);
  EXPECT_EQ(gap(Dimension(3), 1, 5), 1);
  EXPECT_EQ(gap(Dimension(3), 2, 3), 3);
  EXPECT_EQ(code_of([] { gap(Dimension(3), 1, 1); }), ErrorCode::kIndexOutOfRange);
}

TEST(Gap, MatchesDifferences) {
  for (int d = 2; d <= 7; ++d) {
    for (int j = 1; j <= d; ++j) {
      for (RatIndex n = 2; n <= 200; ++n) {
        ASSERT_EQ(gap(Dimension(d), j, n), rat_entry(Dimension(d), j, n) - rat_entry(Dimension(d), j, n - 1));
      }
    }
  }
}

TEST(SplitCheck, Examples) {
  EXPECT_TRUE(split_check(Dimension(3), 28).covered);
  EXPECT_TRUE(split_check(Dimension(2), 1).covered);
  const SplitReport big = split_check(Dimension(8), 10000);
  EXPECT_TRUE(big.covered);
  EXPECT_TRUE(big.duplicates.empty());
  EXPECT_TRUE(big.missing.empty());
  EXPECT_EQ(code_of([] { split_check(Dimension(2), 0); }), ErrorCode::kInvalidArgument);
}

TEST(RatIndexOf, Examples) {
  EXPECT_EQ(rat_index_of(HeapVector{1, 2, 4}), 1);
  EXPECT_EQ(rat_index_of(HeapVector{1, 3, 7}), std::nullopt);
  EXPECT_EQ(rat_index_of(HeapVector{0, 0, 0}), std::nullopt);
  EXPECT_EQ(rat_index_of(HeapVector{16, 32, 64, 128}), 9);
}

TEST(RightShift, AgreesWithInversion) {
  for (int d = 2; d <= 4; ++d) {
    const Int side = d == 2 ? 60 : (d == 3 ? 30 : 16);
    std::vector<Int> x(static_cast<std::size_t>(d), 0);
    while (true) {
      const HeapVector v(x);
      ASSERT_EQ(rightshift_membership(v), rat_index_of(v).has_value()) << v.to_string();
      std::size_t k = 0;
      while (k < x.size() && x[k] == side) x[k++] = 0;
      if (k == x.size()) break;
      ++x[k];
    }
  }
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const int d = 2 + static_cast<int>(rng() % 8);
    const RatIndex n = 1 + static_cast<RatIndex>(rng() % 100000);
    EXPECT_TRUE(rightshift_membership(rat_vector(Dimension(d), n)));
  }
}

TEST(RatWheel, ReducesPeriodically) {
  const Dimension d(3);
  for (RatIndex n = 1; n <= 40; ++n) {
    EXPECT_EQ(rat_wheel_reduce(rat_vector(d, n)), rat_wheel_reduce(rat_vector(d, n + d.period())));
  }
  EXPECT_EQ(rat_wheel_reduce(HeapVector{7, 14, 28}), (HeapVector{0, 0, 0}));
}

// The weighted gap sum is 1 except on rows n = 1 mod 2^(d-1), where the
// first column drops by one as well and the sum is 1 - 2^(d-1).
TEST(Gap, WeightedSum) {
  for (int d = 2; d <= 8; ++d) {
    const Dimension dim(d);
    for (RatIndex n = 2; n <= 500; ++n) {
      Int sum = 0;
      for (int j = 2; j <= d; ++j) sum += pow2(d - j + 1) * gap(dim, j - 1, n) - pow2(d - j) * gap(dim, j, n);
      const Int expected = (n - 1) % dim.period() == 0 ? 1 - dim.period() : 1;
      ASSERT_EQ(sum, expected) << "d=" << d << " n=" << n;
    }
  }
  EXPECT_EQ(2 * gap(Dimension(2), 1, 3) - gap(Dimension(2), 2, 3), -1);
}
