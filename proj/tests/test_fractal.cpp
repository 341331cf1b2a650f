#include <gtest/gtest.h>

#include <algorithm>

#include "ratlab/fractal.hpp"
#include "ratlab/published.hpp"

using namespace ratlab;
using namespace ratlab::fractal;

TEST(Sigma, Examples) {
  EXPECT_EQ(sigma(4), (std::vector<Int>{4, 3, 5, 2}));
  EXPECT_EQ(sigma(2), (std::vector<Int>{2}));
  EXPECT_EQ(sigma(6), (std::vector<Int>{6, 5, 9, 4, 11, 7, 10, 3, 11, 8, 13, 5, 12, 7, 9, 2}));
}

TEST(Sigma, OracleExamples) {
  EXPECT_EQ(sigma_oracle(3), (std::vector<Int>{3, 2}));
  EXPECT_EQ(sigma_oracle(4), (std::vector<Int>{4, 3, 5, 2}));
  EXPECT_EQ(sigma_oracle(2), (std::vector<Int>{2}));
}

TEST(Sigma, RecursionMatchesMatrix) {
  for (int d = 2; d <= 10; ++d) EXPECT_EQ(sigma(d), sigma_oracle(d)) << "d=" << d;
}

TEST(Profile, Examples) {
  const DiffProfile p2 = diff_profile(2);
  EXPECT_EQ(p2.distinct, (std::vector<Int>{-2, 1}));
  EXPECT_EQ(p2.multiplicity, (std::vector<Int>{1, 2}));
  const DiffProfile p3 = diff_profile(3);
  EXPECT_EQ(p3.distinct, (std::vector<Int>{-6, 1, 4}));
  EXPECT_EQ(p3.multiplicity, (std::vector<Int>{3, 2, 4}));
  const DiffProfile p4 = diff_profile(4);
  EXPECT_EQ(p4.distinct, (std::vector<Int>{-18, 1, 3, 13, 19}));
  EXPECT_EQ(p4.multiplicity, (std::vector<Int>{9, 2, 6, 8, 2}));
  EXPECT_EQ(p4.sequence.size(), 27u);
  EXPECT_EQ(p4.linear_sequence().size(), 26u);
  EXPECT_EQ(p4.min, -18);
  EXPECT_EQ(p4.max, 19);
}

TEST(Profile, CyclicSumIsZero) {
  for (int d = 2; d <= 8; ++d) {
    const DiffProfile p = diff_profile(d);
    Int sum = 0;
    for (Int v : p.sequence) sum += v;
    EXPECT_EQ(sum, 0) << "d=" << d;
  }
}

TEST(Profile, MatchesPublishedData) {
  for (const auto& printed : published::difference_profiles()) {
    const DiffProfile p = diff_profile(printed.d);
    EXPECT_EQ(p.distinct, printed.values) << "d=" << printed.d;
    if (!printed.multiplicity.empty()) EXPECT_EQ(p.multiplicity, printed.multiplicity) << "d=" << printed.d;
  }
}

TEST(Profile, LeftToRightDiffers) {
  const DiffProfile rtl = diff_profile(4, RowOrder::kRightToLeft);
  const DiffProfile ltr = diff_profile(4, RowOrder::kLeftToRight);
  EXPECT_EQ(ltr.sequence.size(), rtl.sequence.size());
  EXPECT_NE(ltr.sequence, rtl.sequence);
}

TEST(Xi, Examples) {
  EXPECT_EQ(xi(5), 8);
  EXPECT_EQ(xi(2), 2);
  EXPECT_EQ(xi(10), 38);
  for (int d = 2; d <= 12; ++d) {
    EXPECT_EQ(xi(d), published::xi_sequence()[d - 2]);
    EXPECT_EQ(static_cast<Int>(diff_profile(d).distinct.size()), xi(d)) << "d=" << d;
  }
}

TEST(Extremes, Examples) {
  EXPECT_EQ(extremes(4).min, -18);
  EXPECT_EQ(extremes(4).max, 19);
  EXPECT_EQ(extremes(6).min, -162);
  EXPECT_EQ(extremes(6).max, 171);
  EXPECT_EQ(extremes(3).min, -6);
  EXPECT_EQ(extremes(3).max, 4);
  EXPECT_FALSE(extremes(3).max_from_formula);
  EXPECT_TRUE(extremes(5).max_from_formula);
  for (int d = 2; d <= 10; ++d) {
    const DiffProfile p = diff_profile(d);
    EXPECT_EQ(extremes(d).min, p.min);
    EXPECT_EQ(extremes(d).max, p.max);
  }
}

TEST(BaselineGaps, Examples) {
  EXPECT_EQ(baseline_gaps(3), (std::vector<Int>{3, 3}));
  EXPECT_EQ(baseline_gaps(4), (std::vector<Int>{4, 3, 2, 3, 3, 2, 3, 4}));
  EXPECT_TRUE(baseline_gaps(2).empty());
}

TEST(BaselineGaps, MatchPublishedLists) {
  const auto& lists = published::baseline_gap_lists();
  for (std::size_t k = 0; k < lists.size(); ++k) {
    const int d = static_cast<int>(k) + 2;
    EXPECT_EQ(baseline_gaps(d), lists[k]) << "d=" << d;
  }
}

TEST(Tau, Examples) {
  const TauReport r12 = tau_check(12);
  const auto star = std::find_if(r12.generated.begin(), r12.generated.end(),
                                 [](const TauValue& t) { return t.label == "tau(d-1)"; });
  ASSERT_NE(star, r12.generated.end());
  EXPECT_EQ(star->value, 88573);
  EXPECT_TRUE(star->present);

  const TauReport r4 = tau_check(4);
  const auto top = std::find_if(r4.generated.begin(), r4.generated.end(),
                                [](const TauValue& t) { return t.label == "tau(d)"; });
  ASSERT_NE(top, r4.generated.end());
  EXPECT_EQ(top->value, 19);
  EXPECT_TRUE(top->present);

  const DiffProfile p5 = diff_profile(5);
  EXPECT_TRUE(std::binary_search(p5.distinct.begin(), p5.distinct.end(), 40));
  EXPECT_TRUE(std::binary_search(p5.distinct.begin(), p5.distinct.end(), 46));
}

TEST(Scatter, Formats) {
  const std::string csv = emit_scatter(3, ScatterFormat::kCsv);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 10);  // header + 9 rows
  const std::string svg = emit_scatter(2, ScatterFormat::kSvg);
  std::size_t circles = 0;
  for (std::size_t pos = svg.find("<circle"); pos != std::string::npos; pos = svg.find("<circle", pos + 1)) ++circles;
  EXPECT_EQ(circles, 3u);
  const std::string big = emit_scatter(10, ScatterFormat::kCsv);
  EXPECT_EQ(std::count(big.begin(), big.end(), '\n'), 19684);
  EXPECT_EQ(parse_scatter_format("svg"), ScatterFormat::kSvg);
  EXPECT_FALSE(parse_scatter_format("png").has_value());
}
