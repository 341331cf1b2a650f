#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ratlab/matrices.hpp"
#include "ratlab/types.hpp"

namespace ratlab::fractal {

// Last-column count vector of length 2^(d-2), generated by the recursion
// s^2 = (2); s^d_1 = s^(d-1)_1 + 1; s^(d+1)_(2j) = s^d_j;
// s^(d+1)_(2j+1) = s^d_j + s^d_(j+1).
std::vector<Int> sigma(int d);

// Same counts read off the shortcut matrix: for k = 1..2^(d-2), the number of
// rows whose last offset equals k (2^d - 1).
std::vector<Int> sigma_oracle(int d);

enum class RowOrder {
  kRightToLeft,  // F's defining order
  kLeftToRight,  // reversed-significance variant, exploratory only
};

struct DiffProfile {
  int d = 0;
  // Decoded words in traversal order: F's last row up to row 1, then row 0.
  std::vector<Int> values;
  // Cyclic consecutive differences, values[k+1] - values[k] with wraparound;
  // length 3^(d-1).
  std::vector<Int> sequence;
  std::vector<Int> distinct;
  std::vector<Int> multiplicity;
  Int min = 0;
  Int max = 0;

  // The first 3^(d-1) - 1 differences, without the wraparound step.
  std::vector<Int> linear_sequence() const;
};

DiffProfile diff_profile(int d, RowOrder order = RowOrder::kRightToLeft);

// 2 + C(d-1, 2).
Int xi(int d);

struct Extremes {
  Int min = 0;
  Int max = 0;
  // False for d < 4, where max comes from the profile instead of the formula.
  bool max_from_formula = false;
};

// min = -2 * 3^(d-2); max = 2 * 3^(d-2) + 3^(d-4) for d >= 4.
Extremes extremes(int d);

// Gaps between successive occurrences of the baseline value -2 * 3^(d-2) in
// the linear difference sequence.
std::vector<Int> baseline_gaps(int d);

struct TauValue {
  Int value = 0;
  std::string label;  // "tau(0)", "tau(1..d-2)", "tau(d-1)", "tau(d)", "seq i", "final"
  bool present = false;
};

struct TauReport {
  int d = 0;
  std::vector<TauValue> generated;
  // Profile values not produced by the generator.
  std::vector<Int> unexplained;
  bool all_present() const;
};

// Generated description of the difference set. Advisory: a mismatch is
// reported, never thrown.
TauReport tau_check(int d);

enum class ScatterFormat { kCsv, kSvg };
std::optional<ScatterFormat> parse_scatter_format(std::string_view name);

// One point per cyclic difference: x = index, y = value.
std::string emit_scatter(int d, ScatterFormat format);

}  // namespace ratlab::fractal
