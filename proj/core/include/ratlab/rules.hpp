#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ratlab/sequences.hpp"
#include "ratlab/types.hpp"

namespace ratlab {

enum class Verdict { kAllowed, kForbiddenA, kForbiddenB, kForbiddenZero };

std::string_view verdict_name(Verdict v);  // "Allowed", "ForbiddenA", ...

// One halving step x_{i-1} vs x_i / 2 as seen by the rules.
struct ColumnCheck {
  int column = 0;  // i in 2..d
  Int value = 0;   // s_{i-1}
  Int floor_half = 0;
  Int ceil_half = 0;
  bool holds = false;
};

// Outcome of one of the two forbidding conditions. failed_column is empty
// when the condition holds; 0 when the congruence on s_d failed; otherwise
// the column i whose halving check failed first (scanning i = d down to 2).
struct ConditionTrace {
  bool congruence = false;
  std::optional<int> failed_column;

  bool holds() const { return !failed_column.has_value(); }
};

struct MoveVerdict {
  Verdict status = Verdict::kAllowed;
  ConditionTrace condition_a;
  ConditionTrace condition_b;
  // For ForbiddenA/ForbiddenB: one entry per column 2..d for the condition
  // that matched. Empty otherwise.
  std::vector<ColumnCheck> witness;

  bool allowed() const { return status == Verdict::kAllowed; }
  // Human-readable reason naming the condition and column.
  std::string explanation() const;
};

// Length-(d-1) word over {0,1,2}; digit for column i (2..d) is
// 2 x_{i-1} - x_i + 1: 0 when x_{i-1} is the floor of an odd half, 1 for an
// exact half, 2 for the ceiling.
class TernaryWord {
 public:
  TernaryWord() = default;
  explicit TernaryWord(std::vector<std::uint8_t> digits);

  std::size_t size() const noexcept { return digits_.size(); }
  // Digit for column i in 2..d.
  std::uint8_t digit(int column) const { return digits_.at(static_cast<std::size_t>(column - 2)); }
  const std::vector<std::uint8_t>& digits() const noexcept { return digits_; }

  // Base-3 value with the column-2 digit most significant.
  Int base3_value() const;

  std::string to_string() const;  // "2,0,1"

  friend auto operator<=>(const TernaryWord&, const TernaryWord&) = default;
  friend bool operator==(const TernaryWord&, const TernaryWord&) = default;

 private:
  std::vector<std::uint8_t> digits_;
};

TernaryWord parse_ternary_word(std::string_view text);

struct MoveSearchResult {
  HeapVector target;
  HeapVector subtraction;
  std::optional<RatIndex> rat_index;  // empty when the target is 0
};

// Forbidden iff s = 0, s is a rat vector (condition a), or s is a proper
// shortcut (condition b). Condition a(ii) is applied in the form
// s_{i-1} = ceil(s_i / 2), the halving step of the rat matrix.
MoveVerdict classify_subtraction(Dimension d, const HeapVector& s);

// Same check with a(ii) exactly as the rule sheet prints it:
// s_i - 1 <= 2 s_{i-1} <= s_i. Kept only to demonstrate that this form
// misclassifies rat vectors such as (3,6,11).
MoveVerdict classify_subtraction_as_printed(Dimension d, const HeapVector& s);

std::optional<TernaryWord> ternary_recurrence(const HeapVector& x);

// Verdict for moving x -> y. Throws kNegativeSubtraction when y is not below x.
MoveVerdict is_legal_move(const HeapVector& x, const HeapVector& y);

bool is_p_position(const HeapVector& x);

// Empty iff x is a P-position. Otherwise the first legal target in the order
// r(1), r(2), ... (while r(n) <= x), then 0.
std::optional<MoveSearchResult> winning_move(const HeapVector& x);

// Every nonzero position has at least the single-token move in some heap.
bool has_any_move(const HeapVector& x);

}  // namespace ratlab
