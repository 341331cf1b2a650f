#include "ratlab/rules.hpp"

#include <charconv>

namespace ratlab {
namespace {

enum class HalvingRule { kCeil, kFloorOrCeil, kPrintedA };

bool halving_holds(HalvingRule rule, Int lower, Int upper) {
  switch (rule) {
    case HalvingRule::kCeil:
      return lower == ceil_half(upper);
    case HalvingRule::kFloorOrCeil:
      return lower == floor_div(upper, 2) || lower == ceil_half(upper);
    case HalvingRule::kPrintedA: {
      const Int twice = 2 * lower;
      return upper - 1 <= twice && twice <= upper;
    }
  }
  return false;
}

ConditionTrace trace_condition(const HeapVector& s, Int residue, Int wanted_residue, HalvingRule rule,
                               std::vector<ColumnCheck>* witness) {
  ConditionTrace trace;
  trace.congruence = residue == wanted_residue;
  if (!trace.congruence) {
    trace.failed_column = 0;
  }
  const int d = static_cast<int>(s.size());
  std::vector<ColumnCheck> checks;
  for (int i = d; i >= 2; --i) {
    ColumnCheck c;
    c.column = i;
    c.value = s.at(i - 1);
    c.floor_half = floor_div(s.at(i), 2);
    c.ceil_half = ceil_half(s.at(i));
    c.holds = halving_holds(rule, c.value, s.at(i));
    if (!c.holds && !trace.failed_column) trace.failed_column = i;
    checks.push_back(c);
  }
  if (trace.holds() && witness) {
    witness->assign(checks.rbegin(), checks.rend());
  }
  return trace;
}

MoveVerdict classify_with(Dimension d, const HeapVector& s, HalvingRule rule_a) {
  if (static_cast<int>(s.size()) != d.value()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "subtraction has " + std::to_string(s.size()) + " heaps, expected " + std::to_string(d.value()));
  }
  MoveVerdict verdict;
  const Int m = d.modulus();
  const Int residue = s.at(d.value()) % m;
  std::vector<ColumnCheck> witness_a, witness_b;
  verdict.condition_a = trace_condition(s, residue, d.period() % m, rule_a, &witness_a);
  verdict.condition_b = trace_condition(s, residue, 0, HalvingRule::kFloorOrCeil, &witness_b);
  if (s.is_zero()) {
    verdict.status = Verdict::kForbiddenZero;
  } else if (verdict.condition_a.holds()) {
    verdict.status = Verdict::kForbiddenA;
    verdict.witness = std::move(witness_a);
  } else if (verdict.condition_b.holds()) {
    verdict.status = Verdict::kForbiddenB;
    verdict.witness = std::move(witness_b);
  } else {
    verdict.status = Verdict::kAllowed;
  }
  return verdict;
}

std::string describe_failure(char name, const ConditionTrace& trace) {
  std::string out = "condition ";
  out += name;
  if (*trace.failed_column == 0) {
    out += name == 'a' ? " fails: last heap is not 2^(d-1) mod 2^d-1" : " fails: last heap is not 0 mod 2^d-1";
  } else {
    out += " fails at column " + std::to_string(*trace.failed_column);
  }
  return out;
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kAllowed: return "Allowed";
    case Verdict::kForbiddenA: return "ForbiddenA";
    case Verdict::kForbiddenB: return "ForbiddenB";
    case Verdict::kForbiddenZero: return "ForbiddenZero";
  }
  return "?";
}

std::string MoveVerdict::explanation() const {
  switch (status) {
    case Verdict::kForbiddenZero:
      return "forbidden: the empty subtraction is not a move";
    case Verdict::kForbiddenA:
      return "forbidden: condition a (the subtraction is a rat vector)";
    case Verdict::kForbiddenB:
      return "forbidden: condition b (the subtraction is a proper shortcut)";
    case Verdict::kAllowed:
      return "allowed: " + describe_failure('a', condition_a) + "; " + describe_failure('b', condition_b);
  }
  return {};
}

TernaryWord::TernaryWord(std::vector<std::uint8_t> digits) : digits_(std::move(digits)) {
  for (auto digit : digits_) {
    if (digit > 2) throw Error(ErrorCode::kInvalidArgument, "ternary digit out of range");
  }
}

Int TernaryWord::base3_value() const {
  Int v = 0;
  for (auto digit : digits_) v = checked_add(checked_mul(v, 3), digit);
  return v;
}

std::string TernaryWord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (i) out += ',';
    out += static_cast<char>('0' + digits_[i]);
  }
  return out;
}

TernaryWord parse_ternary_word(std::string_view text) {
  std::vector<std::uint8_t> digits;
  for (char c : text) {
    if (c == ',' || c == ' ') continue;
    if (c < '0' || c > '2') throw Error(ErrorCode::kInvalidArgument, "bad ternary word '" + std::string(text) + "'");
    digits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return TernaryWord(std::move(digits));
}

MoveVerdict classify_subtraction(Dimension d, const HeapVector& s) {
  return classify_with(d, s, HalvingRule::kCeil);
}

MoveVerdict classify_subtraction_as_printed(Dimension d, const HeapVector& s) {
  return classify_with(d, s, HalvingRule::kPrintedA);
}

std::optional<TernaryWord> ternary_recurrence(const HeapVector& x) {
  const Dimension d = x.dimension();
  if (x.at(d.value()) % d.modulus() != 0) return std::nullopt;
  std::vector<std::uint8_t> digits(static_cast<std::size_t>(d.value() - 1));
  for (int i = 2; i <= d.value(); ++i) {
    const Int w = 2 * x.at(i - 1) - x.at(i) + 1;
    if (w < 0 || w > 2) return std::nullopt;
    digits[static_cast<std::size_t>(i - 2)] = static_cast<std::uint8_t>(w);
  }
  return TernaryWord(std::move(digits));
}

MoveVerdict is_legal_move(const HeapVector& x, const HeapVector& y) {
  const HeapVector s = x - y;
  return classify_subtraction(x.dimension(), s);
}

bool is_p_position(const HeapVector& x) {
  return x.is_zero() || rat_index_of(x).has_value();
}

std::optional<MoveSearchResult> winning_move(const HeapVector& x) {
  if (is_p_position(x)) return std::nullopt;
  const Dimension d = x.dimension();
  for (RatIndex n = 1;; ++n) {
    HeapVector r = rat_vector(d, n);
    // Rat columns are strictly increasing in n, so once r(n) leaves the box
    // below x every later row does too.
    if (!r.dominated_by(x)) break;
    HeapVector s = x - r;
    if (classify_subtraction(d, s).allowed()) {
      return MoveSearchResult{std::move(r), std::move(s), n};
    }
  }
  if (classify_subtraction(d, x).allowed()) {
    return MoveSearchResult{HeapVector::zeros(x.size()), x, std::nullopt};
  }
  // Unreachable if P(M) = R holds; the oracle suites check exactly this.
  throw Error(ErrorCode::kUnreachableTarget, "no legal move to a P-position from " + x.to_string());
}

bool has_any_move(const HeapVector& x) {
  (void)x.dimension();
  return !x.is_zero();
}

}  // namespace ratlab
