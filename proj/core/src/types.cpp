#include "ratlab/types.hpp"

#include <charconv>

namespace ratlab {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kIndexOutOfRange: return "index_out_of_range";
    case ErrorCode::kOverflow: return "overflow";
    case ErrorCode::kDimensionMismatch: return "dimension_mismatch";
    case ErrorCode::kNegativeSubtraction: return "negative_subtraction";
    case ErrorCode::kCapExceeded: return "cap_exceeded";
    case ErrorCode::kInvalidRow: return "invalid_row";
    case ErrorCode::kUnreachableTarget: return "unreachable_target";
    case ErrorCode::kUnknownClaim: return "unknown_claim";
    case ErrorCode::kUnsupportedFormat: return "unsupported_format";
    case ErrorCode::kUnknownSession: return "unknown_session";
    case ErrorCode::kNotYourTurn: return "not_your_turn";
    case ErrorCode::kGameOver: return "game_over";
    case ErrorCode::kConflict: return "conflict";
  }
  return "unknown";
}

Dimension::Dimension(int d) : d_(d) {
  if (d < kMin || d > kMax) {
    throw Error(ErrorCode::kInvalidArgument,
                "dimension must be between " + std::to_string(kMin) + " and " + std::to_string(kMax) +
                    ", got " + std::to_string(d));
  }
}

Int Dimension::column_slope(int column) const {
  if (column < 1 || column > d_) {
    throw Error(ErrorCode::kIndexOutOfRange, "column " + std::to_string(column) + " outside 1.." + std::to_string(d_));
  }
  return checked_mul(pow2(column - 1), modulus());
}

HeapVector::HeapVector(std::vector<Int> entries) : entries_(std::move(entries)) {
  for (Int e : entries_) {
    if (e < 0) throw Error(ErrorCode::kInvalidArgument, "heap entries must be non-negative");
  }
}

HeapVector::HeapVector(std::initializer_list<Int> entries) : HeapVector(std::vector<Int>(entries)) {}

Int HeapVector::at(int column) const {
  if (column < 1 || static_cast<std::size_t>(column) > entries_.size()) {
    throw Error(ErrorCode::kIndexOutOfRange, "column " + std::to_string(column) + " out of range");
  }
  return entries_[column - 1];
}

bool HeapVector::is_zero() const noexcept {
  for (Int e : entries_) {
    if (e != 0) return false;
  }
  return true;
}

Int HeapVector::total() const {
  Int sum = 0;
  for (Int e : entries_) sum = checked_add(sum, e);
  return sum;
}

bool HeapVector::dominated_by(const HeapVector& other) const {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] > other.entries_[i]) return false;
  }
  return true;
}

std::string HeapVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

void require_same_size(const HeapVector& a, const HeapVector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "vectors have " + std::to_string(a.size()) + " and " + std::to_string(b.size()) + " heaps");
  }
}

HeapVector operator+(const HeapVector& a, const HeapVector& b) {
  require_same_size(a, b);
  std::vector<Int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_add(a[i], b[i]);
  return HeapVector(std::move(out));
}

HeapVector operator-(const HeapVector& a, const HeapVector& b) {
  require_same_size(a, b);
  std::vector<Int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) {
      throw Error(ErrorCode::kNegativeSubtraction,
                  "cannot subtract " + b.to_string() + " from " + a.to_string() + " (heap " + std::to_string(i + 1) +
                      ")");
    }
    out[i] = a[i] - b[i];
  }
  return HeapVector(std::move(out));
}

HeapVector parse_heap_vector(std::string_view text) {
  std::vector<Int> out;
  std::size_t pos = 0;
  while (true) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    Int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc()) {
      throw Error(ErrorCode::kInvalidArgument, "cannot parse vector '" + std::string(text) + "'");
    }
    out.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos == text.size()) break;
    if (text[pos] != ',') {
      throw Error(ErrorCode::kInvalidArgument, "cannot parse vector '" + std::string(text) + "'");
    }
    ++pos;
  }
  return HeapVector(std::move(out));
}

std::size_t HeapVectorHash::operator()(const HeapVector& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Int e : v.entries()) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace ratlab
