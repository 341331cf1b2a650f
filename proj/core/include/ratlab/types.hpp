#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ratlab/checked.hpp"

namespace ratlab {

// Number of heaps. Always at least 2; the largest accepted value is the one
// for which 2^d - 1 still fits in a signed 64-bit integer. Derived constants
// that overflow for large d throw rather than wrap.
class Dimension {
 public:
  static constexpr int kMin = 2;
  static constexpr int kMax = 62;

  explicit Dimension(int d);

  int value() const noexcept { return d_; }

  // 2^d - 1, the saltus of every column.
  Int modulus() const { return pow2(d_) - 1; }
  // 2^(d-1), the number of rows in one period of the rat matrix.
  Int period() const { return pow2(d_ - 1); }
  // 2^(j-1) * (2^d - 1), the per-period increment of column j (1-based).
  Int column_slope(int column) const;

  friend bool operator==(Dimension, Dimension) = default;

 private:
  int d_;
};

// A position, subtraction or shortcut: d non-negative token counts, x_1 first.
class HeapVector {
 public:
  HeapVector() = default;
  explicit HeapVector(std::vector<Int> entries);
  HeapVector(std::initializer_list<Int> entries);

  static HeapVector zeros(std::size_t size) { return HeapVector(std::vector<Int>(size, 0)); }

  std::size_t size() const noexcept { return entries_.size(); }
  // Dimension implied by the length; throws for fewer than two heaps.
  Dimension dimension() const { return Dimension(static_cast<int>(entries_.size())); }

  // 1-based column access, matching the x_1..x_d convention.
  Int at(int column) const;
  Int operator[](std::size_t index) const { return entries_[index]; }
  std::span<const Int> entries() const noexcept { return entries_; }

  bool is_zero() const noexcept;
  Int total() const;

  // Componentwise comparisons; sizes must agree.
  bool dominated_by(const HeapVector& other) const;

  std::string to_string() const;  // "1,2,4"

  friend auto operator<=>(const HeapVector&, const HeapVector&) = default;
  friend bool operator==(const HeapVector&, const HeapVector&) = default;

 private:
  std::vector<Int> entries_;
};

// Componentwise sum/difference. Difference throws kNegativeSubtraction when
// any coordinate would drop below zero.
HeapVector operator+(const HeapVector& a, const HeapVector& b);
HeapVector operator-(const HeapVector& a, const HeapVector& b);

void require_same_size(const HeapVector& a, const HeapVector& b);

// Parses "1,2,4" (whitespace tolerated). Throws kInvalidArgument.
HeapVector parse_heap_vector(std::string_view text);

struct HeapVectorHash {
  std::size_t operator()(const HeapVector& v) const noexcept;
};

}  // namespace ratlab
