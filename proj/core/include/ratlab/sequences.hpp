#pragma once

#include <optional>
#include <vector>

#include "ratlab/types.hpp"

namespace ratlab {

// 1-based row index of the standard form.
using RatIndex = Int;

// r_i(n) = floor((2^d - 1) n / 2^(d-i)) - 2^(i-1) + 1, for 1 <= i <= d, n >= 1.
Int rat_entry(Dimension d, int column, RatIndex n);

// (r_1(n), ..., r_d(n)).
HeapVector rat_vector(Dimension d, RatIndex n);

// Delta_j(n) = r_j(n) - r_j(n-1) for n >= 2, evaluated by the closed form:
// 2^j, or 2^j - 1 when n - 1 is a multiple of 2^(d-j).
Int gap(Dimension d, int column, RatIndex n);

struct SplitReport {
  Int bound = 0;
  bool covered = false;
  // At most kMaxListed values each.
  std::vector<Int> duplicates;
  std::vector<Int> missing;

  static constexpr std::size_t kMaxListed = 100;
};

// Checks that the values r_j(n) <= bound hit every integer 1..bound exactly once.
SplitReport split_check(Dimension d, Int bound);

// Some(n) iff x = r(n). Inverts through the last column, whose slope is the
// integer 2^d - 1, then confirms every column.
std::optional<RatIndex> rat_index_of(const HeapVector& x);

// Membership in the rat sequence decided from binary right shifts alone:
// x_{i-1} = floor((x_i + 1) / 2) for every i, and the complemented dropped
// bits, read x_2 first as a binary numeral alpha, satisfy
// alpha (2^d - 1) = x_d - 2^(d-1)  (mod 2^(d-1) (2^d - 1)).
// Never consults rat_index_of.
bool rightshift_membership(const HeapVector& x);

// (x_1 mod m, x_2 mod 2m, ..., x_d mod 2^(d-1) m) with m = 2^d - 1.
HeapVector rat_wheel_reduce(const HeapVector& x);

}  // namespace ratlab
