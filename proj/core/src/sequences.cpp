#include "ratlab/sequences.hpp"

#include <string>

namespace ratlab {
namespace {

void require_column(Dimension d, int column) {
  if (column < 1 || column > d.value()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "column " + std::to_string(column) + " outside 1.." + std::to_string(d.value()));
  }
}

void require_index(RatIndex n, RatIndex minimum) {
  if (n < minimum) {
    throw Error(ErrorCode::kIndexOutOfRange, "row index " + std::to_string(n) + " below " + std::to_string(minimum));
  }
}

}  // namespace

Int rat_entry(Dimension d, int column, RatIndex n) {
  require_column(d, column);
  require_index(n, 1);
  const Int scaled = checked_mul(d.modulus(), n);
  // The numerator is positive, so the shift is an exact floor.
  return (scaled >> (d.value() - column)) - pow2(column - 1) + 1;
}

HeapVector rat_vector(Dimension d, RatIndex n) {
  std::vector<Int> out(static_cast<std::size_t>(d.value()));
  for (int j = 1; j <= d.value(); ++j) out[j - 1] = rat_entry(d, j, n);
  return HeapVector(std::move(out));
}

Int gap(Dimension d, int column, RatIndex n) {
  require_column(d, column);
  require_index(n, 2);
  const Int period = pow2(d.value() - column);
  return (n - 1) % period == 0 ? pow2(column) - 1 : pow2(column);
}

SplitReport split_check(Dimension d, Int bound) {
  if (bound < 1) throw Error(ErrorCode::kInvalidArgument, "split bound must be positive");
  SplitReport report;
  report.bound = bound;
  std::vector<unsigned char> hits(static_cast<std::size_t>(bound) + 1, 0);
  for (int j = 1; j <= d.value(); ++j) {
    for (RatIndex n = 1;; ++n) {
      const Int v = rat_entry(d, j, n);
      if (v > bound) break;
      if (v < 1) {
        throw Error(ErrorCode::kInvalidArgument, "non-positive rat entry " + std::to_string(v));
      }
      if (hits[v] < 2) ++hits[v];
    }
  }
  for (Int v = 1; v <= bound; ++v) {
    if (hits[v] == 0 && report.missing.size() < SplitReport::kMaxListed) report.missing.push_back(v);
    if (hits[v] > 1 && report.duplicates.size() < SplitReport::kMaxListed) report.duplicates.push_back(v);
  }
  report.covered = report.missing.empty() && report.duplicates.empty();
  return report;
}

std::optional<RatIndex> rat_index_of(const HeapVector& x) {
  const Dimension d = x.dimension();
  const Int m = d.modulus();
  const Int numerator = checked_add(x.at(d.value()), d.period() - 1);
  if (numerator % m != 0) return std::nullopt;
  const RatIndex n = numerator / m;
  if (n < 1) return std::nullopt;
  for (int j = 1; j < d.value(); ++j) {
    if (rat_entry(d, j, n) != x.at(j)) return std::nullopt;
  }
  return n;
}

bool rightshift_membership(const HeapVector& x) {
  const Dimension d = x.dimension();
  Int alpha = 0;
  for (int i = 2; i <= d.value(); ++i) {
    const Int shifted = checked_add(x.at(i), 1);
    if ((shifted >> 1) != x.at(i - 1)) return false;
    // Complement of the dropped bit of x_i + 1.
    const Int xi = (shifted & 1) ^ 1;
    alpha = (alpha << 1) | xi;
  }
  const Int m = d.modulus();
  const Int wheel = checked_mul(d.period(), m);
  return floor_mod(checked_mul(alpha, m), wheel) == floor_mod(x.at(d.value()) - d.period(), wheel);
}

HeapVector rat_wheel_reduce(const HeapVector& x) {
  const Dimension d = x.dimension();
  std::vector<Int> out(x.size());
  for (int j = 1; j <= d.value(); ++j) out[j - 1] = x.at(j) % d.column_slope(j);
  return HeapVector(std::move(out));
}

}  // namespace ratlab
