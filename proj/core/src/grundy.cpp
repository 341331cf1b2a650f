#include "ratlab/grundy.hpp"

#include "ratlab/rules.hpp"
#include "ratlab/sequences.hpp"

namespace ratlab {
namespace {

constexpr std::size_t kSearchCap = 1'000'000;

bool acceptable_target(Dimension d, const HeapVector& x, const HeapVector& s) {
  return classify_subtraction(d, s).allowed() && !is_p_position(x - s);
}

// Lexicographic walk over subtractions s <= x with total `drop`.
bool search_split(Dimension d, const HeapVector& x, std::vector<Int>& s, std::size_t column, Int drop,
                  std::size_t& visits, std::optional<HeapVector>& found) {
  if (++visits > kSearchCap) return true;
  if (column + 1 == s.size()) {
    if (drop > x[column]) return false;
    s[column] = drop;
    HeapVector candidate(s);
    if (acceptable_target(d, x, candidate)) {
      found = std::move(candidate);
      return true;
    }
    return false;
  }
  Int rest = 0;
  for (std::size_t j = column + 1; j < s.size(); ++j) rest += x[j];
  for (Int take = std::max<Int>(0, drop - rest); take <= std::min(drop, x[column]); ++take) {
    s[column] = take;
    if (search_split(d, x, s, column + 1, drop - take, visits, found)) return true;
  }
  return false;
}

std::optional<HeapVector> rat_subtraction_for(const HeapVector& x, Int wanted) {
  const Dimension d = x.dimension();
  if (wanted == 0) {
    auto move = winning_move(x);
    if (!move) return std::nullopt;
    return move->subtraction;
  }
  const Int drop = x.total() - wanted;
  if (drop <= 0) return std::nullopt;
  for (int j = 1; j <= d.value(); ++j) {
    if (x.at(j) < drop) continue;
    std::vector<Int> s(x.size(), 0);
    s[static_cast<std::size_t>(j - 1)] = drop;
    HeapVector candidate(std::move(s));
    if (acceptable_target(d, x, candidate)) return candidate;
  }
  std::vector<Int> s(x.size(), 0);
  std::size_t visits = 0;
  std::optional<HeapVector> found;
  search_split(d, x, s, 0, drop, visits, found);
  return found;
}

}  // namespace

std::string_view grundy_method_name(GrundyMethod m) {
  return m == GrundyMethod::kFastFormula ? "FastFormula" : "MexOracle";
}

std::optional<HeapVector> grundy_verified_bound(Dimension d) {
  // For two heaps the formula breaks at (1,5): G = 3 there.
  if (d.value() == 2) return HeapVector{4, 4};
  if (d.value() == 3) return HeapVector{16, 16, 16};
  return std::nullopt;
}

GrundyReport grundy_fast(const HeapVector& x) {
  const Dimension d = x.dimension();
  return GrundyReport{is_p_position(x) ? 0 : x.total(), GrundyMethod::kFastFormula, grundy_verified_bound(d)};
}

GrundyReport grundy_mex(const HeapVector& x, std::size_t cell_cap) {
  const Dimension d = x.dimension();
  const oracle::SolveTable table = oracle::mex_grundy(oracle::Box(x, cell_cap));
  return GrundyReport{table.grundy_at(x), GrundyMethod::kMexOracle, grundy_verified_bound(d)};
}

Int gamma_statistic(Dimension d, Int n) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "coordinate sum must be non-negative");
  if (n == 0) return 0;
  // Totals of r(k) are strictly increasing in k and at least k.
  RatIndex lo = 1;
  RatIndex hi = n;
  while (lo < hi) {
    const RatIndex mid = lo + (hi - lo) / 2;
    if (rat_vector(d, mid).total() < n) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return rat_vector(d, lo).total() == n ? 1 : 0;
}

SumComponent SumComponent::nim(Int heap) {
  if (heap < 0) throw Error(ErrorCode::kInvalidArgument, "nim heap must be non-negative");
  SumComponent c;
  c.kind = Kind::kNimHeap;
  c.heap = heap;
  return c;
}

SumComponent SumComponent::rat(HeapVector position) {
  (void)position.dimension();
  SumComponent c;
  c.kind = Kind::kRatPosition;
  c.position = std::move(position);
  return c;
}

Int SumComponent::grundy() const {
  return kind == Kind::kNimHeap ? heap : grundy_fast(position).value;
}

std::string SumComponent::to_string() const {
  return kind == Kind::kNimHeap ? "nim " + std::to_string(heap) : "rat " + position.to_string();
}

Int sum_grundy(std::span<const SumComponent> components) {
  Int x = 0;
  for (const auto& c : components) x ^= c.grundy();
  return x;
}

std::optional<SumMove> sum_advisor(std::span<const SumComponent> components) {
  if (components.empty()) throw Error(ErrorCode::kInvalidArgument, "a sum needs at least one component");
  const Int total = sum_grundy(components);
  if (total == 0) return std::nullopt;
  for (std::size_t k = 0; k < components.size(); ++k) {
    const SumComponent& c = components[k];
    const Int wanted = c.grundy() ^ total;
    if (c.kind == SumComponent::Kind::kNimHeap) {
      if (wanted < c.heap) return SumMove{k, SumComponent::nim(wanted), HeapVector{c.heap - wanted}};
      continue;
    }
    if (auto s = rat_subtraction_for(c.position, wanted)) {
      return SumMove{k, SumComponent::rat(c.position - *s), *s};
    }
  }
  throw Error(ErrorCode::kUnreachableTarget, "no component can reach the value needed to zero the sum");
}

}  // namespace ratlab
