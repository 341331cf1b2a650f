#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ratlab/oracle.hpp"
#include "ratlab/types.hpp"

namespace ratlab {

enum class GrundyMethod { kFastFormula, kMexOracle };

std::string_view grundy_method_name(GrundyMethod m);  // "FastFormula", "MexOracle"

struct GrundyReport {
  Int value = 0;
  GrundyMethod method = GrundyMethod::kFastFormula;
  // Box [0, verified_bound] on which the fast formula was checked against the
  // mex recursion. Empty when no such check exists for this dimension.
  std::optional<HeapVector> verified_bound;
};

// Largest box on which the fast formula agrees with the mex recursion, as
// checked by the test suite: [0,4]^2 (it fails at (1, 3k+2) for k >= 1) and
// [0,16]^3.
std::optional<HeapVector> grundy_verified_bound(Dimension d);

// 0 on R + {0}, otherwise the token total.
GrundyReport grundy_fast(const HeapVector& x);

// Mex recursion over the box [0, x]. Throws kCapExceeded for large x.
GrundyReport grundy_mex(const HeapVector& x, std::size_t cell_cap = oracle::kDefaultCellCap);

// Positions with coordinate sum n whose fast-formula value differs from n,
// i.e. the rat vectors summing to n. For two heaps the true count is larger
// wherever (1, 3k+2) has sum n.
Int gamma_statistic(Dimension d, Int n);

struct SumComponent {
  enum class Kind { kNimHeap, kRatPosition };

  Kind kind = Kind::kNimHeap;
  Int heap = 0;         // kNimHeap
  HeapVector position;  // kRatPosition

  static SumComponent nim(Int heap);
  static SumComponent rat(HeapVector position);

  Int grundy() const;
  std::string to_string() const;  // "nim 8" or "rat 3,0,5,6"
};

struct SumMove {
  std::size_t component = 0;
  SumComponent result;
  // Tokens removed from the component: a single count for nim, a vector for
  // rat components.
  HeapVector subtraction;
};

Int sum_grundy(std::span<const SumComponent> components);

// Empty iff the XOR of the component values is 0. Components are scanned in
// order; a nim heap h is reduced to h ^ X when that is smaller, a rat
// component is moved to a position of the needed value. Throws
// kUnreachableTarget when no component admits the needed value.
std::optional<SumMove> sum_advisor(std::span<const SumComponent> components);

}  // namespace ratlab
