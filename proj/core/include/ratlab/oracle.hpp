#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ratlab/types.hpp"

// Brute-force ground truth. Legality here is "not a difference of two
// members of R = {r(n)} + {0}", computed from enumerated rat vectors only;
// nothing in this module calls the rules module except to cross-check it
// inside verify().
namespace ratlab::oracle {

inline constexpr std::size_t kDefaultCellCap = 2'000'000;

// Inclusive box [0, upper] with a dense mixed-radix cell index.
class Box {
 public:
  explicit Box(HeapVector upper, std::size_t cell_cap = kDefaultCellCap);
  static Box cube(Dimension d, Int side, std::size_t cell_cap = kDefaultCellCap);

  Dimension dimension() const { return upper_.dimension(); }
  const HeapVector& upper() const noexcept { return upper_; }
  std::size_t cells() const noexcept { return cells_; }

  bool contains(std::span<const Int> x) const noexcept;
  bool contains(const HeapVector& x) const noexcept { return contains(x.entries()); }
  // Index with x_1 as the slowest-varying coordinate, so componentwise
  // smaller cells always have smaller indices.
  std::size_t index_of(std::span<const Int> x) const noexcept;
  std::size_t index_of(const HeapVector& x) const noexcept { return index_of(x.entries()); }
  HeapVector at(std::size_t index) const;

  std::string to_string() const;  // "[0,60]^3" or "[0,(a,b,c)]"

 private:
  HeapVector upper_;
  std::vector<std::size_t> strides_;
  std::size_t cells_ = 0;
};

// R + {0} restricted to the box [0, bound], lexicographically sorted.
std::vector<HeapVector> enumerate_R(Dimension d, const HeapVector& bound,
                                    std::size_t cap = kDefaultCellCap);

// All differences r(n+k) - r(n), k >= 0, lying in [0, bound]; includes 0.
// Rat vectors are enumerated one full period past the bound in every column
// so that differences of rows beyond the box are not missed.
std::vector<HeapVector> shortcut_set(Dimension d, const HeapVector& bound,
                                     std::size_t cap = kDefaultCellCap);

// Dense membership table of R - R (rat vectors, shortcuts and 0) over a box.
class ForbiddenIndex {
 public:
  explicit ForbiddenIndex(const Box& box);

  const Box& box() const noexcept { return box_; }
  bool forbidden(std::size_t cell) const noexcept { return bits_[cell] != 0; }
  bool forbidden(const HeapVector& s) const noexcept { return bits_[box_.index_of(s)] != 0; }
  bool is_rat(const HeapVector& s) const noexcept { return bits_[box_.index_of(s)] == kRat; }
  bool is_shortcut(const HeapVector& s) const noexcept { return bits_[box_.index_of(s)] == kShortcut; }

 private:
  static constexpr std::uint8_t kRat = 1;
  static constexpr std::uint8_t kShortcut = 2;

  Box box_;
  std::vector<std::uint8_t> bits_;
};

enum class Outcome : std::uint8_t { kP, kN };

struct SolveTable {
  Box box;
  std::vector<Outcome> outcome;
  std::optional<std::vector<Int>> grundy;

  Outcome at(const HeapVector& x) const { return outcome[box.index_of(x)]; }
  Int grundy_at(const HeapVector& x) const;
  std::vector<HeapVector> p_cells() const;
};

// P/N labels by a sweep in cell-index order: a cell is N iff some legal
// subtraction reaches an already-labelled P cell.
SolveTable retrograde_solve(const Box& box);

// Sprague-Grundy values by mex over all legal followers; also fills outcome.
SolveTable mex_grundy(const Box& box);

struct VerifyParams {
  int d = 3;
  Int bound = 0;  // 0 selects the claim's desk-scale default for d
  std::uint64_t seed = 20240229;
  std::size_t samples = 100'000;
  std::size_t cell_cap = 4'000'000;
};

struct VerifyReport {
  std::string claim;
  VerifyParams params;
  bool pass = false;
  std::vector<std::string> counterexamples;  // at most kMaxCounterexamples
  std::vector<std::string> notes;
  double runtime_ms = 0;

  static constexpr std::size_t kMaxCounterexamples = 20;
};

struct ClaimInfo {
  std::string name;
  std::string description;
  // Dimensions exercised by the desk-scale run of this claim.
  std::vector<int> desk_dimensions;
};

const std::vector<ClaimInfo>& claims();

// Throws kUnknownClaim.
VerifyReport verify(std::string_view claim, const VerifyParams& params);

// {claim, params, pass, counterexamples[], runtime_ms}
std::string report_to_json(const VerifyReport& report);

}  // namespace ratlab::oracle
