#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ratlab/rules.hpp"
#include "ratlab/sequences.hpp"
#include "ratlab/types.hpp"

namespace ratlab {

// One matrix row as a function of the period variable t:
// column j evaluates to slopes[j] * t + offsets[j].
struct AffineRow {
  std::vector<Int> slopes;
  std::vector<Int> offsets;

  HeapVector evaluate(Int t) const;
  HeapVector offset_vector() const { return HeapVector(offsets); }

  friend bool operator==(const AffineRow&, const AffineRow&) = default;
};

// Rows stored flat; all rows share the slopes 2^(j-1)(2^d - 1).
class AffineMatrix {
 public:
  explicit AffineMatrix(Dimension d);

  Dimension dimension() const noexcept { return d_; }
  std::size_t rows() const noexcept { return offsets_.size() / static_cast<std::size_t>(d_.value()); }
  const std::vector<Int>& slopes() const noexcept { return slopes_; }

  std::span<const Int> offsets(std::size_t row) const;
  AffineRow row(std::size_t index) const;
  HeapVector evaluate(std::size_t row, Int t) const;

  void append(std::span<const Int> offsets);
  void reserve(std::size_t rows) { offsets_.reserve(rows * static_cast<std::size_t>(d_.value())); }
  std::vector<Int>& raw() noexcept { return offsets_; }

 private:
  Dimension d_;
  std::vector<Int> slopes_;
  std::vector<Int> offsets_;
};

// Binary rat matrix: 2^(d-1) rows indexed from 0. Row i starts at
// (2^d - 1) t + 2i + 1 and every further column doubles the previous one and
// subtracts a bit of i, most significant bit first.
struct RatMatrix {
  AffineMatrix rows;

  Dimension dimension() const { return rows.dimension(); }
  // Bit of row i consumed by column j (2..d).
  static int row_bit(std::size_t row, Dimension d, int column);
};

RatMatrix build_rat_matrix(Dimension d);

// r(n) read from the matrix: row (n-1) mod 2^(d-1) at t = floor((n-1) / 2^(d-1)).
HeapVector matrix_rat_vector(const RatMatrix& matrix, RatIndex n);

// Proper shortcut matrix: 3^(d-1) per-period rows sorted right-to-left
// lexicographically (last column most significant). Row 0 is all zeros.
struct ShortcutMatrix {
  AffineMatrix rows;

  Dimension dimension() const { return rows.dimension(); }
  TernaryWord word(std::size_t row) const;
};

inline constexpr std::size_t kDefaultShortcutRowCap = 1594323;  // 3^13

ShortcutMatrix build_shortcut_matrix(Dimension d, std::size_t row_cap = kDefaultShortcutRowCap);

// Tree rooted at (d, i (2^d - 1)); an even label x at level j has the single
// child (j-1, x/2), an odd label the children (j-1, (x-1)/2), (j-1, (x+1)/2).
class ShortcutTree {
 public:
  struct Node {
    int level = 0;
    Int label = 0;
    int parent = -1;
    std::vector<int> children;
  };

  ShortcutTree(Dimension d, Int root_index);

  Dimension dimension() const noexcept { return d_; }
  Int root_index() const noexcept { return root_index_; }
  const std::vector<Node>& nodes() const noexcept { return nodes_; }

  // Leaf-to-root paths as vectors (x_1, ..., x_d), leaves left to right.
  std::vector<HeapVector> paths() const;
  // Same paths with each label (j, x) replaced by 2^(j-1)(2^d - 1) n + x.
  std::vector<HeapVector> paths_at(Int n) const;

 private:
  Dimension d_;
  Int root_index_;
  std::vector<Node> nodes_;
};

ShortcutTree shortcut_tree(Dimension d, Int root_index);

// Ternary word of a shortcut row's offsets. Throws kInvalidRow when the
// offsets do not satisfy the ternary recurrence.
TernaryWord row_word(const AffineRow& row);
// Inverse of row_word on the per-period rows.
AffineRow word_row(Dimension d, const TernaryWord& word);

// Words of F's rows from the last row up to row 1 (0-based), i.e. every row
// except the all-zero first one, in reverse order.
std::vector<TernaryWord> difference_matrix(Dimension d);

// "slope*n+offset" CSV, one row per line.
std::string matrix_to_csv(const AffineMatrix& m);
// {"d":..,"slopes":[..],"rows":[[..],..]} on one line.
std::string matrix_to_json(const AffineMatrix& m);

}  // namespace ratlab
