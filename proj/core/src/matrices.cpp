#include "ratlab/matrices.hpp"

#include <algorithm>
#include <numeric>

#include <nlohmann/json.hpp>

namespace ratlab {
namespace {

std::vector<Int> column_slopes(Dimension d) {
  std::vector<Int> slopes(static_cast<std::size_t>(d.value()));
  for (int j = 1; j <= d.value(); ++j) slopes[j - 1] = d.column_slope(j);
  return slopes;
}

// Depth-first expansion of one shortcut tree; emits each leaf-to-root path
// as (x_1, ..., x_d) into `path` and calls `emit`, leaves left to right.
template <typename Emit>
void expand_tree(int level, Int label, std::vector<Int>& path, Emit& emit) {
  path[static_cast<std::size_t>(level - 1)] = label;
  if (level == 1) {
    emit(path);
    return;
  }
  if (label % 2 == 0) {
    expand_tree(level - 1, label / 2, path, emit);
  } else {
    expand_tree(level - 1, (label - 1) / 2, path, emit);
    expand_tree(level - 1, (label + 1) / 2, path, emit);
  }
}

}  // namespace

HeapVector AffineRow::evaluate(Int t) const {
  std::vector<Int> out(offsets.size());
  for (std::size_t j = 0; j < offsets.size(); ++j) out[j] = checked_add(checked_mul(slopes[j], t), offsets[j]);
  return HeapVector(std::move(out));
}

AffineMatrix::AffineMatrix(Dimension d) : d_(d), slopes_(column_slopes(d)) {}

std::span<const Int> AffineMatrix::offsets(std::size_t row) const {
  const auto width = static_cast<std::size_t>(d_.value());
  if (row >= rows()) throw Error(ErrorCode::kIndexOutOfRange, "matrix row " + std::to_string(row) + " out of range");
  return std::span<const Int>(offsets_).subspan(row * width, width);
}

AffineRow AffineMatrix::row(std::size_t index) const {
  auto o = offsets(index);
  return AffineRow{slopes_, std::vector<Int>(o.begin(), o.end())};
}

HeapVector AffineMatrix::evaluate(std::size_t row, Int t) const {
  auto o = offsets(row);
  std::vector<Int> out(o.size());
  for (std::size_t j = 0; j < o.size(); ++j) out[j] = checked_add(checked_mul(slopes_[j], t), o[j]);
  return HeapVector(std::move(out));
}

void AffineMatrix::append(std::span<const Int> offsets) {
  if (offsets.size() != static_cast<std::size_t>(d_.value())) {
    throw Error(ErrorCode::kDimensionMismatch, "row width does not match dimension");
  }
  offsets_.insert(offsets_.end(), offsets.begin(), offsets.end());
}

int RatMatrix::row_bit(std::size_t row, Dimension d, int column) {
  // b_{i,d-j}: bit (d - j) of i.
  return static_cast<int>((row >> (d.value() - column)) & 1U);
}

RatMatrix build_rat_matrix(Dimension d) {
  RatMatrix matrix{AffineMatrix(d)};
  const auto count = static_cast<std::size_t>(d.period());
  matrix.rows.reserve(count);
  std::vector<Int> offsets(static_cast<std::size_t>(d.value()));
  for (std::size_t i = 0; i < count; ++i) {
    offsets[0] = 2 * static_cast<Int>(i) + 1;
    for (int j = 2; j <= d.value(); ++j) {
      offsets[j - 1] = checked_sub(checked_mul(2, offsets[j - 2]), RatMatrix::row_bit(i, d, j));
    }
    matrix.rows.append(offsets);
  }
  return matrix;
}

HeapVector matrix_rat_vector(const RatMatrix& matrix, RatIndex n) {
  if (n < 1) throw Error(ErrorCode::kIndexOutOfRange, "row index must be positive");
  const Int period = matrix.dimension().period();
  return matrix.rows.evaluate(static_cast<std::size_t>((n - 1) % period), (n - 1) / period);
}

TernaryWord ShortcutMatrix::word(std::size_t row) const { return row_word(rows.row(row)); }

ShortcutMatrix build_shortcut_matrix(Dimension d, std::size_t row_cap) {
  const Int expected = pow3(d.value() - 1);
  if (static_cast<std::size_t>(expected) > row_cap) {
    throw Error(ErrorCode::kCapExceeded, "shortcut matrix for d=" + std::to_string(d.value()) + " needs " +
                                             std::to_string(expected) + " rows, cap is " + std::to_string(row_cap));
  }
  const auto width = static_cast<std::size_t>(d.value());
  const std::vector<Int> slopes = column_slopes(d);
  std::vector<Int> flat;
  flat.reserve(static_cast<std::size_t>(expected) * width);
  std::vector<Int> path(width);
  auto emit = [&](const std::vector<Int>& p) {
    for (std::size_t j = 0; j < width; ++j) flat.push_back(p[j] % slopes[j]);
  };
  const Int m = d.modulus();
  for (Int i = 1; i <= d.period(); ++i) expand_tree(d.value(), checked_mul(i, m), path, emit);

  const std::size_t count = flat.size() / width;
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    for (std::size_t j = width; j-- > 0;) {
      const Int x = flat[a * width + j];
      const Int y = flat[b * width + j];
      if (x != y) return x < y;
    }
    return false;
  });

  ShortcutMatrix matrix{AffineMatrix(d)};
  auto& out = matrix.rows.raw();
  out.reserve(flat.size());
  for (std::size_t idx : order) {
    out.insert(out.end(), flat.begin() + static_cast<std::ptrdiff_t>(idx * width),
               flat.begin() + static_cast<std::ptrdiff_t>((idx + 1) * width));
  }
  return matrix;
}

ShortcutTree::ShortcutTree(Dimension d, Int root_index) : d_(d), root_index_(root_index) {
  if (root_index < 1 || root_index > d.period()) {
    throw Error(ErrorCode::kIndexOutOfRange, "tree root index " + std::to_string(root_index) + " outside 1.." +
                                                 std::to_string(d.period()));
  }
  nodes_.push_back(Node{d.value(), checked_mul(root_index, d.modulus()), -1, {}});
  for (std::size_t k = 0; k < nodes_.size(); ++k) {
    const Node node = nodes_[k];
    if (node.level == 1) continue;
    std::vector<Int> labels;
    if (node.label % 2 == 0) {
      labels = {node.label / 2};
    } else {
      labels = {(node.label - 1) / 2, (node.label + 1) / 2};
    }
    for (Int label : labels) {
      nodes_[k].children.push_back(static_cast<int>(nodes_.size()));
      nodes_.push_back(Node{node.level - 1, label, static_cast<int>(k), {}});
    }
  }
}

std::vector<HeapVector> ShortcutTree::paths() const { return paths_at(0); }

std::vector<HeapVector> ShortcutTree::paths_at(Int n) const {
  std::vector<HeapVector> out;
  const auto width = static_cast<std::size_t>(d_.value());
  // Depth-first over the stored nodes so that leaves come out left to right.
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int k = stack.back();
    stack.pop_back();
    const Node& node = nodes_[static_cast<std::size_t>(k)];
    if (node.children.empty()) {
      std::vector<Int> path(width);
      for (int at = k; at >= 0; at = nodes_[static_cast<std::size_t>(at)].parent) {
        const Node& step = nodes_[static_cast<std::size_t>(at)];
        path[static_cast<std::size_t>(step.level - 1)] =
            checked_add(checked_mul(d_.column_slope(step.level), n), step.label);
      }
      out.emplace_back(std::move(path));
      continue;
    }
    for (auto it = node.children.rbegin(); it != node.children.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

ShortcutTree shortcut_tree(Dimension d, Int root_index) { return ShortcutTree(d, root_index); }

TernaryWord row_word(const AffineRow& row) {
  const HeapVector offsets(row.offsets);
  const Dimension d = offsets.dimension();
  for (int j = 1; j <= d.value(); ++j) {
    if (row.slopes.size() != offsets.size() || row.slopes[j - 1] != d.column_slope(j)) {
      throw Error(ErrorCode::kInvalidRow, "row slopes do not match dimension " + std::to_string(d.value()));
    }
  }
  auto word = ternary_recurrence(offsets);
  if (!word) throw Error(ErrorCode::kInvalidRow, "row " + offsets.to_string() + " has no ternary recurrence");
  return *word;
}

AffineRow word_row(Dimension d, const TernaryWord& word) {
  if (word.size() != static_cast<std::size_t>(d.value() - 1)) {
    throw Error(ErrorCode::kInvalidRow, "word length " + std::to_string(word.size()) + " does not match d-1");
  }
  // Building upwards, x_i = 2 x_{i-1} + 1 - w_i, so
  // x_d = 2^(d-1) x_1 - c with c = sum 2^(d-i) (w_i - 1). Since
  // 2^d = 1 (mod 2^d - 1), x_d = 0 forces x_1 = 2c (mod 2^d - 1).
  const Int m = d.modulus();
  Int c = 0;
  for (int i = 2; i <= d.value(); ++i) c = checked_add(checked_mul(c, 2), Int{word.digit(i)} - 1);
  std::vector<Int> offsets(static_cast<std::size_t>(d.value()));
  offsets[0] = floor_mod(checked_mul(2, floor_mod(c, m)), m);
  for (int i = 2; i <= d.value(); ++i) {
    offsets[i - 1] = checked_add(checked_mul(2, offsets[i - 2]), 1 - Int{word.digit(i)});
  }
  AffineRow row{column_slopes(d), std::move(offsets)};
  for (std::size_t j = 0; j < row.offsets.size(); ++j) {
    if (row.offsets[j] < 0 || row.offsets[j] >= row.slopes[j]) {
      throw Error(ErrorCode::kInvalidRow, "word " + word.to_string() + " does not describe a period row");
    }
  }
  return row;
}

std::vector<TernaryWord> difference_matrix(Dimension d) {
  const ShortcutMatrix f = build_shortcut_matrix(d);
  std::vector<TernaryWord> out;
  out.reserve(f.rows.rows() - 1);
  for (std::size_t row = f.rows.rows() - 1; row >= 1; --row) out.push_back(f.word(row));
  return out;
}

std::string matrix_to_csv(const AffineMatrix& m) {
  std::string out;
  const auto& slopes = m.slopes();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto offsets = m.offsets(r);
    for (std::size_t j = 0; j < offsets.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(slopes[j]) + "*n+" + std::to_string(offsets[j]);
    }
    out += '\n';
  }
  return out;
}

std::string matrix_to_json(const AffineMatrix& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto offsets = m.offsets(r);
    rows.push_back(std::vector<Int>(offsets.begin(), offsets.end()));
  }
  nlohmann::ordered_json doc{{"d", m.dimension().value()}, {"slopes", m.slopes()}, {"rows", std::move(rows)}};
  return doc.dump();
}

}  // namespace ratlab
