#include "ratlab/oracle.hpp"

#include <algorithm>

#include "ratlab/sequences.hpp"

namespace ratlab::oracle {
namespace {

std::vector<HeapVector> rats_within(Dimension d, std::span<const Int> limit, std::size_t cap) {
  std::vector<HeapVector> out;
  for (RatIndex n = 1;; ++n) {
    HeapVector r = rat_vector(d, n);
    if (r.at(d.value()) > limit.back()) break;
    bool inside = true;
    for (std::size_t j = 0; j < limit.size(); ++j) inside = inside && r[j] <= limit[j];
    if (!inside) continue;
    if (out.size() >= cap) {
      throw Error(ErrorCode::kCapExceeded, "more than " + std::to_string(cap) + " rat vectors in range");
    }
    out.push_back(std::move(r));
  }
  return out;
}

void require_bound(Dimension d, const HeapVector& bound) {
  if (static_cast<int>(bound.size()) != d.value()) {
    throw Error(ErrorCode::kDimensionMismatch, "bound has " + std::to_string(bound.size()) + " heaps, expected " +
                                                   std::to_string(d.value()));
  }
}

}  // namespace

Box::Box(HeapVector upper, std::size_t cell_cap) : upper_(std::move(upper)) {
  (void)upper_.dimension();
  const std::size_t d = upper_.size();
  strides_.assign(d, 1);
  std::size_t cells = 1;
  for (std::size_t j = d; j-- > 0;) {
    strides_[j] = cells;
    const auto side = static_cast<std::size_t>(upper_[j]) + 1;
    if (cells > cell_cap / side) {
      throw Error(ErrorCode::kCapExceeded, "box [0," + upper_.to_string() + "] exceeds the cap of " +
                                               std::to_string(cell_cap) + " cells");
    }
    cells *= side;
  }
  cells_ = cells;
}

Box Box::cube(Dimension d, Int side, std::size_t cell_cap) {
  return Box(HeapVector(std::vector<Int>(static_cast<std::size_t>(d.value()), side)), cell_cap);
}

bool Box::contains(std::span<const Int> x) const noexcept {
  if (x.size() != upper_.size()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] < 0 || x[j] > upper_[j]) return false;
  }
  return true;
}

std::size_t Box::index_of(std::span<const Int> x) const noexcept {
  std::size_t idx = 0;
  for (std::size_t j = 0; j < x.size(); ++j) idx += static_cast<std::size_t>(x[j]) * strides_[j];
  return idx;
}

HeapVector Box::at(std::size_t index) const {
  std::vector<Int> out(upper_.size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] = static_cast<Int>(index / strides_[j]);
    index %= strides_[j];
  }
  return HeapVector(std::move(out));
}

std::string Box::to_string() const {
  const bool cube = std::all_of(upper_.entries().begin(), upper_.entries().end(),
                                [&](Int v) { return v == upper_[0]; });
  if (cube) return "[0," + std::to_string(upper_[0]) + "]^" + std::to_string(upper_.size());
  return "[0,(" + upper_.to_string() + ")]";
}

std::vector<HeapVector> enumerate_R(Dimension d, const HeapVector& bound, std::size_t cap) {
  require_bound(d, bound);
  std::vector<HeapVector> out = rats_within(d, bound.entries(), cap);
  out.push_back(HeapVector::zeros(bound.size()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<HeapVector> shortcut_set(Dimension d, const HeapVector& bound, std::size_t cap) {
  require_bound(d, bound);
  std::vector<Int> extended(bound.size());
  for (int j = 1; j <= d.value(); ++j) extended[j - 1] = checked_add(bound.at(j), d.column_slope(j));
  // Sorted by n, hence increasing in every column.
  const std::vector<HeapVector> rats = rats_within(d, extended, cap);

  std::vector<HeapVector> out;
  out.push_back(HeapVector::zeros(bound.size()));
  std::vector<Int> diff(bound.size());
  for (std::size_t a = 0; a < rats.size(); ++a) {
    for (std::size_t b = a + 1; b < rats.size(); ++b) {
      bool inside = true;
      for (std::size_t j = 0; j < diff.size(); ++j) {
        diff[j] = rats[b][j] - rats[a][j];
        inside = inside && diff[j] <= bound[j];
      }
      if (diff.back() > bound.entries().back()) break;
      if (!inside) continue;
      if (out.size() >= cap) {
        throw Error(ErrorCode::kCapExceeded, "more than " + std::to_string(cap) + " shortcuts in range");
      }
      out.emplace_back(diff);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ForbiddenIndex::ForbiddenIndex(const Box& box) : box_(box), bits_(box.cells(), 0) {
  const Dimension d = box.dimension();
  for (const HeapVector& r : enumerate_R(d, box.upper(), box.cells() + 1)) {
    if (!r.is_zero()) bits_[box.index_of(r)] = kRat;
  }
  for (const HeapVector& s : shortcut_set(d, box.upper(), box.cells() + 1)) bits_[box.index_of(s)] = kShortcut;
}

Int SolveTable::grundy_at(const HeapVector& x) const {
  if (!grundy) throw Error(ErrorCode::kInvalidArgument, "table was solved without Grundy values");
  return (*grundy)[box.index_of(x)];
}

std::vector<HeapVector> SolveTable::p_cells() const {
  std::vector<HeapVector> out;
  for (std::size_t k = 0; k < outcome.size(); ++k) {
    if (outcome[k] == Outcome::kP) out.push_back(box.at(k));
  }
  return out;
}

SolveTable retrograde_solve(const Box& box) {
  const ForbiddenIndex forbidden(box);
  SolveTable table{box, std::vector<Outcome>(box.cells(), Outcome::kN), std::nullopt};
  const std::size_t d = box.upper().size();

  struct PCell {
    std::size_t index;
    std::vector<Int> coords;
  };
  std::vector<PCell> p_cells;
  std::vector<Int> x(d, 0);
  for (std::size_t idx = 0; idx < box.cells(); ++idx) {
    bool has_winning_move = false;
    for (const PCell& p : p_cells) {
      bool below = true;
      for (std::size_t j = 0; j < d && below; ++j) below = p.coords[j] <= x[j];
      // x - p is in the box and its index is the difference of indices.
      if (below && !forbidden.forbidden(idx - p.index)) {
        has_winning_move = true;
        break;
      }
    }
    if (!has_winning_move) {
      table.outcome[idx] = Outcome::kP;
      p_cells.push_back(PCell{idx, x});
    }
    for (std::size_t j = d; j-- > 0;) {
      if (++x[j] <= box.upper()[j]) break;
      x[j] = 0;
    }
  }
  return table;
}

SolveTable mex_grundy(const Box& box) {
  const ForbiddenIndex forbidden(box);
  const std::size_t d = box.upper().size();
  const Int max_value = box.upper().total() + 2;
  SolveTable table{box, std::vector<Outcome>(box.cells(), Outcome::kN), std::vector<Int>(box.cells(), 0)};
  auto& g = *table.grundy;

  std::vector<std::size_t> seen(static_cast<std::size_t>(max_value) + 1, 0);
  std::vector<Int> x(d, 0);
  std::vector<Int> y(d, 0);
  for (std::size_t idx = 0; idx < box.cells(); ++idx) {
    const std::size_t stamp = idx + 1;
    // Odometer over every y <= x.
    std::fill(y.begin(), y.end(), 0);
    while (true) {
      const std::size_t yi = box.index_of(y);
      if (yi != idx && !forbidden.forbidden(idx - yi)) seen[static_cast<std::size_t>(g[yi])] = stamp;
      std::size_t j = d;
      while (j-- > 0) {
        if (++y[j] <= x[j]) break;
        y[j] = 0;
      }
      if (j == static_cast<std::size_t>(-1)) break;
    }
    Int mex = 0;
    while (seen[static_cast<std::size_t>(mex)] == stamp) ++mex;
    g[idx] = mex;
    table.outcome[idx] = mex == 0 ? Outcome::kP : Outcome::kN;

    for (std::size_t k = d; k-- > 0;) {
      if (++x[k] <= box.upper()[k]) break;
      x[k] = 0;
    }
  }
  return table;
}

}  // namespace ratlab::oracle
