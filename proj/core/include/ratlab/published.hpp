#pragma once

#include <string>
#include <vector>

#include "ratlab/checked.hpp"

// Published reference values for the rat games: the two-heap Grundy table,
// the printed rat/shortcut matrices for d = 2, 3, 4, the two difference
// matrices, the shortcut difference profiles for d = 2..12, the baseline gap
// lists for d = 2..8, the printed last-column count vectors and the printed
// set-size sequence. Everything here is data to compare against; nothing in
// the library computes from it.
namespace ratlab::published {

// Rows indexed by the second heap, columns by the first; 9 x 7.
const std::vector<std::vector<Int>>& grundy_table_2heaps();

// Per-row offsets of the printed matrices; kind is 'R' or 'F', d in 2..4.
// Empty for anything else.
const std::vector<std::vector<Int>>& matrix_offsets(char kind, int d);

// Printed difference matrices for d = 3 and d = 4, top row first.
const std::vector<std::vector<int>>& difference_matrix_rows(int d);

struct ProfileData {
  int d;
  std::vector<Int> values;       // sorted distinct differences
  std::vector<Int> multiplicity; // empty when not printed (d = 11, 12)
};
const std::vector<ProfileData>& difference_profiles();

// Baseline gap lists for d = 2..8 (index 0 is d = 2).
const std::vector<std::vector<Int>>& baseline_gap_lists();

// Printed last-column count vectors for d = 2..6.
const std::vector<std::vector<Int>>& sigma_vectors();

// Printed sizes of the difference sets, d = 2..12.
const std::vector<Int>& xi_sequence();

// Annotated values of the d = 12 set: "baseline", "pb", "pt", "star", "at".
struct Annotation {
  Int value;
  std::string marker;
};
const std::vector<Annotation>& d12_annotations();

}  // namespace ratlab::published
