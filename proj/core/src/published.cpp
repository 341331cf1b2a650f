// Values as printed in the published tables, transcribed verbatim.
#include "ratlab/published.hpp"

namespace ratlab::published {
const std::vector<std::vector<Int>>& grundy_table_2heaps() {
  static const std::vector<std::vector<Int>> kTable = {
      {0, 1, 2, 3, 4, 5, 6},
      {1, 2, 3, 4, 5, 6, 7},
      {2, 0, 4, 5, 6, 7, 8},
      {3, 4, 5, 6, 7, 8, 9},
      {4, 5, 6, 7, 8, 9, 10},
      {5, 6, 7, 0, 9, 10, 11},
      {6, 7, 8, 9, 10, 11, 12},
      {7, 8, 9, 10, 11, 12, 13},
      {8, 9, 10, 11, 0, 13, 14},
  };
  return kTable;
}

const std::vector<std::vector<Int>>& matrix_offsets(char kind, int d) {
  static const std::vector<std::vector<Int>> kR2 = {
      {1, 2},
      {3, 5},
  };
  static const std::vector<std::vector<Int>> kF2 = {
      {0, 0},
      {1, 3},
      {2, 3},
  };
  static const std::vector<std::vector<Int>> kR3 = {
      {1, 2, 4},
      {3, 6, 11},
      {5, 9, 18},
      {7, 13, 25},
  };
  static const std::vector<std::vector<Int>> kF3 = {
      {0, 0, 0},
      {1, 3, 7},
      {2, 3, 7},
      {2, 4, 7},
      {3, 7, 14},
      {4, 7, 14},
      {5, 10, 21},
      {5, 11, 21},
      {6, 11, 21},
  };
  static const std::vector<std::vector<Int>> kR4 = {
      {1, 2, 4, 8},
      {3, 6, 12, 23},
      {5, 10, 19, 38},
      {7, 14, 27, 53},
      {9, 17, 34, 68},
      {11, 21, 42, 83},
      {13, 25, 49, 98},
      {15, 29, 57, 113},
  };
  static const std::vector<std::vector<Int>> kF4 = {
      {0, 0, 0, 0},
      {1, 3, 7, 15},
      {2, 3, 7, 15},
      {2, 4, 7, 15},
      {2, 4, 8, 15},
      {3, 7, 15, 30},
      {4, 7, 15, 30},
      {4, 8, 15, 30},
      {5, 11, 22, 45},
      {6, 11, 22, 45},
      {5, 11, 23, 45},
      {6, 11, 23, 45},
      {6, 12, 23, 45},
      {7, 15, 30, 60},
      {8, 15, 30, 60},
      {9, 18, 37, 75},
      {9, 19, 37, 75},
      {10, 19, 37, 75},
      {9, 19, 38, 75},
      {10, 19, 38, 75},
      {11, 22, 45, 90},
      {11, 23, 45, 90},
      {12, 23, 45, 90},
      {13, 26, 52, 105},
      {13, 26, 53, 105},
      {13, 27, 53, 105},
      {14, 27, 53, 105},
  };
  static const std::vector<std::vector<Int>> kEmpty;
  if (kind == 'R' && d == 2) return kR2;
  if (kind == 'F' && d == 2) return kF2;
  if (kind == 'R' && d == 3) return kR3;
  if (kind == 'F' && d == 3) return kF3;
  if (kind == 'R' && d == 4) return kR4;
  if (kind == 'F' && d == 4) return kF4;
  return kEmpty;
}

const std::vector<std::vector<int>>& difference_matrix_rows(int d) {
  static const std::vector<std::vector<int>> k3 = {
      {2, 2},
      {0, 2},
      {1, 0},
      {2, 1},
      {0, 1},
      {1, 2},
      {2, 0},
      {0, 0},
  };
  static const std::vector<std::vector<int>> k4 = {
      {2, 2, 2},
      {0, 2, 2},
      {1, 0, 2},
      {1, 1, 0},
      {2, 2, 1},
      {0, 2, 1},
      {1, 0, 1},
      {2, 1, 2},
      {0, 1, 2},
      {2, 2, 0},
      {0, 2, 0},
      {1, 0, 0},
      {2, 1, 1},
      {0, 1, 1},
      {1, 2, 2},
      {2, 0, 2},
      {0, 0, 2},
      {2, 1, 0},
      {0, 1, 0},
      {1, 2, 1},
      {2, 0, 1},
      {0, 0, 1},
      {1, 1, 2},
      {1, 2, 0},
      {2, 0, 0},
      {0, 0, 0},
  };
  static const std::vector<std::vector<int>> kEmpty;
  if (d == 3) return k3;
  if (d == 4) return k4;
  return kEmpty;
}

const std::vector<ProfileData>& difference_profiles() {
  static const std::vector<ProfileData> kProfiles = {
      {2,
       {-2, 1},
       {1, 2}},
      {3,
       {-6, 1, 4},
       {3, 2, 4}},
      {4,
       {-18, 1, 3, 13, 19},
       {9, 2, 6, 8, 2}},
      {5,
       {-54, 1, 3, 9, 40, 46, 55, 57},
       {27, 2, 6, 18, 16, 4, 2, 6}},
      {6,
       {-162, 1, 3, 9, 27, 121, 127, 136, 138, 163, 165, 171},
       {81, 2, 6, 18, 54, 32, 8, 4, 12, 2, 6, 18}},
      {7,
       {-486, 1, 3, 9, 27, 81, 364, 370, 379, 381, 406, 408, 414, 487, 489, 495, 513},
       {243, 2, 6, 18, 54, 162, 64, 16, 8, 24, 4, 12, 36, 2, 6, 18, 54}},
      {8,
       {-1458, 1, 3, 9, 27, 81, 243, 1093, 1099, 1108, 1110, 1135, 1137, 1143, 1216, 1218, 1224, 1242, 1459, 1461, 1467, 1485, 1539},
       {729, 2, 6, 18, 54, 162, 486, 128, 32, 16, 48, 8, 24, 72, 4, 12, 36, 108, 2, 6, 18, 54, 162}},
      {9,
       {-4374, 1, 3, 9, 27, 81, 243, 729, 3280, 3286, 3295, 3297, 3322, 3324, 3330, 3403, 3405, 3411, 3429, 3646, 3648, 3654, 3672, 3726, 4375, 4377, 4383, 4401, 4455, 4617},
       {2187, 2, 6, 18, 54, 162, 486, 1458, 256, 64, 32, 96, 16, 48, 144, 8, 24, 72, 216, 4, 12, 36, 108, 324, 2, 6, 18, 54, 162, 486}},
      {10,
       {-13122, 1, 3, 9, 27, 81, 243, 729, 2187, 9841, 9847, 9856, 9858, 9883, 9885, 9891, 9964, 9966, 9972, 9990, 10207, 10209, 10215, 10233, 10287, 10936, 10938, 10944, 10962, 11016, 11178, 13123, 13125, 13131, 13149, 13203, 13365, 13851},
       {6561, 2, 6, 18, 54, 162, 486, 1458, 4374, 512, 128, 64, 192, 32, 96, 288, 16, 48, 144, 432, 8, 24, 72, 216, 648, 4, 12, 36, 108, 324, 972, 2, 6, 18, 54, 162, 486, 1458}},
      {11,
       {-39366, 1, 3, 9, 27, 81, 243, 729, 2187, 6561, 29524, 29530, 29539, 29541, 29566, 29568, 29574, 29647, 29649, 29655, 29673, 29890, 29892, 29898, 29916, 29970, 30619, 30621, 30627, 30645, 30699, 30861, 32806, 32808, 32814, 32832, 32886, 33048, 33534, 39367, 39369, 39375, 39393, 39447, 39609, 40095, 41553},
       {}},
      {12,
       {-118098, 1, 3, 9, 27, 81, 243, 729, 2187, 6561, 19683, 88573, 88579, 88588, 88590, 88615, 88617, 88623, 88696, 88698, 88704, 88722, 88939, 88941, 88947, 88965, 89019, 89668, 89670, 89676, 89694, 89748, 89910, 91855, 91857, 91863, 91881, 91935, 92097, 92583, 98416, 98418, 98424, 98442, 98496, 98658, 99144, 100602, 118099, 118101, 118107, 118125, 118179, 118341, 118827, 120285, 124659},
       {}},
  };
  return kProfiles;
}

const std::vector<std::vector<Int>>& baseline_gap_lists() {
  static const std::vector<std::vector<Int>> kGaps = {
      {},
      {3, 3},
      {4, 3, 2, 3, 3, 2, 3, 4},
      {5, 4, 3, 4, 3, 2, 3, 3, 2, 3, 2, 2, 3, 3, 2, 2, 3, 2, 3, 3, 2, 3, 4, 3, 4, 5},
      {6, 5, 4, 5, 4, 3, 4, 4, 3, 4, 3, 3, 4, 3, 2, 3, 3, 3, 2, 3, 3, 2, 3, 2, 3, 3, 2, 3, 2, 2, 3, 2, 3,
       2, 2, 3, 2, 2, 2, 3, 3, 2, 2, 2, 3, 2, 2, 3, 2, 3, 2, 2, 3, 2, 3, 3, 2, 3, 2, 3, 3, 2, 3, 3, 3, 2,
       3, 4, 3, 3, 4, 3, 4, 4, 3, 4, 5, 4, 5, 6},
      {7, 6, 5, 6, 5, 4, 5, 5, 4, 5, 4, 4, 5, 4, 3, 4, 4, 4, 3, 4, 4, 3, 4, 3, 4, 4, 3, 4, 3, 3, 4, 3, 4,
       3, 3, 4, 3, 3, 3, 4, 3, 2, 3, 3, 3, 3, 2, 3, 3, 3, 2, 3, 3, 2, 3, 3, 3, 2, 3, 3, 2, 3, 2, 3, 3, 2,
       3, 3, 2, 3, 2, 3, 3, 2, 3, 2, 3, 2, 3, 3, 2, 3, 2, 2, 3, 2, 3, 2, 3, 2, 2, 3, 2, 3, 2, 2, 3, 2, 2,
       3, 2, 3, 2, 2, 3, 2, 2, 2, 3, 2, 2, 3, 2, 2, 2, 3, 2, 2, 2, 2, 3, 3, 2, 2, 2, 2, 3, 2, 2, 2, 3, 2,
       2, 3, 2, 2, 2, 3, 2, 2, 3, 2, 3, 2, 2, 3, 2, 2, 3, 2, 3, 2, 2, 3, 2, 3, 2, 3, 2, 2, 3, 2, 3, 3, 2,
       3, 2, 3, 2, 3, 3, 2, 3, 2, 3, 3, 2, 3, 3, 2, 3, 2, 3, 3, 2, 3, 3, 3, 2, 3, 3, 2, 3, 3, 3, 2, 3, 3,
       3, 3, 2, 3, 4, 3, 3, 3, 4, 3, 3, 4, 3, 4, 3, 3, 4, 3, 4, 4, 3, 4, 3, 4, 4, 3, 4, 4, 4, 3, 4, 5, 4,
       4, 5, 4, 5, 5, 4, 5, 6, 5, 6, 7},
      {8, 7, 6, 7, 6, 5, 6, 6, 5, 6, 5, 5, 6, 5, 4, 5, 5, 5, 4, 5, 5, 4, 5, 4, 5, 5, 4, 5, 4, 4, 5, 4, 5,
       4, 4, 5, 4, 4, 4, 5, 4, 3, 4, 4, 4, 4, 3, 4, 4, 4, 3, 4, 4, 3, 4, 4, 4, 3, 4, 4, 3, 4, 3, 4, 4, 3,
       4, 4, 3, 4, 3, 4, 4, 3, 4, 3, 4, 3, 4, 4, 3, 4, 3, 3, 4, 3, 4, 3, 4, 3, 3, 4, 3, 4, 3, 3, 4, 3, 3,
       4, 3, 4, 3, 3, 4, 3, 3, 3, 4, 3, 3, 4, 3, 3, 3, 4, 3, 3, 3, 3, 4, 3, 2, 3, 3, 3, 3, 3, 2, 3, 3, 3,
       3, 2, 3, 3, 3, 2, 3, 3, 3, 3, 2, 3, 3, 3, 2, 3, 3, 2, 3, 3, 3, 2, 3, 3, 3, 2, 3, 3, 2, 3, 3, 3, 2,
       3, 3, 2, 3, 3, 2, 3, 3, 3, 2, 3, 3, 2, 3, 2, 3, 3, 2, 3, 3, 2, 3, 3, 2, 3, 2, 3, 3, 2, 3, 3, 2, 3,
       2, 3, 3, 2, 3, 2, 3, 3, 2, 3, 3, 2, 3, 2, 3, 3, 2, 3, 2, 3, 2, 3, 3, 2, 3, 2, 3, 3, 2, 3, 2, 3, 2,
       3, 3, 2, 3, 2, 3, 2, 3, 2, 3, 3, 2, 3, 2, 2, 3, 2, 3, 2, 3, 2, 3, 2, 2, 3, 2, 3, 2, 3, 2, 2, 3, 2,
       3, 2, 2, 3, 2, 3, 2, 3, 2, 2, 3, 2, 3, 2, 2, 3, 2, 2, 3, 2, 3, 2, 2, 3, 2, 3, 2, 2, 3, 2, 2, 3, 2,
       3, 2, 2, 3, 2, 2, 3, 2, 2, 3, 2, 3, 2, 2, 3, 2, 2, 2, 3, 2, 2, 3, 2, 2, 3, 2, 2, 2, 3, 2, 2, 3, 2,
       2, 2, 3, 2, 2, 2, 3, 2, 2, 3, 2, 2, 2, 3, 2, 2, 2, 2, 3, 2, 2, 2, 3, 2, 2, 2, 2, 3, 2, 2, 2, 2, 2,
       3, 3, 2, 2, 2, 2, 2, 3, 2, 2, 2, 2, 3, 2, 2, 2, 3, 2, 2, 2, 2, 3, 2, 2, 2, 3, 2, 2, 3, 2, 2, 2, 3,
       2, 2, 2, 3, 2, 2, 3, 2, 2, 2, 3, 2, 2, 3, 2, 2, 3, 2, 2, 2, 3, 2, 2, 3, 2, 3, 2, 2, 3, 2, 2, 3, 2,
       2, 3, 2, 3, 2, 2, 3, 2, 2, 3, 2, 3, 2, 2, 3, 2, 3, 2, 2, 3, 2, 2, 3, 2, 3, 2, 2, 3, 2, 3, 2, 3, 2,
       2, 3, 2, 3, 2, 2, 3, 2, 3, 2, 3, 2, 2, 3, 2, 3, 2, 3, 2, 3, 2, 2, 3, 2, 3, 3, 2, 3, 2, 3, 2, 3, 2,
       3, 3, 2, 3, 2, 3, 2, 3, 3, 2, 3, 2, 3, 3, 2, 3, 2, 3, 2, 3, 3, 2, 3, 2, 3, 3, 2, 3, 3, 2, 3, 2, 3,
       3, 2, 3, 2, 3, 3, 2, 3, 3, 2, 3, 2, 3, 3, 2, 3, 3, 2, 3, 3, 2, 3, 2, 3, 3, 2, 3, 3, 3, 2, 3, 3, 2,
       3, 3, 2, 3, 3, 3, 2, 3, 3, 2, 3, 3, 3, 2, 3, 3, 3, 2, 3, 3, 2, 3, 3, 3, 2, 3, 3, 3, 3, 2, 3, 3, 3,
       2, 3, 3, 3, 3, 2, 3, 3, 3, 3, 3, 2, 3, 4, 3, 3, 3, 3, 4, 3, 3, 3, 4, 3, 3, 4, 3, 3, 3, 4, 3, 3, 4,
       3, 4, 3, 3, 4, 3, 3, 4, 3, 4, 3, 3, 4, 3, 4, 3, 4, 3, 3, 4, 3, 4, 4, 3, 4, 3, 4, 3, 4, 4, 3, 4, 3,
       4, 4, 3, 4, 4, 3, 4, 3, 4, 4, 3, 4, 4, 4, 3, 4, 4, 3, 4, 4, 4, 3, 4, 4, 4, 4, 3, 4, 5, 4, 4, 4, 5,
       4, 4, 5, 4, 5, 4, 4, 5, 4, 5, 5, 4, 5, 4, 5, 5, 4, 5, 5, 5, 4, 5, 6, 5, 5, 6, 5, 6, 6, 5, 6, 7, 6,
       7, 8},
  };
  return kGaps;
}

const std::vector<std::vector<Int>>& sigma_vectors() {
  static const std::vector<std::vector<Int>> kSigma = {
      {2},
      {3, 2},
      {4, 3, 5, 2},
      {5, 4, 7, 3, 8, 5, 7, 2},
      {6, 5, 9, 4, 11, 7, 10, 3, 11, 8, 13, 5, 12, 7, 9, 2},
  };
  return kSigma;
}

const std::vector<Int>& xi_sequence() {
  static const std::vector<Int> kXi = {2, 3, 5, 8, 12, 17, 23, 30, 38, 47, 57};
  return kXi;
}

const std::vector<Annotation>& d12_annotations() {
  static const std::vector<Annotation> kMarks = {
      {-118098, "baseline"}, {6561, "pb"},    {19683, "pt"},   {88573, "star"}, {88579, "at"},
      {88588, "at"},         {88615, "at"},   {88696, "at"},   {88939, "at"},   {89668, "at"},
      {91855, "at"},         {98416, "at"},   {118099, "at"},
  };
  return kMarks;
}

}  // namespace ratlab::published
