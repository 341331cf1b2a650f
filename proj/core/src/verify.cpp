#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "ratlab/fractal.hpp"
#include "ratlab/grundy.hpp"
#include "ratlab/matrices.hpp"
#include "ratlab/oracle.hpp"
#include "ratlab/published.hpp"
#include "ratlab/rules.hpp"
#include "ratlab/sequences.hpp"

namespace ratlab::oracle {
namespace {

class Check {
 public:
  explicit Check(VerifyReport& report) : report_(report) {}

  void fail(const std::string& what) {
    report_.pass = false;
    ++failures_;
    if (report_.counterexamples.size() < VerifyReport::kMaxCounterexamples) report_.counterexamples.push_back(what);
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  template <typename Describe>
  void expect_lazy(bool ok, Describe&& describe) {
    if (!ok) fail(describe());
  }
  void note(std::string text) { report_.notes.push_back(std::move(text)); }
  std::size_t failures() const { return failures_; }

 private:
  VerifyReport& report_;
  std::size_t failures_ = 0;
};

using ClaimFn = std::function<void(const VerifyParams&, Check&)>;

struct Claim {
  ClaimInfo info;
  ClaimFn run;
};

std::string join(const std::vector<Int>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(v[k]);
  }
  return out;
}

// Desk-scale P/N box side per dimension.
Int default_side(int d) {
  switch (d) {
    case 2: return 200;
    case 3: return 60;
    case 4: return 40;
    case 5: return 12;
    default: return 6;
  }
}

Int default_grundy_side(int d) {
  switch (d) {
    case 2: return 60;
    case 3: return 16;
    case 4: return 6;
    default: return 3;
  }
}

Box box_for(const VerifyParams& p, Int fallback) {
  const Dimension d(p.d);
  return Box::cube(d, p.bound > 0 ? p.bound : fallback, p.cell_cap);
}

template <typename Fn>
void for_each_cell(const Box& box, Fn&& fn) {
  const std::size_t width = box.upper().size();
  std::vector<Int> x(width, 0);
  for (std::size_t idx = 0; idx < box.cells(); ++idx) {
    fn(HeapVector(x), idx);
    for (std::size_t j = width; j-- > 0;) {
      if (++x[j] <= box.upper()[j]) break;
      x[j] = 0;
    }
  }
}

int range_check(const VerifyParams& p, int lo, int hi, const char* claim) {
  if (p.d < lo || p.d > hi) {
    throw Error(ErrorCode::kInvalidArgument, std::string(claim) + " runs for " + std::to_string(lo) +
                                                 " <= d <= " + std::to_string(hi));
  }
  return p.d;
}

// ---- sequences -----------------------------------------------------------

void claim_split(const VerifyParams& p, Check& c) {
  const int d = range_check(p, 2, 20, "split");
  const Int bound = p.bound > 0 ? p.bound : 10'000;
  const SplitReport r = split_check(Dimension(d), bound);
  c.expect(r.covered, "d=" + std::to_string(d) + " duplicates {" + join(r.duplicates) + "} missing {" +
                          join(r.missing) + "}");
  c.note("1.." + std::to_string(bound) + " covered exactly once");
}

void claim_columns(const VerifyParams& p, Check& c) {
  const Dimension d(range_check(p, 2, 30, "columns"));
  const Int bound = p.bound > 0 ? p.bound : 10'000;
  const Int m = d.modulus();
  for (int j = 1; j <= d.value(); ++j) {
    const Int period = pow2(d.value() - j);
    Int previous = 0;
    for (RatIndex n = 1; n <= bound; ++n) {
      const Int v = rat_entry(d, j, n);
      c.expect_lazy(v >= 1 && v > previous, [&] {
        return "r_" + std::to_string(j) + "(" + std::to_string(n) + ") = " + std::to_string(v) + " not increasing";
      });
      c.expect_lazy(rat_entry(d, j, n + period) == v + m, [&] {
        return "column " + std::to_string(j) + " not periodic with saltus " + std::to_string(m) + " at n=" +
               std::to_string(n);
      });
      previous = v;
    }
  }
}

void claim_gap_identity(const VerifyParams& p, Check& c) {
  const Dimension d(range_check(p, 2, 20, "gap-identity"));
  const Int bound = p.bound > 0 ? p.bound : 500;
  const int dd = d.value();
  bool corrected = true;
  for (RatIndex n = 2; n <= bound; ++n) {
    for (int j = 1; j <= dd; ++j) {
      const Int direct = rat_entry(d, j, n) - rat_entry(d, j, n - 1);
      c.expect_lazy(direct == gap(d, j, n), [&] {
        return "gap closed form differs at column " + std::to_string(j) + ", n=" + std::to_string(n);
      });
    }
    Int sum = 0;
    for (int j = 2; j <= dd; ++j) sum += pow2(dd - j + 1) * gap(d, j - 1, n) - pow2(dd - j) * gap(d, j, n);
    c.expect(sum == 1, "gap identity sums to " + std::to_string(sum) + " at n=" + std::to_string(n));
    // Where the first column also drops by one nothing cancels its term.
    const Int expected = (n - 1) % d.period() == 0 ? 1 - d.period() : 1;
    if (sum != expected) corrected = false;
  }
  c.note(std::string("sum is 1 - 2^(d-1) when n = 1 mod 2^(d-1) and 1 otherwise: ") +
         (corrected ? "holds" : "fails") + " for 2 <= n <= " + std::to_string(bound));
}

void claim_ratwheel(const VerifyParams& p, Check& c) {
  const Dimension d(range_check(p, 2, 20, "ratwheel"));
  const Int bound = p.bound > 0 ? p.bound : 1000;
  std::vector<Int> slopes;
  for (int j = 1; j <= d.value(); ++j) slopes.push_back(d.column_slope(j));
  const HeapVector step(slopes);
  for (RatIndex n = 1; n <= bound; ++n) {
    const HeapVector a = rat_vector(d, n);
    const HeapVector b = rat_vector(d, n + d.period());
    c.expect(b == a + step, "r(n + 2^(d-1)) - r(n) differs from the column slopes at n=" + std::to_string(n));
    c.expect(rat_wheel_reduce(a) == rat_wheel_reduce(b), "wheel residues differ at n=" + std::to_string(n));
  }
}

void claim_rightshift(const VerifyParams& p, Check& c) {
  const Box box = box_for(p, default_side(p.d));
  for_each_cell(box, [&](const HeapVector& x, std::size_t) {
    const bool a = rightshift_membership(x);
    const bool b = rat_index_of(x).has_value();
    c.expect_lazy(a == b, [&] { return x.to_string() + ": right-shift test says " + (a ? "rat" : "not rat"); });
  });
  c.note("box " + box.to_string());
}

void claim_shift_lemma(const VerifyParams& p, Check& c) {
  std::mt19937_64 rng(p.seed);
  std::uniform_int_distribution<Int> num(-1'000'000'000'000, 1'000'000'000'000);
  std::uniform_int_distribution<Int> den(1, 1'000'000);
  for (std::size_t k = 0; k < p.samples; ++k) {
    const Int a = num(rng);
    const Int b = den(rng);
    // floor(y)/2 - floor(y/2) in [0, 1/2], doubled to stay integral.
    const Int twice = floor_div(a, b) - 2 * floor_div(a, 2 * b);
    c.expect_lazy(twice == 0 || twice == 1, [&] {
      return "y = " + std::to_string(a) + "/" + std::to_string(b) + " gives 2(floor(y)/2 - floor(y/2)) = " +
             std::to_string(twice);
    });
  }
  c.note(std::to_string(p.samples) + " samples, seed " + std::to_string(p.seed));
}

void claim_xy_lemma(const VerifyParams& p, Check& c) {
  std::mt19937_64 rng(p.seed);
  std::uniform_int_distribution<Int> xs(-1'000'000'000, 1'000'000'000);
  std::uniform_int_distribution<Int> ys(1, 1000);
  for (std::size_t k = 0; k < p.samples; ++k) {
    const Int y = ys(rng);
    // Bias half the samples onto multiples of y.
    const Int x = (k % 2 == 0) ? xs(rng) : y * (xs(rng) / 1000);
    const Int jump = floor_div(x, y) - floor_div(x - 1, y);
    const bool multiple = floor_mod(x, y) == 0;
    c.expect_lazy(jump == (multiple ? 1 : 0), [&] {
      return "x=" + std::to_string(x) + ", y=" + std::to_string(y) + ": jump " + std::to_string(jump);
    });
  }
  c.note(std::to_string(p.samples) + " samples, seed " + std::to_string(p.seed));
}

// ---- rules vs oracle -------------------------------------------------------

void claim_existence(const VerifyParams& p, Check& c) {
  const Box box = box_for(p, default_side(p.d));
  const SolveTable table = retrograde_solve(box);
  const auto p_cells = table.p_cells();
  const auto rats = enumerate_R(box.dimension(), box.upper(), box.cells());
  c.expect(p_cells.size() == rats.size(), std::to_string(p_cells.size()) + " P cells vs " +
                                              std::to_string(rats.size()) + " members of R + {0}");
  std::vector<HeapVector> extra, missing;
  std::set_difference(p_cells.begin(), p_cells.end(), rats.begin(), rats.end(), std::back_inserter(extra));
  std::set_difference(rats.begin(), rats.end(), p_cells.begin(), p_cells.end(), std::back_inserter(missing));
  for (const auto& x : extra) c.fail("P cell outside R: " + x.to_string());
  for (const auto& x : missing) c.fail("member of R not P: " + x.to_string());
  c.note("box " + box.to_string() + ", " + std::to_string(p_cells.size()) + " P cells");
}

void claim_playable(const VerifyParams& p, Check& c) {
  const Box box = box_for(p, default_side(p.d));
  const ForbiddenIndex index(box);
  for_each_cell(box, [&](const HeapVector& x, std::size_t) {
    const bool ternary = ternary_recurrence(x).has_value();
    c.expect_lazy(ternary == index.is_shortcut(x), [&] {
      return x.to_string() + ": ternary recurrence " + (ternary ? "holds" : "fails") + " but oracle disagrees";
    });
  });
  c.note("box " + box.to_string());
}

void claim_succinct(const VerifyParams& p, Check& c) {
  const Box box = box_for(p, default_side(p.d));
  const Dimension d = box.dimension();
  const ForbiddenIndex index(box);
  std::size_t allowed = 0;
  for_each_cell(box, [&](const HeapVector& s, std::size_t cell) {
    const Verdict v = classify_subtraction(d, s).status;
    if (v == Verdict::kAllowed) ++allowed;
    c.expect_lazy((v == Verdict::kAllowed) == !index.forbidden(cell),
                  [&] { return s.to_string() + ": " + std::string(verdict_name(v)) + " disagrees with R - R"; });
    c.expect_lazy((v == Verdict::kForbiddenA) == index.is_rat(s),
                  [&] { return s.to_string() + ": ForbiddenA does not match rat membership"; });
    c.expect_lazy((v == Verdict::kForbiddenB || v == Verdict::kForbiddenZero) == index.is_shortcut(s),
                  [&] { return s.to_string() + ": ForbiddenB does not match shortcut membership"; });
  });
  c.note("box " + box.to_string() + ", " + std::to_string(allowed) + " allowed subtractions");
}

void claim_printed_rule(const VerifyParams& p, Check& c) {
  (void)p;
  const Dimension d(3);
  const HeapVector r2{3, 6, 11};
  c.expect(rat_index_of(r2) == RatIndex{2}, "(3,6,11) is expected to be r(2)");
  const Verdict printed = classify_subtraction_as_printed(d, r2).status;
  const Verdict corrected = classify_subtraction(d, r2).status;
  c.expect(printed != Verdict::kForbiddenA,
           "the printed halving inequality accepts (3,6,11) as a rat vector, expected it to miss");
  c.expect(corrected == Verdict::kForbiddenA, "corrected rule does not forbid (3,6,11)");
  // Count the damage over the d = 3 box.
  const Box box = Box::cube(d, 60, p.cell_cap);
  const ForbiddenIndex index(box);
  std::size_t wrong = 0;
  for_each_cell(box, [&](const HeapVector& s, std::size_t cell) {
    const bool ok = classify_subtraction_as_printed(d, s).allowed() == !index.forbidden(cell);
    if (!ok) ++wrong;
  });
  c.expect(wrong > 0, "printed rule agrees with the oracle everywhere on [0,60]^3");
  c.note("printed rule: (3,6,11) classified " + std::string(verdict_name(printed)) + "; " + std::to_string(wrong) +
         " disagreements on [0,60]^3");
}

void claim_no_p_to_p(const VerifyParams& p, Check& c) {
  const Box box = box_for(p, default_side(p.d));
  const Dimension d = box.dimension();
  const auto rats = enumerate_R(d, box.upper(), box.cells());
  for (const auto& r : rats) {
    for (const auto& q : rats) {
      if (q == r || !q.dominated_by(r)) continue;
      c.expect_lazy(!classify_subtraction(d, r - q).allowed(),
                    [&] { return "move " + r.to_string() + " -> " + q.to_string() + " is allowed"; });
    }
  }
}

void claim_sum_of_rats(const VerifyParams& p, Check& c) {
  const Box box = box_for(p, default_side(p.d));
  const Dimension d = box.dimension();
  const auto rats = enumerate_R(d, box.upper(), box.cells());
  for (const auto& r : rats) {
    for (const auto& q : rats) {
      if (r.is_zero() || q.is_zero()) continue;
      c.expect_lazy(classify_subtraction(d, r + q).allowed(),
                    [&] { return r.to_string() + " + " + q.to_string() + " is not a legal subtraction"; });
    }
  }
}

void claim_winning_move(const VerifyParams& p, Check& c) {
  const Box box = box_for(p, default_side(p.d));
  const SolveTable table = retrograde_solve(box);
  std::size_t n_cells = 0;
  for_each_cell(box, [&](const HeapVector& x, std::size_t cell) {
    const bool oracle_p = table.outcome[cell] == Outcome::kP;
    c.expect_lazy(is_p_position(x) == oracle_p, [&] { return x.to_string() + ": P/N disagrees with the oracle"; });
    const auto move = winning_move(x);
    if (oracle_p) {
      c.expect_lazy(!move.has_value(), [&] { return x.to_string() + ": move offered from a P-position"; });
      return;
    }
    ++n_cells;
    if (!move) {
      c.fail(x.to_string() + ": no winning move found");
      return;
    }
    c.expect_lazy(table.at(move->target) == Outcome::kP && is_legal_move(x, move->target).allowed(),
                  [&] { return x.to_string() + " -> " + move->target.to_string() + " is not a winning move"; });
  });
  c.note("box " + box.to_string() + ", " + std::to_string(n_cells) + " N cells");
}

void claim_corollary(const VerifyParams& p, Check& c) {
  const Box box = box_for(p, default_side(p.d));
  const Dimension d = box.dimension();
  auto rats = enumerate_R(d, box.upper(), box.cells());
  rats.erase(std::remove_if(rats.begin(), rats.end(), [](const HeapVector& r) { return r.is_zero(); }), rats.end());
  for_each_cell(box, [&](const HeapVector& x, std::size_t) {
    if (is_p_position(x)) return;
    for (const auto& r : rats) {
      if (!r.dominated_by(x)) continue;
      c.expect_lazy(!ternary_recurrence(x - r).has_value(),
                    [&] { return x.to_string() + " - " + r.to_string() + " is a proper shortcut"; });
    }
  });
}

void claim_unit_moves(const VerifyParams& p, Check& c) {
  const Box box = box_for(p, default_side(p.d));
  const Dimension d = box.dimension();
  const ForbiddenIndex index(box);
  for (int j = 1; j <= d.value(); ++j) {
    std::vector<Int> e(box.upper().size(), 0);
    e[static_cast<std::size_t>(j - 1)] = 1;
    const HeapVector unit(e);
    c.expect(classify_subtraction(d, unit).allowed(), "unit subtraction " + unit.to_string() + " is forbidden");
    c.expect(!index.forbidden(unit), "oracle forbids the unit subtraction " + unit.to_string());
  }
  for_each_cell(box, [&](const HeapVector& x, std::size_t) {
    c.expect_lazy(has_any_move(x) == !x.is_zero(), [&] { return x.to_string() + ": has_any_move is wrong"; });
  });
}

// ---- matrices --------------------------------------------------------------

void claim_binrat(const VerifyParams& p, Check& c) {
  const Dimension d(range_check(p, 2, 20, "binrat"));
  const RatMatrix matrix = build_rat_matrix(d);
  const Int limit = p.bound > 0 ? p.bound : 10 * d.period();
  for (RatIndex n = 1; n <= limit; ++n) {
    c.expect_lazy(matrix_rat_vector(matrix, n) == rat_vector(d, n),
                  [&] { return "matrix row for n=" + std::to_string(n) + " differs from the standard form"; });
  }
  for (std::size_t i = 0; i < matrix.rows.rows(); ++i) {
    const Int last = matrix.rows.offsets(i).back();
    c.expect(last == static_cast<Int>(i) * d.modulus() + d.period(),
             "last column of row " + std::to_string(i) + " is " + std::to_string(last));
  }
}

void claim_printed_matrices(const VerifyParams&, Check& c) {
  for (int dv = 2; dv <= 4; ++dv) {
    const Dimension d(dv);
    const RatMatrix r = build_rat_matrix(d);
    const ShortcutMatrix f = build_shortcut_matrix(d);
    for (char kind : {'R', 'F'}) {
      const AffineMatrix& built = kind == 'R' ? r.rows : f.rows;
      const auto& printed = published::matrix_offsets(kind, dv);
      c.expect(printed.size() == built.rows(), std::string(1, kind) + std::to_string(dv) + ": " +
                                                   std::to_string(built.rows()) + " rows, printed " +
                                                   std::to_string(printed.size()));
      for (std::size_t row = 0; row < std::min(printed.size(), built.rows()); ++row) {
        auto o = built.offsets(row);
        c.expect_lazy(std::vector<Int>(o.begin(), o.end()) == printed[row], [&] {
          return std::string(1, kind) + std::to_string(dv) + " row " + std::to_string(row) + " differs";
        });
      }
    }
  }
}

void claim_shortcut_count(const VerifyParams& p, Check& c) {
  const Dimension d(range_check(p, 2, 12, "shortcut-count"));
  const ShortcutMatrix f = build_shortcut_matrix(d);
  c.expect(static_cast<Int>(f.rows.rows()) == pow3(d.value() - 1),
           std::to_string(f.rows.rows()) + " rows, expected 3^(d-1)");
  for (std::size_t row = 1; row < f.rows.rows(); ++row) {
    auto a = f.rows.offsets(row - 1);
    auto b = f.rows.offsets(row);
    const bool increasing = std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    c.expect_lazy(increasing, [&] { return "rows " + std::to_string(row - 1) + " and " + std::to_string(row) +
                                           " are not strictly increasing (right to left)"; });
  }
}

void claim_tree_matrix(const VerifyParams& p, Check& c) {
  const Dimension d(range_check(p, 2, 10, "tree-matrix"));
  const ShortcutMatrix f = build_shortcut_matrix(d);
  std::vector<std::vector<Int>> from_trees;
  for (Int root = 1; root <= d.period(); ++root) {
    for (const HeapVector& path : shortcut_tree(d, root).paths()) {
      std::vector<Int> reduced(path.size());
      for (int j = 1; j <= d.value(); ++j) reduced[j - 1] = path.at(j) % d.column_slope(j);
      from_trees.push_back(std::move(reduced));
    }
  }
  std::vector<std::vector<Int>> from_matrix;
  for (std::size_t row = 0; row < f.rows.rows(); ++row) {
    auto o = f.rows.offsets(row);
    from_matrix.emplace_back(o.begin(), o.end());
  }
  std::sort(from_trees.begin(), from_trees.end());
  std::sort(from_matrix.begin(), from_matrix.end());
  c.expect(from_trees == from_matrix, "tree paths and matrix rows differ as multisets (" +
                                          std::to_string(from_trees.size()) + " vs " +
                                          std::to_string(from_matrix.size()) + ")");
}

void claim_word_bijection(const VerifyParams& p, Check& c) {
  const Dimension d(range_check(p, 2, 12, "word-bijection"));
  const ShortcutMatrix f = build_shortcut_matrix(d);
  std::set<TernaryWord> words;
  for (std::size_t row = 0; row < f.rows.rows(); ++row) {
    const AffineRow r = f.rows.row(row);
    const TernaryWord w = row_word(r);
    words.insert(w);
    c.expect_lazy(word_row(d, w) == r, [&] { return "word " + w.to_string() + " does not map back to its row"; });
  }
  c.expect(static_cast<Int>(words.size()) == pow3(d.value() - 1), "words are not distinct");
}

void claim_shortcut_completeness(const VerifyParams& p, Check& c) {
  const Dimension d(range_check(p, 2, 7, "shortcut-completeness"));
  constexpr Int kPeriods = 4;
  std::vector<Int> upper;
  for (int j = 1; j <= d.value(); ++j) upper.push_back(kPeriods * d.column_slope(j) - 1);
  const HeapVector bound(upper);
  const auto oracle_set = shortcut_set(d, bound, 50'000'000);
  const ShortcutMatrix f = build_shortcut_matrix(d);
  std::vector<HeapVector> from_matrix;
  for (std::size_t row = 0; row < f.rows.rows(); ++row) {
    for (Int t = 0; t < kPeriods; ++t) from_matrix.push_back(f.rows.evaluate(row, t));
  }
  std::sort(from_matrix.begin(), from_matrix.end());
  std::vector<HeapVector> extra, missing;
  std::set_difference(from_matrix.begin(), from_matrix.end(), oracle_set.begin(), oracle_set.end(),
                      std::back_inserter(extra));
  std::set_difference(oracle_set.begin(), oracle_set.end(), from_matrix.begin(), from_matrix.end(),
                      std::back_inserter(missing));
  for (const auto& x : extra) c.fail("matrix shortcut not a difference of rat vectors: " + x.to_string());
  for (const auto& x : missing) c.fail("difference of rat vectors missing from the matrix: " + x.to_string());
  c.note(std::to_string(oracle_set.size()) + " shortcuts in [0," + bound.to_string() + "]");
}

void claim_density(const VerifyParams& p, Check& c) {
  const Dimension d(range_check(p, 2, 6, "density"));
  const Int max_n = p.bound > 0 ? p.bound : 4;
  for (Int n = 1; n <= max_n; ++n) {
    const Int side = d.period() * d.modulus() * n;
    const HeapVector bound(std::vector<Int>(static_cast<std::size_t>(d.value()), side));
    const auto rats = enumerate_R(d, bound, 50'000'000);
    const auto shortcuts = shortcut_set(d, bound, 50'000'000);
    const Int rat_count = static_cast<Int>(rats.size()) - 1;
    const Int shortcut_count = static_cast<Int>(shortcuts.size()) - 1;
    c.expect(rat_count == d.period() * n, "n=" + std::to_string(n) + ": " + std::to_string(rat_count) +
                                              " rat vectors, expected " + std::to_string(d.period() * n));
    c.expect(shortcut_count == pow3(d.value() - 1) * n,
             "n=" + std::to_string(n) + ": " + std::to_string(shortcut_count) + " proper shortcuts, expected " +
                 std::to_string(pow3(d.value() - 1) * n));
  }
}

void claim_difference_matrices(const VerifyParams&, Check& c) {
  for (int dv : {3, 4}) {
    const auto built = difference_matrix(Dimension(dv));
    const auto& printed = published::difference_matrix_rows(dv);
    c.expect(built.size() == printed.size(), "d=" + std::to_string(dv) + ": " + std::to_string(built.size()) +
                                                 " rows, printed " + std::to_string(printed.size()));
    for (std::size_t row = 0; row < std::min(built.size(), printed.size()); ++row) {
      std::vector<int> digits(built[row].digits().begin(), built[row].digits().end());
      c.expect_lazy(digits == printed[row], [&] {
        return "d=" + std::to_string(dv) + " row " + std::to_string(row) + ": " + built[row].to_string();
      });
    }
  }
}

// ---- grundy ----------------------------------------------------------------

void claim_grundy(const VerifyParams& p, Check& c) {
  const Box box = box_for(p, default_grundy_side(p.d));
  const SolveTable mex = mex_grundy(box);
  const SolveTable pn = retrograde_solve(box);
  for_each_cell(box, [&](const HeapVector& x, std::size_t cell) {
    const Int g = (*mex.grundy)[cell];
    c.expect_lazy(g == grundy_fast(x).value, [&] {
      return x.to_string() + ": mex " + std::to_string(g) + ", formula " + std::to_string(grundy_fast(x).value);
    });
    c.expect_lazy((g == 0) == (pn.outcome[cell] == Outcome::kP),
                  [&] { return x.to_string() + ": Grundy zero does not match the P/N sweep"; });
  });
  c.note("box " + box.to_string());
}

void claim_table1(const VerifyParams& p, Check& c) {
  const auto& printed = published::grundy_table_2heaps();
  const Int rows = static_cast<Int>(printed.size());
  const Int cols = static_cast<Int>(printed.front().size());
  const SolveTable mex = mex_grundy(Box(HeapVector{cols - 1, rows - 1}, p.cell_cap));
  for (Int x2 = 0; x2 < rows; ++x2) {
    for (Int x1 = 0; x1 < cols; ++x1) {
      const Int g = mex.grundy_at(HeapVector{x1, x2});
      c.expect_lazy(g == printed[x2][x1], [&] {
        return "G(" + std::to_string(x1) + "," + std::to_string(x2) + ") = " + std::to_string(g) + ", table has " +
               std::to_string(printed[x2][x1]);
      });
    }
  }
  c.note("rows indexed by the second heap, columns by the first");
}

void claim_gamma(const VerifyParams& p, Check& c) {
  const Dimension d(range_check(p, 2, 20, "gamma"));
  const Int limit = p.bound > 0 ? p.bound : 10'000;
  std::vector<Int> counts(static_cast<std::size_t>(limit) + 1, 0);
  Int previous = 0;
  for (RatIndex n = 1;; ++n) {
    const Int total = rat_vector(d, n).total();
    c.expect(total > previous, "rat totals not strictly increasing at n=" + std::to_string(n));
    previous = total;
    if (total > limit) break;
    ++counts[static_cast<std::size_t>(total)];
  }
  for (Int n = 0; n <= limit; ++n) {
    const Int direct = counts[static_cast<std::size_t>(n)];
    c.expect_lazy(direct <= 1, [&] { return "gamma(" + std::to_string(n) + ") = " + std::to_string(direct); });
    c.expect_lazy(gamma_statistic(d, n) == direct,
                  [&] { return "gamma_statistic(" + std::to_string(n) + ") disagrees with direct count"; });
  }
}

void claim_sum_examples(const VerifyParams&, Check& c) {
  struct Example {
    std::vector<Int> nim;
    HeapVector rat;
    Int stated_value;  // value of the component singled out in the example
    bool value_of_nim;
    std::size_t component;
    std::string result;
  };
  const std::vector<Example> examples = {
      {{1, 4, 5}, HeapVector{1, 4, 5}, 0, true, 3, "rat 1,2,4"},
      {{1, 2, 5, 8}, HeapVector{3, 4, 5, 6}, 14, true, 4, "rat 3,0,5,6"},
      {{1, 2, 5, 8}, HeapVector{11, 21, 42, 83}, 0, false, 3, "nim 6"},
  };
  for (const auto& e : examples) {
    std::vector<SumComponent> parts;
    Int nim_value = 0;
    for (Int h : e.nim) {
      parts.push_back(SumComponent::nim(h));
      nim_value ^= h;
    }
    parts.push_back(SumComponent::rat(e.rat));
    const Int value = e.value_of_nim ? nim_value : grundy_fast(e.rat).value;
    c.expect(value == e.stated_value, "component value " + std::to_string(value) + ", stated " +
                                          std::to_string(e.stated_value));
    const auto move = sum_advisor(parts);
    if (!move) {
      c.fail("no move advised for rat " + e.rat.to_string());
      continue;
    }
    c.expect(move->component == e.component && move->result.to_string() == e.result,
             "advised " + move->result.to_string() + " in component " + std::to_string(move->component) +
                 ", expected " + e.result);
    std::vector<SumComponent> after = parts;
    after[move->component] = move->result;
    c.expect(sum_grundy(after) == 0, "sum after the advised move is not zero");
  }
  c.expect(grundy_fast(HeapVector{3, 0, 5, 6}).value == 14, "G(3,0,5,6) is not 14");
}

void claim_worked_examples(const VerifyParams&, Check& c) {
  const HeapVector x{1, 3, 7};
  c.expect(!is_p_position(x), "(1,3,7) should be an N-position");
  std::vector<HeapVector> reachable_p;
  for (Int a = 0; a <= 1; ++a) {
    for (Int b = 0; b <= 3; ++b) {
      for (Int e = 0; e <= 7; ++e) {
        const HeapVector y{a, b, e};
        if (y != x && is_legal_move(x, y).allowed() && is_p_position(y)) reachable_p.push_back(y);
      }
    }
  }
  c.expect(reachable_p == std::vector<HeapVector>{HeapVector{1, 2, 4}},
           "P-positions reachable from (1,3,7) are not exactly {(1,2,4)}");
  c.expect(classify_subtraction(Dimension(3), x).status == Verdict::kForbiddenB, "(1,3,7) is not ForbiddenB");

  const auto move = winning_move(HeapVector{7, 13, 27, 53});
  c.expect(move && move->subtraction == HeapVector{2, 3, 8, 15} && move->target == HeapVector{5, 10, 19, 38},
           "(7,13,27,53) does not move by subtracting (2,3,8,15)");
  c.expect(rat_index_of(HeapVector{11, 21, 42, 83}) == RatIndex{6}, "(11,21,42,83) is not r(6)");
  c.expect(rat_index_of(HeapVector{16, 32, 64, 128}) == RatIndex{9}, "(16,32,64,128) is not r(9)");
  const RatMatrix r4 = build_rat_matrix(Dimension(4));
  c.expect(matrix_rat_vector(r4, 6) == HeapVector{11, 21, 42, 83}, "matrix row for n=6");
  c.expect(matrix_rat_vector(r4, 9) == HeapVector{16, 32, 64, 128}, "matrix row for n=9");
  const auto rats = enumerate_R(Dimension(4), HeapVector{16, 32, 64, 128});
  c.expect(std::find(rats.begin(), rats.end(), HeapVector{11, 21, 42, 83}) != rats.end(),
           "(11,21,42,83) missing from the oracle enumeration");
}

// ---- fractal ---------------------------------------------------------------

void claim_profiles(const VerifyParams&, Check& c) {
  for (const auto& printed : published::difference_profiles()) {
    const auto prof = fractal::diff_profile(printed.d);
    const std::string tag = "d=" + std::to_string(printed.d);
    c.expect(prof.distinct == printed.values, tag + ": set {" + join(prof.distinct) + "}");
    if (!printed.multiplicity.empty()) {
      c.expect(prof.multiplicity == printed.multiplicity, tag + ": counts [" + join(prof.multiplicity) + "]");
    }
    Int total = 0;
    for (Int m : prof.multiplicity) total += m;
    c.expect(total == pow3(printed.d - 1), tag + ": counts do not sum to 3^(d-1)");
    c.expect(prof.min == -2 * pow3(printed.d - 2), tag + ": minimum " + std::to_string(prof.min));
  }
}

void claim_xi(const VerifyParams&, Check& c) {
  const auto& printed = published::xi_sequence();
  for (std::size_t k = 0; k < printed.size(); ++k) {
    const int d = static_cast<int>(k) + 2;
    c.expect(fractal::xi(d) == printed[k], "xi(" + std::to_string(d) + ") = " + std::to_string(fractal::xi(d)));
    const auto size = static_cast<Int>(fractal::diff_profile(d).distinct.size());
    c.expect(size == printed[k], "d=" + std::to_string(d) + ": profile has " + std::to_string(size) + " values");
  }
}

void claim_extremes(const VerifyParams&, Check& c) {
  for (int d = 2; d <= 12; ++d) {
    const auto prof = fractal::diff_profile(d);
    const auto e = fractal::extremes(d);
    c.expect(e.min == prof.min, "d=" + std::to_string(d) + ": min " + std::to_string(prof.min));
    c.expect(e.max == prof.max, "d=" + std::to_string(d) + ": max " + std::to_string(prof.max) + ", formula " +
                                    std::to_string(e.max));
  }
}

void claim_baseline_gaps(const VerifyParams&, Check& c) {
  const auto& printed = published::baseline_gap_lists();
  for (std::size_t k = 0; k < printed.size(); ++k) {
    const int d = static_cast<int>(k) + 2;
    const auto gaps = fractal::baseline_gaps(d);
    c.expect(gaps == printed[k], "d=" + std::to_string(d) + ": [" + join(gaps) + "]");
    if (!std::equal(gaps.begin(), gaps.end(), gaps.rbegin())) c.note("d=" + std::to_string(d) + " not palindromic");
  }
}

void claim_sigma(const VerifyParams&, Check& c) {
  for (int d = 2; d <= 12; ++d) {
    const auto s = fractal::sigma(d);
    c.expect(s == fractal::sigma_oracle(d), "d=" + std::to_string(d) + ": recursion disagrees with the matrix");
  }
  const auto& printed = published::sigma_vectors();
  for (std::size_t k = 0; k < printed.size(); ++k) {
    const int d = static_cast<int>(k) + 2;
    c.expect(fractal::sigma(d) == printed[k], "d=" + std::to_string(d) + ": (" + join(fractal::sigma(d)) + ")");
  }
  c.note("recursion checked against the shortcut matrix for 2 <= d <= 12");
}

void claim_observations(const VerifyParams&, Check& c) {
  for (int d = 4; d <= 12; ++d) {
    const auto distinct = fractal::diff_profile(d).distinct;
    for (int i = 0; i <= d - 3; ++i) {
      const auto at = static_cast<std::size_t>(i) + 1;
      c.expect_lazy(at < distinct.size() && distinct[at] == pow3(i), [&] {
        return "d=" + std::to_string(d) + ": entry " + std::to_string(at + 1) + " is not 3^" + std::to_string(i);
      });
    }
    const auto next = static_cast<std::size_t>(d - 1);
    c.expect(next < distinct.size() && distinct[next] == (pow3(d - 1) - 1) / 2,
             "d=" + std::to_string(d) + ": entry after the powers of 3 is not (3^(d-1)-1)/2");
  }
}

void claim_tau(const VerifyParams&, Check& c) {
  for (int d = 4; d <= 12; ++d) {
    const auto report = fractal::tau_check(d);
    std::size_t absent = 0;
    for (const auto& v : report.generated) absent += v.present ? 0 : 1;
    c.note("d=" + std::to_string(d) + ": " + std::to_string(report.generated.size()) + " generated, " +
           std::to_string(absent) + " absent, " + std::to_string(report.unexplained.size()) + " unexplained");
  }
}

void claim_penultimate_baseline(const VerifyParams&, Check& c) {
  // The baseline of level d reappears at level d+1 doubled: every gap list
  // entry of level d shows up in the level d+1 profile at 3^(d-2).
  for (int d = 2; d <= 11; ++d) {
    const auto lower = fractal::diff_profile(d);
    const auto upper = fractal::diff_profile(d + 1);
    const Int baseline = -2 * pow3(d - 2);
    auto count_of = [](const fractal::DiffProfile& p, Int v) -> Int {
      auto it = std::lower_bound(p.distinct.begin(), p.distinct.end(), v);
      if (it == p.distinct.end() || *it != v) return 0;
      return p.multiplicity[static_cast<std::size_t>(it - p.distinct.begin())];
    };
    const Int base_count = count_of(lower, baseline);
    const Int pb = pow3(d - 2);
    c.expect(count_of(upper, pb) == 2 * base_count,
             "level " + std::to_string(d + 1) + ": value " + std::to_string(pb) + " occurs " +
                 std::to_string(count_of(upper, pb)) + " times, baseline of level " + std::to_string(d) +
                 " occurs " + std::to_string(base_count));
  }
}

const std::vector<Claim>& registry() {
  static const std::vector<int> kBoxDims{2, 3, 4};
  static const std::vector<Claim> kClaims = {
      {{"split", "every positive integer up to the bound appears in exactly one rat column", {2, 3, 4, 5, 6, 7, 8}},
       claim_split},
      {{"columns", "rat columns increase and are arithmetic periodic", {2, 3, 4, 5, 6, 7, 8, 9, 10}}, claim_columns},
      {{"gap-identity", "closed-form gaps and the weighted gap sum equal to 1", {2, 3, 4, 5, 6, 7, 8}},
       claim_gap_identity},
      {{"ratwheel", "rat vectors repeat modulo the column slopes", {2, 3, 4, 5, 6, 7, 8}}, claim_ratwheel},
      {{"rightshift", "right-shift membership agrees with inversion", kBoxDims}, claim_rightshift},
      {{"shift-lemma", "0 <= floor(y)/2 - floor(y/2) <= 1/2 on random rationals", {}}, claim_shift_lemma},
      {{"xy-lemma", "floor(x/y) - floor((x-1)/y) is 1 exactly on multiples", {}}, claim_xy_lemma},
      {{"existence", "P-positions are exactly R + {0}", kBoxDims}, claim_existence},
      {{"playable", "ternary recurrence characterizes R - R minus R", kBoxDims}, claim_playable},
      {{"succinct-equals-grandiose", "arithmetic rules match the complement of R - R", kBoxDims}, claim_succinct},
      {{"printed-rule-fails", "the printed halving inequality misclassifies (3,6,11)", {}}, claim_printed_rule},
      {{"no-p-to-p", "no legal move between rat vectors", kBoxDims}, claim_no_p_to_p},
      {{"sum-of-rats", "the sum of two rat vectors is a legal subtraction", kBoxDims}, claim_sum_of_rats},
      {{"winning-move", "winning_move reaches an oracle P cell from every N cell", kBoxDims}, claim_winning_move},
      {{"corollary", "x - r is never a proper shortcut for x outside R", kBoxDims}, claim_corollary},
      {{"unit-moves", "every nonzero position has a single-token move", kBoxDims}, claim_unit_moves},
      {{"binrat", "binary rat matrix equals the standard form", {2, 3, 4, 5, 6, 7, 8, 9, 10}}, claim_binrat},
      {{"printed-matrices", "rat and shortcut matrices for d = 2, 3, 4 match the published offsets", {}},
       claim_printed_matrices},
      {{"shortcut-count", "3^(d-1) distinct shortcut rows in right-to-left order", {2, 3, 4, 5, 6, 7, 8, 9, 10}},
       claim_shortcut_count},
      {{"tree-matrix", "shortcut tree paths equal the matrix rows", {2, 3, 4, 5, 6, 7, 8}}, claim_tree_matrix},
      {{"word-bijection", "row_word and word_row are inverse", {2, 3, 4, 5, 6, 7, 8}}, claim_word_bijection},
      {{"shortcut-completeness", "matrix rows over four periods equal oracle differences", {2, 3, 4, 5, 6}},
       claim_shortcut_completeness},
      {{"density", "2^(d-1) n rat vectors and 3^(d-1) n proper shortcuts per n periods", {2, 3, 4, 5}},
       claim_density},
      {{"difference-matrices", "difference matrices for d = 3, 4 match the published rows", {}},
       claim_difference_matrices},
      {{"grundy", "mex values equal the fast formula", {2, 3}}, claim_grundy},
      {{"table1", "two-heap Grundy grid matches the published table", {}}, claim_table1},
      {{"gamma", "at most one rat vector per coordinate sum", {2, 3, 4, 5, 6, 7, 8}}, claim_gamma},
      {{"sum-examples", "three disjunctive-sum examples", {}}, claim_sum_examples},
      {{"worked-examples", "worked positions (1,3,7), (7,13,27,53) and r(6), r(9) for d = 4", {}},
       claim_worked_examples},
      {{"profiles", "difference profiles match the published sets and counts", {}}, claim_profiles},
      {{"xi", "sizes of the difference sets", {}}, claim_xi},
      {{"extremes", "minimum and maximum differences", {}}, claim_extremes},
      {{"baseline-gaps", "baseline gap lists match the published data", {}}, claim_baseline_gaps},
      {{"sigma", "last-column count recursion equals the shortcut matrix", {}}, claim_sigma},
      {{"observations", "leading profile entries are powers of 3, then (3^(d-1)-1)/2", {}}, claim_observations},
      {{"tau", "generated description of the difference sets (advisory)", {}}, claim_tau},
      {{"penultimate-baseline", "baseline count doubles at 3^(d-2) one level up", {}},
       claim_penultimate_baseline},
  };
  return kClaims;
}

}  // namespace

const std::vector<ClaimInfo>& claims() {
  static const std::vector<ClaimInfo> kInfo = [] {
    std::vector<ClaimInfo> out;
    for (const auto& c : registry()) out.push_back(c.info);
    return out;
  }();
  return kInfo;
}

VerifyReport verify(std::string_view claim, const VerifyParams& params) {
  const auto& all = registry();
  auto it = std::find_if(all.begin(), all.end(), [&](const Claim& c) { return c.info.name == claim; });
  if (it == all.end()) throw Error(ErrorCode::kUnknownClaim, "unknown claim '" + std::string(claim) + "'");
  VerifyReport report;
  report.claim = it->info.name;
  report.params = params;
  report.pass = true;
  const auto start = std::chrono::steady_clock::now();
  Check check(report);
  it->run(params, check);
  if (check.failures() > report.counterexamples.size()) {
    report.notes.push_back(std::to_string(check.failures()) + " failures in total");
  }
  report.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string report_to_json(const VerifyReport& report) {
  nlohmann::json doc{
      {"claim", report.claim},
      {"params",
       {{"d", report.params.d},
        {"bound", report.params.bound},
        {"seed", report.params.seed},
        {"samples", report.params.samples},
        {"cell_cap", report.params.cell_cap}}},
      {"pass", report.pass},
      {"counterexamples", report.counterexamples},
      {"notes", report.notes},
      {"runtime_ms", report.runtime_ms},
  };
  return doc.dump();
}

}  // namespace ratlab::oracle
