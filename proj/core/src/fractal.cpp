#include "ratlab/fractal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace ratlab::fractal {
namespace {

void require_range(int d, int lo, int hi, const char* what) {
  if (d < lo || d > hi) {
    throw Error(ErrorCode::kInvalidArgument, std::string(what) + " needs " + std::to_string(lo) +
                                                 " <= d <= " + std::to_string(hi) + ", got " + std::to_string(d));
  }
}

}  // namespace

std::vector<Int> sigma(int d) {
  require_range(d, 2, 16, "sigma");
  std::vector<Int> current{2};
  for (int level = 3; level <= d; ++level) {
    std::vector<Int> next(current.size() * 2);
    next[0] = current[0] + 1;
    // 1-based: next_{2j} = cur_j, next_{2j+1} = cur_j + cur_{j+1}.
    for (std::size_t j = 1; j <= current.size(); ++j) {
      next[2 * j - 1] = current[j - 1];
      if (j < current.size()) next[2 * j] = current[j - 1] + current[j];
    }
    current = std::move(next);
  }
  return current;
}

std::vector<Int> sigma_oracle(int d) {
  require_range(d, 2, 12, "sigma_oracle");
  const Dimension dim(d);
  const ShortcutMatrix f = build_shortcut_matrix(dim);
  const Int m = dim.modulus();
  std::vector<Int> counts(static_cast<std::size_t>(pow2(d - 2)), 0);
  for (std::size_t r = 0; r < f.rows.rows(); ++r) {
    const Int last = f.rows.offsets(r).back();
    if (last % m != 0) continue;
    const Int k = last / m;
    if (k >= 1 && static_cast<std::size_t>(k) <= counts.size()) ++counts[static_cast<std::size_t>(k - 1)];
  }
  return counts;
}

std::vector<Int> DiffProfile::linear_sequence() const {
  return std::vector<Int>(sequence.begin(), sequence.end() - 1);
}

DiffProfile diff_profile(int d, RowOrder order) {
  require_range(d, 2, 12, "diff_profile");
  const Dimension dim(d);
  const ShortcutMatrix f = build_shortcut_matrix(dim);
  const std::size_t rows = f.rows.rows();

  std::vector<std::size_t> traversal(rows);
  std::iota(traversal.begin(), traversal.end(), std::size_t{0});
  if (order == RowOrder::kLeftToRight) {
    // Re-sort with the first column most significant.
    std::sort(traversal.begin(), traversal.end(), [&](std::size_t a, std::size_t b) {
      auto x = f.rows.offsets(a);
      auto y = f.rows.offsets(b);
      return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    });
  }
  DiffProfile p;
  p.d = d;
  p.values.reserve(rows);
  // Rows from the last down to index 1, then the all-exact row 0 closes the cycle.
  for (std::size_t k = rows - 1; k >= 1; --k) p.values.push_back(f.word(traversal[k]).base3_value());
  p.values.push_back(f.word(traversal[0]).base3_value());

  p.sequence.resize(rows);
  for (std::size_t k = 0; k < rows; ++k) p.sequence[k] = p.values[(k + 1) % rows] - p.values[k];

  std::map<Int, Int> counts;
  for (Int v : p.sequence) ++counts[v];
  for (const auto& [value, count] : counts) {
    p.distinct.push_back(value);
    p.multiplicity.push_back(count);
  }
  p.min = p.distinct.front();
  p.max = p.distinct.back();
  return p;
}

Int xi(int d) {
  require_range(d, 2, Dimension::kMax, "xi");
  const Int k = d - 1;
  return 2 + k * (k - 1) / 2;
}

Extremes extremes(int d) {
  require_range(d, 2, 12, "extremes");
  Extremes e;
  e.min = -2 * pow3(d - 2);
  if (d >= 4) {
    e.max = 2 * pow3(d - 2) + pow3(d - 4);
    e.max_from_formula = true;
  } else {
    e.max = diff_profile(d).max;
  }
  return e;
}

std::vector<Int> baseline_gaps(int d) {
  require_range(d, 2, 8, "baseline_gaps");
  const DiffProfile p = diff_profile(d);
  const Int baseline = -2 * pow3(d - 2);
  const auto linear = p.linear_sequence();
  std::vector<Int> gaps;
  std::optional<std::size_t> last;
  for (std::size_t k = 0; k < linear.size(); ++k) {
    if (linear[k] != baseline) continue;
    if (last) gaps.push_back(static_cast<Int>(k - *last));
    last = k;
  }
  return gaps;
}

bool TauReport::all_present() const {
  return unexplained.empty() &&
         std::all_of(generated.begin(), generated.end(), [](const TauValue& v) { return v.present; });
}

TauReport tau_check(int d) {
  require_range(d, 4, 12, "tau_check");
  TauReport report;
  report.d = d;
  const Int a = 2 * pow3(d - 2);
  const Int top = (pow3(d - 1) - 1) / 2;
  auto add = [&](Int value, std::string label) { report.generated.push_back({value, std::move(label), false}); };

  add(-a, "tau(0)");
  for (int i = 0; i <= d - 3; ++i) add(pow3(i), "tau(1..d-2)");
  add(top, "tau(d-1)");
  add(top + 6, "tau(d)");
  // Starting values tau_i = tau_{i-1} + 3^(i+1), tau_0 = tau(d); the i-th
  // sequence is tau_i - 1 + 3^0, ..., tau_i - 1 + 3^i.
  Int start = top + 6;
  for (int i = 1; i <= d - 4; ++i) {
    start += pow3(i + 1);
    for (int k = 0; k <= i; ++k) add(start - 1 + pow3(k), "seq " + std::to_string(i));
  }
  for (int i = 0; i <= d - 4; ++i) add(a + pow3(i), "final");

  const DiffProfile p = diff_profile(d);
  const std::set<Int> distinct(p.distinct.begin(), p.distinct.end());
  std::set<Int> produced;
  for (auto& v : report.generated) {
    v.present = distinct.count(v.value) > 0;
    produced.insert(v.value);
  }
  for (Int v : p.distinct) {
    if (!produced.count(v)) report.unexplained.push_back(v);
  }
  return report;
}

std::optional<ScatterFormat> parse_scatter_format(std::string_view name) {
  if (name == "csv") return ScatterFormat::kCsv;
  if (name == "svg") return ScatterFormat::kSvg;
  return std::nullopt;
}

std::string emit_scatter(int d, ScatterFormat format) {
  const DiffProfile p = diff_profile(d);
  std::ostringstream out;
  if (format == ScatterFormat::kCsv) {
    out << "index,diff\n";
    for (std::size_t k = 0; k < p.sequence.size(); ++k) out << k << ',' << p.sequence[k] << '\n';
    return out.str();
  }
  constexpr double kWidth = 800.0;
  constexpr double kHeight = 400.0;
  constexpr double kMargin = 20.0;
  const double span_x = std::max<double>(1.0, static_cast<double>(p.sequence.size() - 1));
  const double span_y = std::max<double>(1.0, static_cast<double>(p.max - p.min));
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << kWidth + 2 * kMargin << ' '
      << kHeight + 2 * kMargin << "\">\n";
  out << "<title>shortcut differences d=" << d << "</title>\n";
  const double zero_y = kMargin + (static_cast<double>(p.max) / span_y) * kHeight;
  out << "<line x1=\"" << kMargin << "\" y1=\"" << zero_y << "\" x2=\"" << kMargin + kWidth << "\" y2=\"" << zero_y
      << "\" stroke=\"#ccc\"/>\n";
  for (std::size_t k = 0; k < p.sequence.size(); ++k) {
    const double x = kMargin + (static_cast<double>(k) / span_x) * kWidth;
    const double y = kMargin + (static_cast<double>(p.max - p.sequence[k]) / span_y) * kHeight;
    out << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"1.5\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace ratlab::fractal
