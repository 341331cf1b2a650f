// Acceptance runner: one PASS/FAIL line per criterion. With no arguments
// every criterion runs; otherwise only the named ones. Exit status is 1 when
// any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ratlab/matrices.hpp"
#include "ratlab/oracle.hpp"

using namespace ratlab;

namespace {

struct Run {
  std::string claim;
  std::vector<int> dims;  // empty for claims that ignore d
  Int bound = 0;
};

struct Outcome {
  bool pass = true;
  std::vector<std::string> detail;
};

void run_claims(const std::vector<Run>& runs, Outcome& out) {
  for (const Run& r : runs) {
    const std::vector<int> dims = r.dims.empty() ? std::vector<int>{3} : r.dims;
    for (int d : dims) {
      oracle::VerifyParams p;
      p.d = d;
      p.bound = r.bound;
      const oracle::VerifyReport rep = oracle::verify(r.claim, p);
      if (rep.pass) continue;
      out.pass = false;
      std::string tag = r.claim;
      if (!r.dims.empty()) tag += " d=" + std::to_string(d);
      for (const auto& c : rep.counterexamples) out.detail.push_back(tag + ": " + c);
      if (rep.counterexamples.empty()) out.detail.push_back(tag + ": failed");
    }
  }
}

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(RATLAB_GOLDEN_DIR) + "/" + name, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void golden_matrices(Outcome& out) {
  for (int d = 2; d <= 4; ++d) {
    const std::string r = "R" + std::to_string(d) + ".csv";
    const std::string f = "F" + std::to_string(d) + ".csv";
    if (matrix_to_csv(build_rat_matrix(Dimension(d)).rows) != slurp(r)) {
      out.pass = false;
      out.detail.push_back("golden " + r + " differs");
    }
    if (matrix_to_csv(build_shortcut_matrix(Dimension(d)).rows) != slurp(f)) {
      out.pass = false;
      out.detail.push_back("golden " + f + " differs");
    }
  }
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> v;
  for (int d = lo; d <= hi; ++d) v.push_back(d);
  return v;
}

struct Criterion {
  std::string name;
  std::function<void(Outcome&)> check;
};

const std::vector<int> kBoxes{2, 3, 4};

std::vector<Criterion> criteria() {
  return {
      {"splitting", [](Outcome& o) { run_claims({{"split", range(2, 8), 10'000}}, o); }},
      {"existence", [](Outcome& o) { run_claims({{"existence", kBoxes}}, o); }},
      {"playability", [](Outcome& o) { run_claims({{"playable", kBoxes}}, o); }},
      {"succinct",
       [](Outcome& o) { run_claims({{"succinct-equals-grandiose", kBoxes}, {"printed-rule-fails", {}}}, o); }},
      {"binary-matrix",
       [](Outcome& o) {
         run_claims({{"binrat", range(2, 10)}, {"printed-matrices", {}}}, o);
         golden_matrices(o);
       }},
      {"shortcut-count",
       [](Outcome& o) { run_claims({{"shortcut-count", range(2, 10)}, {"tree-matrix", range(2, 8)}}, o); }},
      {"difference-matrices", [](Outcome& o) { run_claims({{"difference-matrices", {}}}, o); }},
      {"fractal-profiles",
       [](Outcome& o) { run_claims({{"profiles", {}}, {"xi", {}}, {"extremes", {}}}, o); }},
      {"baseline-gaps", [](Outcome& o) { run_claims({{"baseline-gaps", {}}}, o); }},
      {"sigma", [](Outcome& o) { run_claims({{"sigma", {}}}, o); }},
      {"grundy",
       [](Outcome& o) {
         run_claims({{"table1", {}}, {"grundy", {2}, 60}, {"grundy", {3}, 16}, {"sum-examples", {}}}, o);
       }},
      {"worked-examples", [](Outcome& o) { run_claims({{"worked-examples", {}}}, o); }},
      {"property-suites",
       [](Outcome& o) {
         run_claims({{"shift-lemma", {}},
                     {"xy-lemma", {}},
                     {"gap-identity", range(2, 8), 500},
                     {"ratwheel", range(2, 8)},
                     {"no-p-to-p", kBoxes},
                     {"sum-of-rats", kBoxes}},
                    o);
       }},
  };
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::string> wanted(argv + 1, argv + argc);
  const auto all = criteria();
  for (const auto& w : wanted) {
    bool known = false;
    for (const auto& c : all) known = known || c.name == w;
    if (!known) {
      std::cerr << "unknown criterion '" << w << "'; known:";
      for (const auto& c : all) std::cerr << ' ' << c.name;
      std::cerr << '\n';
      return 2;
    }
  }
  int failures = 0;
  for (const auto& c : all) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.name) == wanted.end()) continue;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.check(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail.push_back(std::string("error: ") + e.what());
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.name << " (" << ms << " ms)\n";
    for (const auto& line : o.detail) std::cout << "  " << line << '\n';
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
