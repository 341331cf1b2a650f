#include "cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>

#include <nlohmann/json.hpp>

#include "ratlab/fractal.hpp"
#include "ratlab/grundy.hpp"
#include "ratlab/http_service.hpp"
#include "ratlab/matrices.hpp"
#include "ratlab/oracle.hpp"
#include "ratlab/published.hpp"
#include "ratlab/rules.hpp"
#include "ratlab/sequences.hpp"
#include "ratlab/session.hpp"

namespace ratlab::cli {
namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int d = 3;
  std::string pos;
  std::string sub;
  std::string to;
  Int bound = 0;
  Int n = 0;
  std::string format = "text";
  bool json = false;
  std::uint64_t seed = 20240229;
  std::size_t samples = 100'000;
  std::string claim;
  bool all = false;
  bool desk = false;
  bool list = false;
  int port = 8080;
  std::string host = "127.0.0.1";
  std::string log;
  bool oracle = false;
  std::string nim;
  std::vector<std::string> rat;
  std::string what;
  std::string order = "rtl";
};

json vec(const HeapVector& v) { return std::vector<Int>(v.entries().begin(), v.entries().end()); }

std::string join(const std::vector<Int>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += sep;
    out += std::to_string(v[k]);
  }
  return out;
}

HeapVector vector_arg(const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  try {
    return parse_heap_vector(text);
  } catch (const Error& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

HeapVector vector_for(const Options& o, const std::string& text, const char* flag) {
  HeapVector v = vector_arg(text, flag);
  if (static_cast<int>(v.size()) != o.d) {
    throw UsageError(std::string(flag) + " has " + std::to_string(v.size()) + " entries but --d is " +
                     std::to_string(o.d));
  }
  return v;
}

bool as_json(const Options& o) { return o.json || o.format == "json"; }

json trace_json(const ConditionTrace& t) {
  json failed = nullptr;
  if (t.failed_column) failed = *t.failed_column;
  return json{{"holds", t.holds()}, {"failed_column", failed}};
}

// ---- subcommands ------------------------------------------------------------

int cmd_gen(const Options& o, std::ostream& out) {
  const Dimension d(o.d);
  if (o.bound > 0) {
    const SplitReport r = split_check(d, o.bound);
    if (as_json(o)) {
      out << json{{"d", o.d}, {"bound", r.bound}, {"covered", r.covered}, {"duplicates", r.duplicates},
                  {"missing", r.missing}}
                 .dump()
          << '\n';
    } else {
      out << (r.covered ? "split" : "not split") << ": 1.." << r.bound << '\n';
      if (!r.duplicates.empty()) out << "duplicates: " << join(r.duplicates) << '\n';
      if (!r.missing.empty()) out << "missing: " << join(r.missing) << '\n';
    }
    return r.covered ? kOk : kDomainError;
  }
  const Int count = o.n > 0 ? o.n : 10;
  json rows = json::array();
  for (RatIndex n = 1; n <= count; ++n) {
    const HeapVector r = rat_vector(d, n);
    if (as_json(o)) {
      rows.push_back({{"n", n}, {"vector", vec(r)}});
    } else if (o.format == "csv") {
      out << n << ',' << r.to_string() << '\n';
    } else {
      out << n << ": " << r.to_string() << '\n';
    }
  }
  if (as_json(o)) out << json{{"d", o.d}, {"rows", rows}}.dump() << '\n';
  return kOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  const Dimension d(o.d);
  HeapVector s;
  if (!o.pos.empty() || !o.to.empty()) {
    s = vector_for(o, o.pos, "--pos") - vector_for(o, o.to, "--to");
  } else {
    s = vector_for(o, o.sub, "--sub");
  }
  const MoveVerdict v = classify_subtraction(d, s);
  if (as_json(o)) {
    out << json{{"d", o.d},
                {"subtraction", vec(s)},
                {"verdict", verdict_name(v.status)},
                {"explanation", v.explanation()},
                {"condition_a", trace_json(v.condition_a)},
                {"condition_b", trace_json(v.condition_b)}}
               .dump()
        << '\n';
  } else {
    out << verdict_name(v.status) << '\n' << v.explanation() << '\n';
  }
  return kOk;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const HeapVector x = vector_for(o, o.pos, "--pos");
  const auto move = winning_move(x);
  if (as_json(o)) {
    json doc{{"position", vec(x)}, {"status", move ? "N" : "P"}};
    if (move) {
      doc["target"] = vec(move->target);
      doc["subtraction"] = vec(move->subtraction);
      doc["rat_index"] = move->rat_index ? json(*move->rat_index) : json(nullptr);
    }
    out << doc.dump() << '\n';
  } else if (!move) {
    out << (x.is_zero() ? "P; no moves" : "P; every move loses") << '\n';
  } else {
    out << "N; move to " << move->target.to_string() << " (subtract " << move->subtraction.to_string() << ")\n";
  }
  return kOk;
}

int cmd_grundy(const Options& o, std::ostream& out) {
  const Dimension d(o.d);
  if (o.pos.empty()) {
    if (o.n < 0) throw UsageError("--n must be non-negative");
    const Int g = gamma_statistic(d, o.n);
    if (as_json(o)) {
      out << json{{"d", o.d}, {"n", o.n}, {"gamma", g}}.dump() << '\n';
    } else {
      out << "gamma(" << o.n << ") = " << g << '\n';
    }
    return kOk;
  }
  const HeapVector x = vector_for(o, o.pos, "--pos");
  const GrundyReport r = o.oracle ? grundy_mex(x) : grundy_fast(x);
  if (as_json(o)) {
    out << json{{"position", vec(x)},
                {"value", r.value},
                {"method", grundy_method_name(r.method)},
                {"verified_bound", r.verified_bound ? vec(*r.verified_bound) : json(nullptr)}}
               .dump()
        << '\n';
  } else {
    out << r.value << " (" << grundy_method_name(r.method);
    if (r.verified_bound) out << "; formula checked on [0,(" << r.verified_bound->to_string() << ")]";
    out << ")\n";
  }
  return kOk;
}

int cmd_advise(const Options& o, std::ostream& out) {
  std::vector<SumComponent> parts;
  if (!o.nim.empty()) {
    const HeapVector heaps = vector_arg(o.nim, "--nim");
    for (Int h : heaps.entries()) parts.push_back(SumComponent::nim(h));
  }
  for (const auto& r : o.rat) parts.push_back(SumComponent::rat(vector_arg(r, "--rat")));
  if (parts.empty()) throw UsageError("advise needs --nim and/or --rat");
  const Int total = sum_grundy(parts);
  const auto move = sum_advisor(parts);
  if (as_json(o)) {
    json doc{{"value", total}, {"move", nullptr}};
    if (move) {
      doc["move"] = {{"component", move->component},
                     {"from", parts[move->component].to_string()},
                     {"to", move->result.to_string()},
                     {"subtraction", vec(move->subtraction)}};
    }
    out << doc.dump() << '\n';
  } else if (!move) {
    out << "P; sum value 0, every move loses\n";
  } else {
    out << "N; sum value " << total << "; move component " << move->component << " ("
        << parts[move->component].to_string() << ") to " << move->result.to_string() << '\n';
  }
  return kOk;
}

int cmd_matrix(const Options& o, std::ostream& out) {
  const Dimension d(o.d);
  const std::string what = o.what.empty() ? "R" : o.what;
  if (o.format != "text" && o.format != "csv" && o.format != "json") {
    throw Error(ErrorCode::kUnsupportedFormat, "matrix supports text, csv and json");
  }
  if (what == "R" || what == "F") {
    const AffineMatrix m = what == "R" ? build_rat_matrix(d).rows : build_shortcut_matrix(d).rows;
    out << (as_json(o) ? matrix_to_json(m) + "\n" : matrix_to_csv(m));
    return kOk;
  }
  if (what == "difference") {
    const auto rows = difference_matrix(d);
    if (as_json(o)) {
      json doc = json::array();
      for (const auto& w : rows) doc.push_back(w.digits());
      out << json{{"d", o.d}, {"rows", doc}}.dump() << '\n';
    } else {
      for (const auto& w : rows) {
        for (std::size_t k = 0; k < w.size(); ++k) out << (k ? " " : "") << int{w.digits()[k]};
        out << '\n';
      }
    }
    return kOk;
  }
  if (what == "tree") {
    const Int root = o.n > 0 ? o.n : 1;
    const auto paths = shortcut_tree(d, root).paths();
    if (as_json(o)) {
      json doc = json::array();
      for (const auto& p : paths) doc.push_back(vec(p));
      out << json{{"d", o.d}, {"root", root}, {"paths", doc}}.dump() << '\n';
    } else {
      for (const auto& p : paths) out << p.to_string() << '\n';
    }
    return kOk;
  }
  throw UsageError("--what must be R, F, difference or tree");
}

int cmd_fractal(const Options& o, std::ostream& out) {
  const std::string what = o.what.empty() ? "profile" : o.what;
  const int d = o.d;
  const bool j = as_json(o);
  if (what == "profile") {
    if (o.order != "rtl" && o.order != "ltr") throw UsageError("--order must be rtl or ltr");
    const auto p =
        fractal::diff_profile(d, o.order == "ltr" ? fractal::RowOrder::kLeftToRight : fractal::RowOrder::kRightToLeft);
    if (j) {
      out << json{{"d", d}, {"values", p.distinct}, {"counts", p.multiplicity}, {"min", p.min}, {"max", p.max}}.dump()
          << '\n';
    } else {
      out << "values: " << join(p.distinct, ", ") << '\n'
          << "counts: [" << join(p.multiplicity, ", ") << "]\n"
          << "min: " << p.min << "\nmax: " << p.max << '\n';
    }
  } else if (what == "scatter") {
    const std::string f = o.format == "text" ? "csv" : o.format;
    auto format = fractal::parse_scatter_format(f);
    if (!format) throw Error(ErrorCode::kUnsupportedFormat, "scatter supports csv and svg, not '" + f + "'");
    out << fractal::emit_scatter(d, *format);
  } else if (what == "sigma" || what == "sigma-oracle") {
    const auto s = what == "sigma" ? fractal::sigma(d) : fractal::sigma_oracle(d);
    if (j) {
      out << json{{"d", d}, {"sigma", s}}.dump() << '\n';
    } else {
      out << '(' << join(s) << ")\n";
    }
  } else if (what == "xi") {
    if (j) {
      out << json{{"d", d}, {"xi", fractal::xi(d)}}.dump() << '\n';
    } else {
      out << fractal::xi(d) << '\n';
    }
  } else if (what == "extremes") {
    const auto e = fractal::extremes(d);
    if (j) {
      out << json{{"d", d}, {"min", e.min}, {"max", e.max}, {"max_from_formula", e.max_from_formula}}.dump() << '\n';
    } else {
      out << "min: " << e.min << "\nmax: " << e.max << (e.max_from_formula ? "" : " (from the profile)") << '\n';
    }
  } else if (what == "gaps") {
    const auto g = fractal::baseline_gaps(d);
    if (j) {
      out << json{{"d", d}, {"gaps", g}}.dump() << '\n';
    } else {
      out << '[' << join(g, ", ") << "]\n";
    }
  } else if (what == "tau") {
    const auto r = fractal::tau_check(d);
    json generated = json::array();
    for (const auto& v : r.generated) {
      if (j) {
        generated.push_back({{"value", v.value}, {"label", v.label}, {"present", v.present}});
      } else {
        out << v.value << ' ' << v.label << (v.present ? "" : " absent") << '\n';
      }
    }
    if (j) {
      out << json{{"d", d}, {"generated", generated}, {"unexplained", r.unexplained}}.dump() << '\n';
    } else if (!r.unexplained.empty()) {
      out << "unexplained: " << join(r.unexplained) << '\n';
    }
  } else {
    throw UsageError("--what must be profile, scatter, sigma, sigma-oracle, xi, extremes, gaps or tau");
  }
  return kOk;
}

bool per_dimension(const std::string& claim) {
  for (const auto& c : oracle::claims()) {
    if (c.name == claim) return !c.desk_dimensions.empty();
  }
  return false;
}

void print_report(const oracle::VerifyReport& r, std::ostream& out) {
  out << (r.pass ? "pass " : "FAIL ") << r.claim;
  if (per_dimension(r.claim)) out << " d=" << r.params.d;
  if (r.params.bound > 0) out << " bound=" << r.params.bound;
  out << " (" << static_cast<long long>(r.runtime_ms) << " ms)\n";
  for (const auto& c : r.counterexamples) out << "  counterexample: " << c << '\n';
  for (const auto& n : r.notes) out << "  note: " << n << '\n';
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.list) {
    for (const auto& c : oracle::claims()) out << c.name << ": " << c.description << '\n';
    return kOk;
  }
  oracle::VerifyParams base;
  base.d = o.d;
  base.bound = o.bound;
  base.seed = o.seed;
  base.samples = o.samples;
  std::vector<oracle::VerifyReport> reports;
  if (o.all) {
    for (const auto& c : oracle::claims()) {
      std::vector<int> dims = c.desk_dimensions;
      if (dims.empty()) {
        dims = {o.d};
      } else if (!o.desk) {
        if (std::find(dims.begin(), dims.end(), o.d) == dims.end()) continue;
        dims = {o.d};
      }
      for (int d : dims) {
        oracle::VerifyParams p = base;
        p.d = d;
        if (o.desk) p.bound = 0;
        reports.push_back(oracle::verify(c.name, p));
        if (!as_json(o)) print_report(reports.back(), out);
      }
    }
  } else {
    if (o.claim.empty()) throw UsageError("verify needs --claim, --all or --list");
    reports.push_back(oracle::verify(o.claim, base));
    if (!as_json(o)) print_report(reports.back(), out);
  }
  bool pass = true;
  for (const auto& r : reports) pass = pass && r.pass;
  if (as_json(o)) {
    if (reports.size() == 1 && !o.all) {
      out << oracle::report_to_json(reports.front()) << '\n';
    } else {
      json doc = json::array();
      for (const auto& r : reports) doc.push_back(json::parse(oracle::report_to_json(r)));
      out << doc.dump() << '\n';
    }
  } else if (o.all) {
    out << (pass ? "all claims pass" : "some claims FAIL") << '\n';
  }
  return pass ? kOk : kVerifyFailed;
}

int cmd_serve(const Options& o, std::ostream& out) {
  std::optional<std::filesystem::path> log;
  if (!o.log.empty()) log = o.log;
  service::SessionStore store(log);
  service::HttpService http(store, service::ServerOptions{o.host, o.port, "*"});
  const int port = http.bind();
  out << "listening on http://" << o.host << ':' << port << std::endl;
  http.serve();
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rat game toolkit: rat vectors, move rules, matrices, Grundy values and fractal data", "ratlab"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--d", o.d, "number of heaps")->check(CLI::Range(Dimension::kMin, Dimension::kMax));
    sub->add_flag("--json", o.json, "emit JSON");
    sub->add_option("--format", o.format, "text, json, csv or svg")
        ->check(CLI::IsMember({"text", "json", "csv", "svg"}));
  };

  auto* gen = app.add_subcommand("gen", "rat vectors r(1..n), or the splitting check with --bound");
  common(gen);
  gen->add_option("--n", o.n, "number of rows");
  gen->add_option("--bound", o.bound, "check that 1..bound is split exactly once");

  auto* check = app.add_subcommand("check", "classify a subtraction");
  common(check);
  check->add_option("--sub", o.sub, "subtraction vector, x_1 first");
  check->add_option("--pos", o.pos, "position (with --to)");
  check->add_option("--to", o.to, "target position (with --pos)");

  auto* solve = app.add_subcommand("solve", "P/N status and a winning move");
  common(solve);
  solve->add_option("--pos", o.pos, "position")->required();

  auto* grundy = app.add_subcommand("grundy", "Grundy value of a position, or gamma(n) with --n");
  common(grundy);
  grundy->add_option("--pos", o.pos, "position");
  grundy->add_option("--n", o.n, "coordinate sum for gamma(n)");
  grundy->add_flag("--oracle", o.oracle, "compute by the mex recursion");

  auto* advise = app.add_subcommand("advise", "winning move in a sum of nim heaps and rat games");
  common(advise);
  advise->add_option("--nim", o.nim, "nim heap sizes, comma separated");
  advise->add_option("--rat", o.rat, "rat game position (repeatable)")->expected(1)->multi_option_policy(
      CLI::MultiOptionPolicy::TakeAll);

  auto* matrix = app.add_subcommand("matrix", "rat matrix, shortcut matrix, difference matrix or tree paths");
  common(matrix);
  matrix->add_option("--what", o.what, "R, F, difference or tree");
  matrix->add_option("--n", o.n, "tree root index (tree only)");

  auto* fractal_cmd = app.add_subcommand("fractal", "difference profiles and their statistics");
  common(fractal_cmd);
  fractal_cmd->add_option("--what", o.what, "profile, scatter, sigma, sigma-oracle, xi, extremes, gaps or tau");
  fractal_cmd->add_option("--order", o.order, "row order for profile: rtl (default) or ltr");

  auto* verify = app.add_subcommand("verify", "run oracle checks");
  common(verify);
  verify->add_option("--claim", o.claim, "claim name");
  verify->add_flag("--all", o.all, "run every claim");
  verify->add_flag("--desk", o.desk, "with --all: every claim over its full set of dimensions");
  verify->add_flag("--list", o.list, "list claim names");
  verify->add_option("--bound", o.bound, "box side (0 selects the default)");
  verify->add_option("--seed", o.seed, "seed for randomized claims");
  verify->add_option("--samples", o.samples, "sample count for randomized claims");

  auto* serve = app.add_subcommand("serve", "HTTP game service");
  serve->add_option("--port", o.port, "port (0 picks one)")->check(CLI::Range(0, 65535));
  serve->add_option("--host", o.host, "listen address");
  serve->add_option("--log", o.log, "append-only JSON-lines event log");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  try {
    if (*gen) return cmd_gen(o, out);
    if (*check) return cmd_check(o, out);
    if (*solve) return cmd_solve(o, out);
    if (*grundy) return cmd_grundy(o, out);
    if (*advise) return cmd_advise(o, out);
    if (*matrix) return cmd_matrix(o, out);
    if (*fractal_cmd) return cmd_fractal(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*serve) return cmd_serve(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  } catch (const Error& e) {
    err << "error (" << error_code_name(e.code()) << "): " << e.what() << '\n';
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace ratlab::cli
