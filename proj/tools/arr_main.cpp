// arr: exact-arithmetic toolkit for central hyperplane arrangements.
//
// Subcommands: check, ideal, scan, reproduce, plot. Exit codes: 0 ok,
// 1 input error, 2 precondition violation (or skipped checks under
// --strict), 3 assertion failure in a reproduction target.

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "arr/param.hpp"
#include "arr/report.hpp"
#include "arr/reproduce.hpp"
#include "arr/scan.hpp"
#include "arr/svg.hpp"

using namespace arr;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitAssertion = 3;

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> parts;
  size_t p = 0;
  while (p <= s.size()) {
    size_t q = s.find(',', p);
    if (q == std::string::npos) q = s.size();
    parts.push_back(s.substr(p, q - p));
    p = q + 1;
  }
  return parts;
}

struct IdealSpec {
  RootSystem rs = RootSystem::make(RootType::D, 4);
  RootIdeal ideal;
};

IdealSpec parse_ideal_spec(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] != '{') {
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("cannot open ideal spec " + arg);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  json j = json::parse(text);
  std::string type = j.value("type", "D");
  if (type.size() != 1 || std::string("ABCD").find(type[0]) == std::string::npos)
    throw std::invalid_argument("ideal spec type must be one of A, B, C, D");
  int n = j.at("n").get<int>();
  IdealSpec spec{RootSystem::make(RootType(type[0]), n), {}};
  std::vector<int> gens;
  for (const auto& g : j.value("generators", json::array())) {
    if (g.is_string()) {
      gens.push_back(spec.rs.parse_root(g.get<std::string>()));
    } else {
      std::vector<int> coeffs = g.get<std::vector<int>>();
      int idx = spec.rs.find_e(spec.rs.simple_combo_to_e(coeffs));
      if (idx < 0) throw std::invalid_argument("generator is not a positive root");
      gens.push_back(idx);
    }
  }
  spec.ideal = ideal_from_generators(spec.rs, gens);
  return spec;
}

int run_check(const std::string& file, bool all, const std::string& checks_csv,
              bool strict, const std::string& out_path) {
  Arrangement a;
  try {
    a = load_arrangement(file);
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  }
  std::set<std::string> checks;
  if (all || checks_csv.empty()) {
    checks = kAllChecks;
  } else {
    for (const auto& c : split_csv(checks_csv)) checks.insert(c);
  }
  json report = criteria_report(a, checks);
  write_output(report.dump(2) + "\n", out_path);
  if (strict && !report["skipped"].empty()) return kExitPrecondition;
  return kExitOk;
}

int run_ideal(const std::string& action, const std::string& spec_arg,
              const std::string& out_path) {
  IdealSpec spec = parse_ideal_spec(spec_arg);
  Arrangement a = ideal_arrangement(spec.rs, spec.ideal);
  if (action == "build") {
    write_output(arrangement_to_json_text(a), out_path);
    return kExitOk;
  }
  if (action == "restrict-Y") {
    if (spec.rs.type() != RootType::D)
      throw std::invalid_argument("restrict-Y needs a type D ideal");
    Flat y = lemma_flat_y(a, spec.rs.n());
    auto res = restrict_to(a, y);
    write_output(arrangement_to_json_text(res.arrangement), out_path);
    return kExitOk;
  }
  if (action == "report") {
    json out;
    out["arrangement"] = criteria_report(a, kAllChecks);
    if (spec.rs.type() == RootType::D) {
      Flat y = lemma_flat_y(a, spec.rs.n());
      auto res = restrict_to(a, y);
      out["restriction_to_Y"] = criteria_report(res.arrangement, kAllChecks);
    }
    write_output(out.dump(2) + "\n", out_path);
    return kExitOk;
  }
  throw std::invalid_argument("unknown ideal action: " + action);
}

int run_scan(const std::string& type, int n, const std::string& criterion, int jobs,
             const std::string& out_path, bool resume) {
  if (criterion != "simple-triangle-restriction")
    throw std::invalid_argument("unknown scan criterion: " + criterion);
  if (type.size() != 1 || std::string("ABCD").find(type[0]) == std::string::npos)
    throw std::invalid_argument("scan type must be one of A, B, C, D");
  auto rs = RootSystem::make(RootType(type[0]), n);
  Bounds bounds = bounds_from_env();

  std::optional<std::vector<int>> only;
  if (resume && !out_path.empty() && out_path != "-") {
    std::ifstream in(out_path);
    std::set<int> done;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      done.insert(json::parse(line).at("index").get<int>());
    }
    auto ideals = enumerate_ideals(rs, bounds.ideal_enumeration);
    std::vector<int> missing;
    for (int i = 0; i < int(ideals.size()); ++i)
      if (!done.count(i)) missing.push_back(i);
    only = std::move(missing);
  }

  auto records = scan_simple_triangle_restrictions(rs, jobs, bounds.ideal_enumeration, only);
  std::ostringstream lines;
  for (const auto& r : records) lines << scan_record_json(r).dump() << "\n";
  if (resume && !out_path.empty() && out_path != "-") {
    std::ofstream out(out_path, std::ios::app);
    if (!out) throw std::invalid_argument("cannot write " + out_path);
    out << lines.str();
  } else {
    write_output(lines.str(), out_path);
  }
  return kExitOk;
}

int run_reproduce(const std::string& target, int n, int r, int s, int t, int jobs) {
  ReproduceResult result;
  if (target == "lemma2.1") {
    result = reproduce_lemma21();
  } else if (target == "lemma3.1") {
    result = reproduce_lemma31(n > 0 ? n : 4);
  } else if (target == "ex3.2") {
    result = reproduce_ex32();
  } else if (target == "ex3.3") {
    std::optional<std::pair<int, int>> st;
    if (s > 0 && t > 0) st = {{s, t}};
    result = reproduce_ex33(n > 0 ? n : 6, r > 0 ? r : 2, st);
  } else if (target == "ex3.4") {
    result = reproduce_ex34(jobs);
  } else if (target == "ex3.5") {
    result = reproduce_ex35();
  } else {
    throw std::invalid_argument("unknown target: " + target);
  }
  for (const auto& line : result.lines) {
    std::cout << (line.ok ? "ok   " : "FAIL ") << result.target << ": " << line.name;
    if (!line.ok && !line.detail.empty()) std::cout << " [" << line.detail << "]";
    std::cout << "\n";
  }
  if (!result.ok()) {
    for (const auto& line : result.lines)
      if (!line.ok) {
        std::cerr << "first failing assertion: " << line.name << "\n";
        break;
      }
    return kExitAssertion;
  }
  return kExitOk;
}

int run_plot(const std::string& file, const std::string& chart_csv, bool highlight,
             const std::string& out_path) {
  Arrangement a;
  try {
    a = load_arrangement(file);
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  }
  RatVec chart;
  for (const auto& part : split_csv(chart_csv)) chart.push_back(rat_parse(part));
  auto ess = essentialize(a);
  std::optional<TriangleWitness> witness;
  if (highlight) witness = find_simple_triangle(ess.arrangement);
  write_output(projective_svg(ess.arrangement, chart, witness), out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for central hyperplane arrangements"};
  app.require_subcommand(1);

  // check
  std::string check_file, check_list, check_out;
  bool check_all = false, check_strict = false;
  auto* check = app.add_subcommand("check", "run criteria checks on an arrangement file");
  check->add_option("file", check_file, "arrangement JSON file")->required();
  check->add_flag("--all", check_all, "run every check");
  check->add_option("--checks", check_list, "comma-separated subset of checks");
  check->add_flag("--strict", check_strict, "exit 2 when a requested check is skipped");
  check->add_option("-o,--output", check_out, "output path (default stdout)");

  // ideal
  std::string ideal_action, ideal_spec, ideal_out;
  auto* ideal = app.add_subcommand("ideal", "build and analyze arrangements of ideal type");
  ideal->add_option("action", ideal_action, "build | restrict-Y | report")->required();
  ideal->add_option("spec", ideal_spec, "ideal spec: JSON file or inline JSON")->required();
  ideal->add_option("-o,--output", ideal_out, "output path (default stdout)");

  // scan
  std::string scan_type = "D", scan_criterion = "simple-triangle-restriction", scan_out;
  int scan_n = 5, scan_jobs = 1;
  bool scan_resume = false;
  auto* scan = app.add_subcommand("scan", "scan every ideal of a root system");
  scan->add_option("--type", scan_type, "root system type (A, B, C, D)");
  scan->add_option("--n", scan_n, "rank")->required();
  scan->add_option("--criterion", scan_criterion, "scan criterion");
  scan->add_option("--jobs", scan_jobs, "worker threads");
  scan->add_option("-o,--output", scan_out, "JSON-lines output path");
  scan->add_flag("--resume", scan_resume, "skip ideal indices already present in the output");

  // reproduce
  std::string rep_target;
  int rep_n = 0, rep_r = 0, rep_s = 0, rep_t = 0, rep_jobs = 1;
  auto* rep = app.add_subcommand("reproduce", "re-run a scripted verification");
  rep->add_option("target", rep_target,
                  "lemma2.1 | lemma3.1 | ex3.2 | ex3.3 | ex3.4 | ex3.5")
      ->required();
  rep->add_option("--n", rep_n, "rank parameter");
  rep->add_option("--r", rep_r, "generator position for ex3.3");
  rep->add_option("--s", rep_s, "second generator start for ex3.3");
  rep->add_option("--t", rep_t, "second generator end for ex3.3");
  rep->add_option("--jobs", rep_jobs, "worker threads for ex3.4");

  // plot
  std::string plot_file, plot_chart, plot_out;
  bool plot_highlight = false;
  auto* plot = app.add_subcommand("plot", "emit the projective picture as SVG");
  plot->add_option("file", plot_file, "arrangement JSON file")->required();
  plot->add_option("--chart", plot_chart, "affine chart functional a,b,c")->required();
  plot->add_flag("--highlight-triangle", plot_highlight, "shade a simple triangle if found");
  plot->add_option("-o,--output", plot_out, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed())
      return run_check(check_file, check_all, check_list, check_strict, check_out);
    if (ideal->parsed()) return run_ideal(ideal_action, ideal_spec, ideal_out);
    if (scan->parsed())
      return run_scan(scan_type, scan_n, scan_criterion, scan_jobs, scan_out, scan_resume);
    if (rep->parsed()) return run_reproduce(rep_target, rep_n, rep_r, rep_s, rep_t, rep_jobs);
    if (plot->parsed()) return run_plot(plot_file, plot_chart, plot_highlight, plot_out);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
