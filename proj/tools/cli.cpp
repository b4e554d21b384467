// Copyright 2026 The spreadlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "spreadlab/analysis.hpp"
#include "spreadlab/bounds.hpp"
#include "spreadlab/error.hpp"
#include "spreadlab/families.hpp"
#include "spreadlab/graph_io.hpp"
#include "spreadlab/transforms.hpp"

#ifndef SPREADLAB_DEFAULT_QUARANTINE
#define SPREADLAB_DEFAULT_QUARANTINE "data/quarantine.tsv"
#endif

namespace spreadlab::cli {
namespace {

using nlohmann::ordered_json;

std::string num(double x) {
  if (x == 0.0) x = 0.0;  // drops the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

double rounded(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(num(x).c_str(), nullptr);
}

ordered_json json_number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return rounded(x);
}

ordered_json json_values(const Spectrum& s) {
  ordered_json a = ordered_json::array();
  for (double x : s.values()) a.push_back(json_number(x));
  return a;
}

std::string joined(const Spectrum& s) {
  std::string out;
  for (double x : s.values()) {
    if (!out.empty()) out += ' ';
    out += num(x);
  }
  return out;
}

std::string opt_int(const std::optional<int>& x) { return x ? std::to_string(*x) : "inf"; }

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<Graph> load_input(const std::string& input, std::istream& in) {
  if (input == "-") return read_graphs(in);
  std::error_code ec;
  if (std::filesystem::is_regular_file(input, ec)) {
    std::ifstream file(input);
    if (!file) throw InputError("cannot open " + input);
    return read_graphs(file);
  }
  return {from_graph6(input)};
}

std::vector<BoundId> parse_bound_list(const std::string& text) {
  std::vector<BoundId> out;
  for (const auto& name : split_list(text)) {
    if (name == "all") {
      for (BoundId id : all_bounds()) out.push_back(id);
      continue;
    }
    const auto id = parse_bound(name);
    if (!id) throw ParameterError("unknown bound '" + name + "'");
    out.push_back(*id);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string status(const BoundReport& r) {
  if (!r.hypothesis_met) return "gated";
  if (!r.enforced) return r.slack < -kSlackTolerance || !r.consistent ? "record-fail" : "record-ok";
  if (r.violation()) return "VIOLATION";
  if (r.iff_mismatch()) return "iff-mismatch";
  return r.tight ? "tight" : "ok";
}

struct GraphResult {
  ordered_json json;
  std::uint64_t violations = 0;
};

GraphResult analyze_graph(const Graph& g, const std::vector<BoundId>& bounds, std::ostream& out,
                          bool json) {
  Analysis a(g);
  const auto& deg = a.degrees();
  const auto& s = a.spectra();
  const std::string graph6 = to_graph6(g);
  const long long theta = deg.zagreb / 2 - a.size();
  const Graph& total = a.total();
  int total_min = 0;
  int total_max = 0;
  if (total.order() > 0) {
    const DegreeProfile tp = degree_profile(total);
    total_min = tp.min_degree;
    total_max = tp.max_degree;
  }

  std::vector<std::pair<EvaluatedReport, BoundId>> reports;
  for (BoundId id : bounds) {
    for (auto& r : evaluate_bound(id, a)) reports.push_back({std::move(r), id});
  }

  GraphResult result;
  for (const auto& [r, id] : reports) {
    if (r.report.violation()) ++result.violations;
  }

  if (json) {
    ordered_json j;
    j["graph6"] = graph6;
    j["n"] = a.order();
    j["m"] = a.size();
    j["degrees"] = {{"sequence", deg.degrees},
                    {"min", deg.min_degree},
                    {"max", deg.max_degree},
                    {"zagreb", deg.zagreb}};
    ordered_json conn;
    conn["connected"] = a.connected();
    conn["vertex_connectivity"] = a.vertex_connectivity();
    conn["edge_connectivity"] = a.edge_connectivity();
    conn["girth"] = a.girth() ? ordered_json(*a.girth()) : ordered_json(nullptr);
    conn["diameter"] = a.diameter() ? ordered_json(*a.diameter()) : ordered_json(nullptr);
    conn["bipartite"] = a.bipartite();
    conn["regular"] = a.regular();
    j["structure"] = conn;
    ordered_json spec;
    spec["adjacency"] = json_values(s.adjacency);
    spec["laplacian"] = json_values(s.laplacian);
    spec["signless_laplacian"] = json_values(s.signless);
    spec["line"] = s.line ? json_values(*s.line) : ordered_json(nullptr);
    j["spectra"] = spec;
    j["spreads"] = {{"spread", json_number(s.spread)},
                    {"signless_spread", json_number(s.signless_spread)},
                    {"laplacian_spread", json_number(s.laplacian_spread)},
                    {"line_spread", s.line_spread ? json_number(*s.line_spread) : ordered_json(nullptr)},
                    {"algebraic_connectivity", json_number(s.algebraic_connectivity)}};
    j["transforms"] = {{"theta", theta},
                       {"line_order", a.line().graph.order()},
                       {"line_size", a.line().graph.size()},
                       {"total_order", total.order()},
                       {"total_size", total.size()},
                       {"total_min_degree", total_min},
                       {"total_max_degree", total_max}};
    ordered_json list = ordered_json::array();
    for (const auto& [er, id] : reports) {
      const BoundReport& r = er.report;
      ordered_json b;
      b["bound"] = bound_name(id);
      b["param"] = er.param;
      b["hypothesis_met"] = r.hypothesis_met;
      b["bound_value"] = json_number(r.bound_value);
      b["actual_value"] = json_number(r.actual_value);
      b["slack"] = json_number(r.slack);
      b["tight"] = r.tight;
      b["equality_predicted"] =
          r.equality_predicted ? ordered_json(*r.equality_predicted) : ordered_json(nullptr);
      b["consistent"] = r.consistent;
      b["enforced"] = r.enforced;
      b["violation"] = r.violation();
      b["status"] = status(r);
      b["notes"] = r.notes;
      ordered_json extras = ordered_json::object();
      for (const auto& [k, v] : r.extras) extras[k] = json_number(v);
      b["extras"] = extras;
      list.push_back(std::move(b));
    }
    j["bounds"] = list;
    result.json = std::move(j);
    return result;
  }

  out << "graph " << graph6 << "  n=" << a.order() << " m=" << a.size() << '\n';
  out << "  degrees            ";
  for (int d : deg.degrees) out << d << ' ';
  out << "(min " << deg.min_degree << ", max " << deg.max_degree << ", zagreb " << deg.zagreb << ")\n";
  out << "  connected          " << (a.connected() ? "yes" : "no") << "  kappa=" << a.vertex_connectivity()
      << " epsilon=" << a.edge_connectivity() << " girth=" << opt_int(a.girth())
      << " diameter=" << opt_int(a.diameter()) << '\n';
  out << "  bipartite          " << (a.bipartite() ? "yes" : "no") << '\n';
  out << "  regular            " << (a.regular() ? "yes" : "no") << '\n';
  out << "  A spectrum         " << joined(s.adjacency) << '\n';
  out << "  L spectrum         " << joined(s.laplacian) << '\n';
  out << "  Q spectrum         " << joined(s.signless) << '\n';
  out << "  line spectrum      " << (s.line ? joined(*s.line) : "absent") << '\n';
  if (!s.adjacency.empty()) {
    out << "  lambda_1           " << num(s.adjacency.largest()) << '\n';
    out << "  lambda_n           " << num(s.adjacency.smallest()) << '\n';
  }
  out << "  spread S           " << num(s.spread) << '\n';
  out << "  Q-spread S_Q       " << num(s.signless_spread) << '\n';
  out << "  L-spread S_L       " << num(s.laplacian_spread) << '\n';
  out << "  line spread S_line " << (s.line_spread ? num(*s.line_spread) : "absent") << '\n';
  out << "  theta = Z_g/2 - m  " << theta << " (line graph has " << a.line().graph.size() << " edges)\n";
  out << "  total graph        order " << total.order() << ", size " << total.size() << ", degrees "
      << total_min << ".." << total_max << '\n';
  if (!reports.empty()) {
    std::size_t width = 4;
    for (const auto& [er, id] : reports) {
      width = std::max(width, bound_name(id).size() + (er.param.empty() ? 0 : er.param.size() + 1));
    }
    out << "  " << std::left << std::setw(static_cast<int>(width)) << "bound" << std::right
        << std::setw(14) << "status" << std::setw(18) << "bound_value" << std::setw(18) << "actual"
        << std::setw(18) << "slack" << '\n';
    for (const auto& [er, id] : reports) {
      const BoundReport& r = er.report;
      std::string label(bound_name(id));
      if (!er.param.empty()) label += " " + er.param;
      out << "  " << std::left << std::setw(static_cast<int>(width)) << label << std::right
          << std::setw(14) << status(r);
      if (r.hypothesis_met) {
        out << std::setw(18) << num(r.bound_value) << std::setw(18) << num(r.actual_value)
            << std::setw(18) << num(r.slack);
      }
      out << '\n';
      if (!r.extras.empty() && (r.hypothesis_met || id == BoundId::kUnicyclicTheorem)) {
        out << "      ";
        for (const auto& [k, v] : r.extras) out << k << '=' << num(v) << ' ';
        out << '\n';
      }
      if (!r.notes.empty()) out << "      note: " << r.notes << '\n';
    }
  }
  return result;
}

void print_join_table(int n, int k, int i, std::ostream& out) {
  const Graph g = join_family(n, k, i);
  const int m = g.size();
  const Spectrum eig = adjacency_spectrum(line_graph(g).graph);
  out << "line spectrum of K_" << k << " v (K_" << i << " u K_" << n - k - i << "), n=" << n
      << " m=" << m << '\n';
  if (m < n) {
    out << "  closed form not applicable (m < n)\n";
    return;
  }
  const Spectrum closed = join_family_line_spectrum(n, k, i);
  out << "  " << std::setw(6) << "index" << std::setw(18) << "closed_form" << std::setw(18)
      << "eigensolved" << std::setw(18) << "abs_diff" << '\n';
  for (int t = 0; t < eig.size(); ++t) {
    out << "  " << std::setw(6) << t + 1 << std::setw(18) << num(closed[t]) << std::setw(18)
        << num(eig[t]) << std::setw(18) << num(std::abs(closed[t] - eig[t])) << '\n';
  }
  out << "  max deviation " << num(max_abs_deviation(closed, eig)) << '\n';
  if (m > n) {
    out << "  line spread closed form " << num(join_family_line_spread(n, k, i)) << ", eigensolved "
        << num(eig.spread()) << '\n';
  } else {
    out << "  line spread closed form needs m > n; eigensolved " << num(eig.spread()) << '\n';
  }
}

std::string quarantine_path(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("SPREADLAB_QUARANTINE"); env && *env) return env;
  return SPREADLAB_DEFAULT_QUARANTINE;
}

}  // namespace

int run_oracle(OracleSuite suite, const OracleFormulas& formulas, const OracleLimits& limits,
               std::ostream& out) {
  const OracleReport report = oracle_crosscheck(suite, formulas, limits);
  std::size_t width = 5;
  for (const auto& c : report.checks) width = std::max(width, c.name.size());
  out << std::left << std::setw(static_cast<int>(width)) << "check" << std::right << std::setw(10)
      << "cases" << std::setw(18) << "max_deviation" << std::setw(8) << "status"
      << "  worst_case\n";
  for (const auto& c : report.checks) {
    out << std::left << std::setw(static_cast<int>(width)) << c.name << std::right << std::setw(10)
        << c.cases << std::setw(18) << num(c.max_deviation) << std::setw(8)
        << (c.passed ? "ok" : "FAIL") << "  " << c.worst_case << '\n';
  }
  out << (report.passed() ? "PASS" : "FAIL") << " (tolerance " << num(report.tolerance) << ")\n";
  return report.passed() ? kExitOk : kExitViolation;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral spread toolkit: graph analysis, exhaustive bound verification, closed-form oracles"};
  app.name("spreadlab");
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "Spectra, transforms and bound reports for graphs");
  std::string analyze_input;
  bool analyze_json = false;
  std::string analyze_bounds = "all";
  analyze->add_option("input", analyze_input, "graph6 literal, graph6/edge-list file, or - for stdin")
      ->required();
  analyze->add_flag("--json", analyze_json, "JSON output");
  analyze->add_option("--bounds", analyze_bounds, "comma-separated bound names or 'all'");

  auto* verify = app.add_subcommand("verify", "Exhaustive sweep over small labeled graphs");
  SweepConfig cfg;
  std::string verify_bounds = "all";
  std::string quarantine_flag;
  std::string out_path;
  std::string csv_path;
  bool timing = false;
  verify->add_option("--n-max", cfg.n_max, "largest order")->default_val(5);
  verify->add_option("--n-min", cfg.n_min, "smallest order")->default_val(1);
  verify->add_flag("--connected,!--all-graphs", cfg.connected_only,
                   "connected graphs only (default); --all-graphs adds disconnected ones");
  verify->add_option("--bounds", verify_bounds, "comma-separated bound names or 'all'");
  verify->add_option("--quarantine", quarantine_flag, "quarantine file (bound<TAB>graph6<TAB>note)");
  verify->add_option("--jobs", cfg.workers, "worker threads")->default_val(1);
  verify->add_option("--out", out_path, "write the JSON ledger here");
  verify->add_option("--csv", csv_path, "write per-report CSV rows here");
  verify->add_option("--tolerance", cfg.slack_tolerance, "violation threshold on slack")->default_val(kSlackTolerance);
  verify->add_flag("--dedup", cfg.dedup, "drop graphs with a repeated degree/spectrum signature");
  verify->add_flag("--timing", timing, "print seconds per bound");

  auto* family_cmd = app.add_subcommand("family", "Emit a named graph or its analysis");
  std::string family_name_arg;
  std::vector<int> family_params;
  std::string emit = "graph6";
  family_cmd->add_option("name", family_name_arg, "complete, cycle, path, star, complete_bipartite, "
                                                  "join_family, tadpole, petersen, empty")
      ->required();
  family_cmd->add_option("params", family_params, "integer parameters");
  family_cmd->add_option("--emit", emit, "graph6 or analysis")->check(CLI::IsMember({"graph6", "analysis"}));

  auto* oracle = app.add_subcommand("oracle", "Closed forms against full eigensolves");
  std::string suite_name = "all";
  oracle->add_option("--suite", suite_name, "join, total or all")->check(CLI::IsMember({"join", "total", "all"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze->parsed()) {
      const auto bounds = parse_bound_list(analyze_bounds);
      const auto graphs = load_input(analyze_input, in);
      std::uint64_t violations = 0;
      ordered_json list = ordered_json::array();
      for (const Graph& g : graphs) {
        GraphResult r = analyze_graph(g, bounds, out, analyze_json);
        violations += r.violations;
        if (analyze_json) list.push_back(std::move(r.json));
      }
      if (analyze_json) {
        ordered_json j;
        j["schema_version"] = kJsonSchemaVersion;
        j["graphs"] = std::move(list);
        j["violations"] = violations;
        out << j.dump(2) << '\n';
      } else {
        out << (violations ? "FAIL" : "PASS") << ": " << violations << " violation(s)\n";
      }
      return violations ? kExitViolation : kExitOk;
    }
    if (verify->parsed()) {
      std::vector<BoundId> skipped;
      cfg.bounds = resolve_bounds(split_list(verify_bounds), cfg.n_max, &skipped);
      const std::string qpath = quarantine_path(quarantine_flag);
      std::error_code ec;
      if (!quarantine_flag.empty() || std::filesystem::exists(qpath, ec)) {
        cfg.quarantine = load_quarantine(qpath);
      }
      cfg.collect_rows = !csv_path.empty();
      VerificationLedger ledger = run_sweep(cfg);
      ledger.skipped = skipped;
      if (!out_path.empty()) {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw InputError("cannot write " + out_path);
        write_ledger_json(ledger, file);
        if (!file) throw InputError("write failed: " + out_path);
      }
      if (!csv_path.empty()) {
        std::ofstream file(csv_path, std::ios::binary);
        if (!file) throw InputError("cannot write " + csv_path);
        write_ledger_csv(ledger, file);
      }
      write_ledger_text(ledger, out, timing);
      return ledger.failed() ? kExitViolation : kExitOk;
    }
    if (family_cmd->parsed()) {
      const auto f = parse_family(family_name_arg);
      if (!f) throw ParameterError("unknown family '" + family_name_arg + "'");
      const Graph g = family(*f, family_params);
      if (emit == "graph6") {
        out << to_graph6(g) << '\n';
        return kExitOk;
      }
      const GraphResult r = analyze_graph(g, all_bounds(), out, false);
      if (*f == Family::kJoinFamily) print_join_table(family_params[0], family_params[1], family_params[2], out);
      out << (r.violations ? "FAIL" : "PASS") << ": " << r.violations << " violation(s)\n";
      return r.violations ? kExitViolation : kExitOk;
    }
    if (oracle->parsed()) {
      return run_oracle(*parse_oracle_suite(suite_name), {}, {}, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace spreadlab::cli
