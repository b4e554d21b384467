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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is 0 only
// when every selected criterion passes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli.hpp"
#include "spreadlab/analysis.hpp"
#include "spreadlab/bounds.hpp"
#include "spreadlab/families.hpp"
#include "spreadlab/graph_io.hpp"
#include "spreadlab/harness.hpp"
#include "spreadlab/identities.hpp"
#include "spreadlab/quotient.hpp"
#include "spreadlab/spectra.hpp"
#include "spreadlab/structure.hpp"
#include "spreadlab/transforms.hpp"

namespace sl = spreadlab;

namespace {

// Pinned tolerances.
constexpr double kExampleTol = 0.01;
constexpr double kShiftTol = 1e-7;
constexpr double kSpreadTol = 1e-6;
constexpr double kOracleTol = 1e-7;
constexpr double kLowerTol = 1e-6;
constexpr std::size_t kMaxQuarantined = 5;

// Runtime limits in seconds.
constexpr double kExampleSeconds = 1.0;
constexpr double kShiftSeconds = 120.0;
constexpr double kSpreadSweepSeconds = 120.0;
constexpr double kSpreadSweepFullSeconds = 1800.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void for_each_connected(int n_lo, int n_hi, const std::function<void(const sl::Graph&)>& visit) {
  for (int n = n_lo; n <= n_hi; ++n) sl::for_each_graph(n, true, visit);
}

void for_each_any(int n_lo, int n_hi, const std::function<void(const sl::Graph&)>& visit) {
  for (int n = n_lo; n <= n_hi; ++n) sl::for_each_graph(n, false, visit);
}

Outcome worked_example() {
  const auto t0 = std::chrono::steady_clock::now();
  sl::Analysis a(sl::tadpole(5, 4));
  const auto& s = a.spectra();
  const sl::BoundReport r = sl::unicyclic_theorem(a);
  const double secs = seconds_since(t0);
  const double l1 = s.adjacency.largest();
  const double ln = s.adjacency.smallest();
  const double d0 = r.extra("D0").value_or(-1);
  const double rhs = r.extra("condition_rhs").value_or(0);
  const double line = s.line_spread.value_or(-1);
  Outcome o;
  o.pass = s.adjacency.size() == 9 && std::abs(l1 - 2.17) <= kExampleTol && std::abs(ln + 2.00) <= kExampleTol &&
           d0 == 7 && std::abs(s.spread - 4.17) <= kExampleTol && std::abs(line - 4.47) <= kExampleTol &&
           std::abs(s.signless_spread - 4.47) <= kExampleTol && std::abs(rhs + 2.0939) <= 1e-4 && ln >= rhs &&
           r.hypothesis_met && secs < kExampleSeconds;
  o.detail = "lambda1=" + fmt(l1) + " lambda9=" + fmt(ln) + " D0=" + fmt(d0) + " S=" + fmt(s.spread) +
             " S_line=" + fmt(line) + " S_Q=" + fmt(s.signless_spread) + " condition " + fmt(ln) +
             " >= " + fmt(rhs) + " time=" + fmt(secs) + "s";
  return o;
}

Outcome shift_identity() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  std::uint64_t graphs = 0, failures = 0;
  for_each_connected(2, 6, [&](const sl::Graph& g) {
    const sl::Lemma1Report rep = sl::lemma1_check(g);
    ++graphs;
    worst = std::max(worst, rep.max_deviation);
    if (!rep.holds) ++failures;
  });
  const double secs = seconds_since(t0);
  Outcome o;
  o.pass = failures == 0 && worst < kShiftTol && secs < kShiftSeconds && graphs > 0;
  o.detail = std::to_string(graphs) + " connected graphs n<=6, failures=" + std::to_string(failures) +
             " max deviation=" + fmt(worst) + " time=" + fmt(secs) + "s";
  return o;
}

Outcome theta_formula() {
  std::uint64_t graphs = 0, failures = 0;
  for_each_any(1, 6, [&](const sl::Graph& g) {
    ++graphs;
    long long z = 0;
    for (int v = 0; v < g.order(); ++v) z += static_cast<long long>(g.degree(v)) * g.degree(v);
    if (z % 2 != 0 || sl::line_graph(g).graph.size() != z / 2 - g.size()) ++failures;
  });
  Outcome o;
  o.pass = failures == 0;
  o.detail = std::to_string(graphs) + " labeled graphs n<=6, mismatches=" + std::to_string(failures);
  return o;
}

// S(G) <= S_line(G) for connected m > n >= 4; tight iff regular bipartite.
struct SpreadStats {
  std::uint64_t graphs = 0;
  std::uint64_t violations = 0;
  std::uint64_t tight = 0;
  std::uint64_t tight_mismatches = 0;
  double min_slack = 1e300;
};

void spread_visit(const sl::Graph& g, SpreadStats& st) {
  if (g.size() <= g.order()) return;
  ++st.graphs;
  const double s = sl::adjacency_spectrum(g).spread();
  const double line = sl::adjacency_spectrum(sl::line_graph(g).graph).spread();
  const double slack = line - s;
  st.min_slack = std::min(st.min_slack, slack);
  if (slack < -kSpreadTol) ++st.violations;
  const bool tight = slack <= kSpreadTol;
  if (tight) ++st.tight;
  if (tight != (sl::is_regular(g) && sl::is_bipartite(g))) ++st.tight_mismatches;
}

Outcome spread_vs_line(bool full) {
  const auto t0 = std::chrono::steady_clock::now();
  SpreadStats st;
  for_each_connected(4, 6, [&](const sl::Graph& g) { spread_visit(g, st); });
  const double gate_secs = seconds_since(t0);
  Outcome o;
  o.pass = st.violations == 0 && st.tight_mismatches == 0 && st.tight > 0 && gate_secs < kSpreadSweepSeconds;
  o.detail = "n<=6: " + std::to_string(st.graphs) + " graphs, violations=" + std::to_string(st.violations) +
             " tight=" + std::to_string(st.tight) + " tight-set mismatches=" + std::to_string(st.tight_mismatches) +
             " min slack=" + fmt(st.min_slack) + " time=" + fmt(gate_secs) + "s";
  if (full) {
    const auto t1 = std::chrono::steady_clock::now();
    SpreadStats st7;
    sl::for_each_graph(7, true, [&](const sl::Graph& g) { spread_visit(g, st7); });
    const double secs = seconds_since(t1);
    o.pass = o.pass && st7.violations == 0 && st7.tight_mismatches == 0 && secs < kSpreadSweepFullSeconds;
    o.detail += "; n=7: " + std::to_string(st7.graphs) + " graphs, violations=" +
                std::to_string(st7.violations) + " tight=" + std::to_string(st7.tight) +
                " tight-set mismatches=" + std::to_string(st7.tight_mismatches) + " time=" + fmt(secs) + "s";
  } else {
    o.detail += "; n=7 skipped (--quick)";
  }
  return o;
}

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

// Labelings of K_k ∨ (K_1 ∪ K_{n-k-1}) for n-k-1 >= 2: the complement is a
// star with n-k-1 leaves plus k isolated vertices.
std::uint64_t extremal_labelings(int n, int k) {
  return static_cast<std::uint64_t>(n) * binomial(n - 1, n - k - 1);
}

Outcome connectivity_extremal(bool full) {
  const sl::ConnectivityClass classes[] = {sl::ConnectivityClass::kVertex, sl::ConnectivityClass::kEdge,
                                           sl::ConnectivityClass::kMinDegree};
  const char* class_names[] = {"kappa", "epsilon", "delta"};
  Outcome o;
  std::uint64_t members = 0, violations = 0;
  std::string problems;
  const int n_hi = full ? 7 : 6;
  for (int n = 5; n <= n_hi; ++n) {
    // tight[c][k]: tight labeled graphs; wrong[c][k]: tight but not extremal.
    std::vector<std::vector<std::uint64_t>> tight(3, std::vector<std::uint64_t>(n, 0));
    std::vector<std::vector<std::uint64_t>> wrong(3, std::vector<std::uint64_t>(n, 0));
    std::vector<std::vector<std::uint64_t>> missed(3, std::vector<std::uint64_t>(n, 0));
    sl::for_each_graph(n, true, [&](const sl::Graph& g) {
      sl::Analysis a(g);
      const int invariants[] = {a.vertex_connectivity(), a.edge_connectivity(), a.degrees().min_degree};
      if (invariants[0] > n - 3 && invariants[1] > n - 3 && invariants[2] > n - 3) return;
      for (int c = 0; c < 3; ++c) {
        for (int k = std::max(1, invariants[c]); k <= n - 3; ++k) {
          const sl::BoundReport r = sl::connectivity_spread_bound(a, k, classes[c]);
          if (!r.hypothesis_met) continue;
          ++members;
          if (r.slack < -kSpreadTol) ++violations;
          const bool extremal = sl::is_connectivity_extremal(g, k);
          const bool is_tight = r.slack <= kSpreadTol;
          if (is_tight) ++tight[c][k];
          if (is_tight && !extremal) ++wrong[c][k];
          if (!is_tight && extremal) ++missed[c][k];
        }
      }
    });
    for (int c = 0; c < 3; ++c) {
      for (int k = 1; k <= n - 3; ++k) {
        const std::uint64_t expected = extremal_labelings(n, k);
        if (tight[c][k] != expected || wrong[c][k] != 0 || missed[c][k] != 0) {
          problems += " " + std::string(class_names[c]) + "(n=" + std::to_string(n) + ",k=" + std::to_string(k) +
                      ") tight=" + std::to_string(tight[c][k]) + "/" + std::to_string(expected);
        }
      }
    }
    // The closed form is attained by the extremal graph itself.
    for (int k = 1; k <= n - 3; ++k) {
      const double line = sl::adjacency_spectrum(sl::line_graph(sl::join_family(n, k, 1)).graph).spread();
      if (std::abs(line - sl::connectivity_bound_value(n, k)) > kSpreadTol) {
        problems += " closed-form(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
      }
    }
  }
  o.pass = violations == 0 && problems.empty();
  o.detail = "n=5.." + std::to_string(n_hi) + ", k=1..n-3, classes kappa/epsilon/delta: " +
             std::to_string(members) + " member checks, violations=" + std::to_string(violations) +
             ", tight labeled class = K_k join (K_1 + K_{n-k-1}) " + (problems.empty() ? "in every case" : "FAILED:" + problems);
  if (!full) o.detail += "; n=7 skipped (--quick)";
  return o;
}

const sl::OracleCheck* find_check(const sl::OracleReport& rep, const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name) return &c;
  return nullptr;
}

Outcome oracle_criterion(const std::vector<std::string>& names) {
  const sl::OracleReport rep = sl::oracle_crosscheck(sl::OracleSuite::kAll, {}, {}, kOracleTol);
  Outcome o;
  for (const auto& name : names) {
    const sl::OracleCheck* c = find_check(rep, name);
    if (c == nullptr) {
      o.pass = false;
      o.detail += name + " missing; ";
      continue;
    }
    o.pass = o.pass && c->passed && c->cases > 0;
    o.detail += name + " cases=" + std::to_string(c->cases) + " max deviation=" + fmt(c->max_deviation) +
                (c->passed ? "" : " worst " + c->worst_case) + "; ";
  }
  if (!o.detail.empty()) o.detail.resize(o.detail.size() - 2);
  return o;
}

Outcome total_lower_bounds(const std::string& quarantine_path) {
  sl::SweepConfig cfg;
  cfg.n_min = 3;
  cfg.n_max = 6;
  cfg.connected_only = true;
  cfg.bounds = {sl::BoundId::kTotalQSpreadLower, sl::BoundId::kTotalSpreadLower,
                sl::BoundId::kTotalLaplacianSpreadLower};
  cfg.slack_tolerance = kLowerTol;
  cfg.quarantine = sl::load_quarantine(quarantine_path);
  const sl::VerificationLedger ledger = sl::run_sweep(cfg);
  Outcome o;
  std::uint64_t quarantined = 0;
  std::vector<std::string> listed;
  o.detail = std::to_string(ledger.graphs) + " connected graphs 3<=n<=6:";
  for (const auto& t : ledger.tallies) {
    quarantined += t.quarantined;
    for (const auto& w : t.quarantined_witnesses) listed.push_back(std::string(sl::bound_name(t.bound)) + ":" + w);
    o.pass = o.pass && t.violations == 0 && t.hypothesis_met > 0;
    o.detail += " " + std::string(sl::bound_name(t.bound)) + " met=" + std::to_string(t.hypothesis_met) +
                " violations=" + std::to_string(t.violations) +
                " min slack=" + (t.min_slack ? fmt(*t.min_slack) : std::string("n/a")) + ";";
  }
  o.pass = o.pass && quarantined <= kMaxQuarantined;
  o.detail += " quarantined=" + std::to_string(quarantined);
  for (const auto& q : listed) o.detail += " " + q;
  return o;
}

Outcome interlacing() {
  std::uint64_t graphs = 0, failures = 0, pairs = 0, edge_failures = 0;
  double worst = 1e300, edge_worst = 1e300;
  for_each_connected(1, 6, [&](const sl::Graph& g) {
    sl::Analysis a(g);
    const sl::BoundReport r = sl::quotient_interlacing_report(a);
    if (!r.hypothesis_met) return;
    ++graphs;
    worst = std::min(worst, r.actual_value);
    if (!r.consistent) ++failures;
  });
  for_each_any(1, 5, [&](const sl::Graph& g) {
    for (const sl::Edge& e : g.edges()) {
      const sl::InterlacingReport rep = sl::edge_interlacing_check(g, e);
      ++pairs;
      edge_worst = std::min(edge_worst, rep.min_slack);
      if (!rep.holds) ++edge_failures;
    }
  });
  Outcome o;
  o.pass = failures == 0 && edge_failures == 0 && graphs > 0 && pairs > 0;
  o.detail = "vertex/edge quotient of total graph (A, L, Q): " + std::to_string(graphs) +
             " connected graphs n<=6, failures=" + std::to_string(failures) + " min slack=" + fmt(worst) +
             "; edge deletion: " + std::to_string(pairs) + " (graph, edge) pairs n<=5, failures=" +
             std::to_string(edge_failures) + " min slack=" + fmt(edge_worst);
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome determinism() {
  const auto dir = std::filesystem::temp_directory_path();
  const auto one = dir / "spreadlab_acceptance_jobs1.json";
  const auto eight = dir / "spreadlab_acceptance_jobs8.json";
  std::istringstream in;
  std::ostringstream out, err;
  const int c1 = sl::cli::run({"verify", "--n-max", "6", "--bounds", "all", "--jobs", "1", "--out", one.string()},
                              in, out, err);
  const int c8 = sl::cli::run({"verify", "--n-max", "6", "--bounds", "all", "--jobs", "8", "--out", eight.string()},
                              in, out, err);
  const std::string a = slurp(one);
  const std::string b = slurp(eight);
  std::filesystem::remove(one);
  std::filesystem::remove(eight);
  Outcome o;
  o.pass = c1 == c8 && c1 != sl::cli::kExitUsage && !a.empty() && a == b;
  o.detail = "verify --n-max 6 --bounds all, --jobs 1 vs --jobs 8: exit " + std::to_string(c1) + "/" +
             std::to_string(c8) + ", " + std::to_string(a.size()) + " bytes, " +
             (a == b ? "identical" : "DIFFERENT");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spreadlab acceptance suite"};
  std::vector<int> only;
  bool quick = false;
  std::string quarantine = SPREADLAB_SOURCE_DIR "/data/quarantine.tsv";
  app.add_option("--criterion", only, "Run only these criteria (1-10)")->check(CLI::Range(1, 10));
  app.add_flag("--quick", quick, "Skip the n = 7 passes of criteria 4 and 5");
  app.add_option("--quarantine", quarantine, "Quarantine file for criterion 7");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"worked example tadpole(5,4)", worked_example},
      {"signless-line shift identity", shift_identity},
      {"theta formula", theta_formula},
      {"spread vs line spread", [&] { return spread_vs_line(!quick); }},
      {"connectivity extremal bound", [&] { return connectivity_extremal(!quick); }},
      {"closed-form oracles",
       [] { return oracle_criterion({"join_family_line_spectrum", "regular_total_spectrum"}); }},
      {"total-graph lower bounds", [&] { return total_lower_bounds(quarantine); }},
      {"regular total exact spread",
       [] { return oracle_criterion({"regular_total_spread", "regular_total_bracket"}); }},
      {"interlacing", interlacing},
      {"determinism", determinism},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << "criterion " << id << (id < 10 ? "  " : " ") << (o.pass ? "PASS" : "FAIL") << "  "
              << criteria[i].first << ": " << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
