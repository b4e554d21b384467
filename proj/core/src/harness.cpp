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

#include "spreadlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

#include <json.hpp>

#include "spreadlab/error.hpp"
#include "spreadlab/families.hpp"
#include "spreadlab/graph_io.hpp"
#include "spreadlab/identities.hpp"
#include "spreadlab/structure.hpp"
#include "spreadlab/transforms.hpp"

namespace spreadlab {
namespace {

constexpr std::uint64_t kChunkSize = 2048;

void check_order(int n) {
  if (n < 1 || n > kMaxSweepOrder) {
    throw CapacityError("graph order " + std::to_string(n) + " outside 1.." +
                        std::to_string(kMaxSweepOrder));
  }
}

std::string dedup_key(const Graph& g) {
  std::vector<int> degrees;
  for (int v = 0; v < g.order(); ++v) degrees.push_back(g.degree(v));
  std::sort(degrees.begin(), degrees.end());
  std::string key;
  for (int d : degrees) key += std::to_string(d) + ',';
  key += '|';
  for (double x : adjacency_spectrum(g).values()) {
    key += std::to_string(std::llround(x * 1e6)) + ',';
  }
  return key;
}

std::vector<std::uint64_t> dedup_masks(int n, bool connected_only) {
  std::vector<std::uint64_t> kept;
  std::unordered_set<std::string> seen;
  const std::uint64_t count = labeled_graph_count(n);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const Graph g = Graph::from_upper_mask(n, mask);
    if (connected_only && !is_connected(g)) continue;
    if (seen.insert(dedup_key(g)).second) kept.push_back(mask);
  }
  return kept;
}

void compact(std::vector<std::string>& list) {
  std::sort(list.begin(), list.end());
  list.erase(std::unique(list.begin(), list.end()), list.end());
  if (list.size() > kWitnessCap) list.resize(kWitnessCap);
}

void add_witness(std::vector<std::string>& list, std::string entry) {
  list.push_back(std::move(entry));
  if (list.size() > 4 * kWitnessCap) compact(list);
}

void merge_list(std::vector<std::string>& into, const std::vector<std::string>& from) {
  into.insert(into.end(), from.begin(), from.end());
  compact(into);
}

std::string witness_label(const std::string& graph6, const std::string& param) {
  return param.empty() ? graph6 : graph6 + " " + param;
}

// Round to the 10 significant digits used for every printed number.
double rounded(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return std::strtod(buf, nullptr);
}

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

struct WorkItem {
  int n = 0;
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
  const std::vector<std::uint64_t>* list = nullptr;
};

class SweepWorker {
 public:
  SweepWorker(const SweepConfig& cfg, const std::set<std::pair<int, std::string>>& quarantine)
      : cfg_(cfg), quarantine_(quarantine) {
    for (BoundId id : cfg.bounds) {
      BoundTally t;
      t.bound = id;
      ledger_.tallies.push_back(std::move(t));
    }
  }

  void run(const WorkItem& item) {
    for (std::uint64_t idx = item.begin; idx < item.end; ++idx) {
      const std::uint64_t mask = item.list ? (*item.list)[idx] : idx;
      Graph g = Graph::from_upper_mask(item.n, mask);
      if (!item.list && cfg_.connected_only && !is_connected(g)) continue;
      visit(std::move(g));
    }
  }

  VerificationLedger& ledger() { return ledger_; }

 private:
  void visit(Graph g) {
    ++ledger_.graphs;
    const std::string graph6 = to_graph6(g);
    const int n = g.order();
    Analysis a(std::move(g));
    for (std::size_t b = 0; b < cfg_.bounds.size(); ++b) {
      const BoundId id = cfg_.bounds[b];
      BoundTally& t = ledger_.tallies[b];
      const auto start = std::chrono::steady_clock::now();
      const auto reports = evaluate_bound(id, a);
      t.seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      const bool quarantined = quarantine_.count({static_cast<int>(id), graph6}) > 0;
      for (const auto& [r, param] : reports) {
        tally(t, r, graph6, param, quarantined);
        if (cfg_.collect_rows) {
          ledger_.rows.push_back({n, graph6, id, param, r.hypothesis_met, r.bound_value,
                                  r.actual_value, r.slack, r.tight,
                                  !quarantined && r.violation(cfg_.slack_tolerance)});
        }
      }
    }
  }

  void tally(BoundTally& t, const BoundReport& r, const std::string& graph6,
             const std::string& param, bool quarantined) {
    ++t.checked;
    if (!r.hypothesis_met) {
      ++t.gated_out;
      return;
    }
    ++t.hypothesis_met;
    const std::string label = witness_label(graph6, param);
    if (r.tight) {
      ++t.tight;
      add_witness(t.tight_witnesses, label);
    }
    t.min_slack = t.min_slack ? std::min(*t.min_slack, r.slack) : r.slack;
    if (quarantined) {
      ++t.quarantined;
      add_witness(t.quarantined_witnesses, label);
      return;
    }
    if (!r.enforced) {
      if (r.slack < -cfg_.slack_tolerance || !r.consistent) {
        ++t.record_failures;
        add_witness(t.record_failure_witnesses, label);
      }
      return;
    }
    const bool mismatch = r.iff_mismatch();
    if (mismatch) {
      ++t.iff_mismatches;
      add_witness(t.iff_mismatch_witnesses, label);
    }
    if (r.violation(cfg_.slack_tolerance)) {
      ++t.violations;
      add_witness(t.violation_witnesses, label);
    }
  }

  const SweepConfig& cfg_;
  const std::set<std::pair<int, std::string>>& quarantine_;
  VerificationLedger ledger_;
};

nlohmann::ordered_json number_or_null(const std::optional<double>& x) {
  if (!x || !std::isfinite(*x)) return nullptr;
  return rounded(*x);
}

}  // namespace

std::uint64_t labeled_graph_count(int n) {
  check_order(n);
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

void for_each_graph(int n, bool connected_only, const std::function<void(const Graph&)>& visit) {
  const std::uint64_t count = labeled_graph_count(n);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const Graph g = Graph::from_upper_mask(n, mask);
    if (connected_only && !is_connected(g)) continue;
    visit(g);
  }
}

std::vector<Graph> enumerate_graphs(int n, bool connected_only, bool dedup) {
  std::vector<Graph> out;
  if (dedup) {
    for (std::uint64_t mask : dedup_masks(n, connected_only)) {
      out.push_back(Graph::from_upper_mask(n, mask));
    }
    return out;
  }
  for_each_graph(n, connected_only, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::vector<Graph> enumerate_regular_graphs(int n, int r, bool connected_only) {
  if (n < 1) throw ParameterError("order must be positive");
  if (r < 0 || r >= n || (n * r) % 2 != 0) return {};
  std::vector<Edge> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  }
  std::vector<int> degree(n, 0);
  std::vector<Edge> chosen;
  std::vector<Graph> out;
  std::function<void(std::size_t)> step = [&](std::size_t p) {
    if (p == pairs.size()) {
      Graph g(n, chosen);
      if (!connected_only || is_connected(g)) out.push_back(std::move(g));
      return;
    }
    const auto [i, j] = std::pair{pairs[p].u, pairs[p].v};
    if (degree[i] < r && degree[j] < r) {
      ++degree[i];
      ++degree[j];
      chosen.push_back(pairs[p]);
      step(p + 1);
      chosen.pop_back();
      --degree[i];
      --degree[j];
    }
    // Skipping (i, j) must leave i and j able to reach degree r.
    const int left_for_i = n - 1 - j;
    const int left_for_j = (n - 1 - j) + (j - i - 1);
    if (degree[i] + left_for_i >= r && degree[j] + left_for_j >= r) step(p + 1);
  };
  step(0);
  return out;
}

std::vector<EvaluatedReport> evaluate_bound(BoundId id, Analysis& a) {
  auto one = [](BoundReport r) { return std::vector<EvaluatedReport>{{std::move(r), {}}}; };
  switch (id) {
    case BoundId::kGregoryUpper:
      return one(gregory_upper(a));
    case BoundId::kLineSpreadUpper:
      return one(line_spread_upper(a));
    case BoundId::kCharactTrichotomy:
      return one(charact_trichotomy(a));
    case BoundId::kSpreadVsLineSpread:
      return one(spread_vs_line_spread(a));
    case BoundId::kUnicyclicTheorem:
      return one(unicyclic_theorem(a));
    case BoundId::kGroneTreeBound:
      return one(grone_tree_bound(a));
    case BoundId::kEdgeAdditionMonotonicity: {
      std::vector<EvaluatedReport> out;
      const auto missing = a.graph().non_edges();
      if (missing.empty()) return out;
      if (!a.connected()) return one(edge_addition_monotonicity(a, missing.front()));
      for (const Edge& e : missing) {
        out.push_back({edge_addition_monotonicity(a, e),
                       "e=" + std::to_string(e.u) + "-" + std::to_string(e.v)});
      }
      return out;
    }
    case BoundId::kConnectivityVertex:
    case BoundId::kConnectivityEdge:
    case BoundId::kConnectivityMinDegree: {
      const ConnectivityClass cls = id == BoundId::kConnectivityVertex ? ConnectivityClass::kVertex
                                    : id == BoundId::kConnectivityEdge ? ConnectivityClass::kEdge
                                                                       : ConnectivityClass::kMinDegree;
      std::vector<EvaluatedReport> out;
      for (int k = 1; k <= a.order() - 1; ++k) {
        out.push_back({connectivity_spread_bound(a, k, cls), "k=" + std::to_string(k)});
      }
      return out;
    }
    case BoundId::kTotalQSpreadLower:
      return one(total_q_spread_lower(a));
    case BoundId::kTotalSpreadLower:
      return one(total_spread_lower(a));
    case BoundId::kTotalLaplacianSpreadLower:
      return one(total_laplacian_spread_lower(a));
    case BoundId::kRegularTotalSpread:
      return one(regular_total_spread(a));
    case BoundId::kRegularTotalMinEig:
      return one(regular_total_min_eig_report(a));
    case BoundId::kLemma1:
      return one(lemma1_report(a));
    case BoundId::kThetaIdentity:
      return one(theta_identity_report(a));
    case BoundId::kIncidenceIdentity:
      return one(incidence_identity_report(a));
    case BoundId::kTotalDegreeIdentity:
      return one(total_degree_report(a));
    case BoundId::kQuotientInterlacing:
      return one(quotient_interlacing_report(a));
    case BoundId::kEdgeInterlacing:
      return one(edge_interlacing_report(a));
    case BoundId::kTwoLambdaQ:
      return one(two_lambda_q(a));
  }
  throw ParameterError("unknown bound id");
}

std::vector<QuarantineEntry> parse_quarantine(std::istream& in) {
  std::vector<QuarantineEntry> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto tab1 = line.find('\t');
    const auto tab2 = tab1 == std::string::npos ? tab1 : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos) {
      throw ParseError("quarantine line " + std::to_string(line_no) + ": expected 3 tab-separated fields", line_no);
    }
    const auto bound = parse_bound(line.substr(0, tab1));
    if (!bound) {
      throw ParseError("quarantine line " + std::to_string(line_no) + ": unknown bound '" +
                           line.substr(0, tab1) + "'", line_no);
    }
    std::string graph6 = line.substr(tab1 + 1, tab2 - tab1 - 1);
    try {
      from_graph6(graph6);
    } catch (const ParseError& e) {
      throw ParseError("quarantine line " + std::to_string(line_no) + ": " + e.what(), e.offset());
    }
    out.push_back({*bound, std::move(graph6), line.substr(tab2 + 1)});
  }
  return out;
}

std::vector<QuarantineEntry> load_quarantine(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open quarantine file " + path);
  return parse_quarantine(in);
}

std::vector<BoundId> resolve_bounds(const std::vector<std::string>& names, int n_max,
                                    std::vector<BoundId>* skipped) {
  const bool total_allowed = n_max <= kMaxTotalSweepOrder;
  std::vector<BoundId> out;
  auto add = [&](BoundId id, bool explicit_name) {
    if (std::find(out.begin(), out.end(), id) != out.end()) return;
    if (uses_total_graph(id) && !total_allowed) {
      if (explicit_name) {
        throw CapacityError(std::string(bound_name(id)) + " builds total graphs; needs n_max <= " +
                            std::to_string(kMaxTotalSweepOrder));
      }
      if (skipped) skipped->push_back(id);
      return;
    }
    out.push_back(id);
  };
  for (const auto& name : names) {
    if (name == "all") {
      for (BoundId id : all_bounds()) add(id, false);
      continue;
    }
    const auto id = parse_bound(name);
    if (!id) throw ParameterError("unknown bound '" + name + "'");
    add(*id, true);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t VerificationLedger::total_violations() const {
  std::uint64_t total = 0;
  for (const auto& t : tallies) total += t.violations;
  return total;
}

const BoundTally* VerificationLedger::tally(BoundId id) const {
  for (const auto& t : tallies) {
    if (t.bound == id) return &t;
  }
  return nullptr;
}

void VerificationLedger::merge(const VerificationLedger& other) {
  graphs += other.graphs;
  for (const auto& o : other.tallies) {
    auto it = std::find_if(tallies.begin(), tallies.end(),
                           [&](const BoundTally& t) { return t.bound == o.bound; });
    if (it == tallies.end()) {
      tallies.push_back(o);
      continue;
    }
    BoundTally& t = *it;
    t.checked += o.checked;
    t.hypothesis_met += o.hypothesis_met;
    t.gated_out += o.gated_out;
    t.tight += o.tight;
    t.violations += o.violations;
    t.quarantined += o.quarantined;
    t.record_failures += o.record_failures;
    t.iff_mismatches += o.iff_mismatches;
    if (o.min_slack) t.min_slack = t.min_slack ? std::min(*t.min_slack, *o.min_slack) : o.min_slack;
    merge_list(t.tight_witnesses, o.tight_witnesses);
    merge_list(t.violation_witnesses, o.violation_witnesses);
    merge_list(t.quarantined_witnesses, o.quarantined_witnesses);
    merge_list(t.record_failure_witnesses, o.record_failure_witnesses);
    merge_list(t.iff_mismatch_witnesses, o.iff_mismatch_witnesses);
    t.seconds += o.seconds;
  }
  std::sort(tallies.begin(), tallies.end(),
            [](const BoundTally& a, const BoundTally& b) { return a.bound < b.bound; });
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
}

VerificationLedger run_sweep(const SweepConfig& cfg) {
  check_order(cfg.n_max);
  if (cfg.n_min < 1 || cfg.n_min > cfg.n_max) {
    throw ParameterError("n_min must lie in 1..n_max");
  }
  if (cfg.workers < 1) throw ParameterError("worker count must be positive");
  for (BoundId id : cfg.bounds) {
    if (uses_total_graph(id) && cfg.n_max > kMaxTotalSweepOrder) {
      throw CapacityError(std::string(bound_name(id)) + " needs n_max <= " +
                          std::to_string(kMaxTotalSweepOrder));
    }
  }
  std::vector<BoundId> bounds = cfg.bounds;
  std::sort(bounds.begin(), bounds.end());
  bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());
  SweepConfig sorted = cfg;
  sorted.bounds = bounds;

  std::set<std::pair<int, std::string>> quarantine;
  for (const auto& q : cfg.quarantine) quarantine.insert({static_cast<int>(q.bound), q.graph6});

  std::vector<std::vector<std::uint64_t>> dedup_lists;
  std::vector<WorkItem> items;
  if (!bounds.empty()) {
    if (cfg.dedup) {
      dedup_lists.reserve(cfg.n_max - cfg.n_min + 1);
      for (int n = cfg.n_min; n <= cfg.n_max; ++n) dedup_lists.push_back(dedup_masks(n, cfg.connected_only));
    }
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
      const std::vector<std::uint64_t>* list = cfg.dedup ? &dedup_lists[n - cfg.n_min] : nullptr;
      const std::uint64_t count = list ? list->size() : labeled_graph_count(n);
      for (std::uint64_t b = 0; b < count; b += kChunkSize) {
        items.push_back({n, b, std::min(count, b + kChunkSize), list});
      }
    }
  }

  std::atomic<std::size_t> next{0};
  std::vector<SweepWorker> workers;
  const int worker_count = std::max(1, std::min<int>(cfg.workers, static_cast<int>(items.size())));
  workers.reserve(worker_count);
  for (int w = 0; w < worker_count; ++w) workers.emplace_back(sorted, quarantine);
  std::vector<std::exception_ptr> errors(worker_count);
  auto drain = [&](int w) {
    try {
      for (std::size_t i = next++; i < items.size(); i = next++) workers[w].run(items[i]);
    } catch (...) {
      errors[w] = std::current_exception();
      next = items.size();
    }
  };
  if (worker_count == 1) {
    drain(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < worker_count; ++w) threads.emplace_back(drain, w);
    for (auto& t : threads) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  VerificationLedger ledger = std::move(workers[0].ledger());
  for (int w = 1; w < worker_count; ++w) ledger.merge(workers[w].ledger());
  for (auto& t : ledger.tallies) {
    compact(t.tight_witnesses);
    compact(t.violation_witnesses);
    compact(t.quarantined_witnesses);
    compact(t.record_failure_witnesses);
    compact(t.iff_mismatch_witnesses);
  }
  std::sort(ledger.rows.begin(), ledger.rows.end(), [](const ReportRow& a, const ReportRow& b) {
    return std::tie(a.n, a.graph6, a.bound, a.param) < std::tie(b.n, b.graph6, b.bound, b.param);
  });
  ledger.n_min = cfg.n_min;
  ledger.n_max = cfg.n_max;
  ledger.connected_only = cfg.connected_only;
  ledger.dedup = cfg.dedup;
  return ledger;
}

void write_ledger_json(const VerificationLedger& ledger, std::ostream& out) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema_version"] = kLedgerSchemaVersion;
  j["config"] = {{"n_min", ledger.n_min},
                 {"n_max", ledger.n_max},
                 {"connected_only", ledger.connected_only},
                 {"dedup", ledger.dedup}};
  j["graphs"] = ledger.graphs;
  ordered_json skipped = ordered_json::array();
  for (BoundId id : ledger.skipped) skipped.push_back(bound_name(id));
  j["skipped_bounds"] = skipped;
  j["total_violations"] = ledger.total_violations();
  j["status"] = ledger.failed() ? "fail" : "pass";
  ordered_json bounds = ordered_json::array();
  for (const auto& t : ledger.tallies) {
    ordered_json b;
    b["bound"] = bound_name(t.bound);
    b["checked"] = t.checked;
    b["hypothesis_met"] = t.hypothesis_met;
    b["gated_out"] = t.gated_out;
    b["tight"] = t.tight;
    b["violations"] = t.violations;
    b["quarantined"] = t.quarantined;
    b["record_failures"] = t.record_failures;
    b["iff_mismatches"] = t.iff_mismatches;
    b["min_slack"] = number_or_null(t.min_slack);
    b["witnesses"] = {{"tight", t.tight_witnesses},
                      {"violations", t.violation_witnesses},
                      {"quarantined", t.quarantined_witnesses},
                      {"record_failures", t.record_failure_witnesses},
                      {"iff_mismatches", t.iff_mismatch_witnesses}};
    bounds.push_back(std::move(b));
  }
  j["bounds"] = std::move(bounds);
  out << j.dump(2) << '\n';
}

void write_ledger_text(const VerificationLedger& ledger, std::ostream& out, bool timing) {
  out << "graphs " << ledger.graphs << " (n " << ledger.n_min << ".." << ledger.n_max
      << (ledger.connected_only ? ", connected" : "") << (ledger.dedup ? ", dedup" : "") << ")\n";
  for (BoundId id : ledger.skipped) {
    out << "skipped " << bound_name(id) << " (total graph above n=" << kMaxTotalSweepOrder << ")\n";
  }
  std::size_t width = 5;
  for (const auto& t : ledger.tallies) width = std::max(width, bound_name(t.bound).size());
  const char* columns[] = {"checked", "hyp", "gated", "tight", "viol", "quar", "record", "iff"};
  out << std::left << std::setw(static_cast<int>(width)) << "bound" << std::right;
  for (const char* c : columns) out << std::setw(10) << c;
  out << std::setw(18) << "min_slack";
  if (timing) out << std::setw(12) << "seconds";
  out << '\n';
  for (const auto& t : ledger.tallies) {
    out << std::left << std::setw(static_cast<int>(width)) << bound_name(t.bound) << std::right;
    for (std::uint64_t v : {t.checked, t.hypothesis_met, t.gated_out, t.tight, t.violations,
                            t.quarantined, t.record_failures, t.iff_mismatches}) {
      out << std::setw(10) << v;
    }
    out << std::setw(18) << (t.min_slack ? format_number(*t.min_slack) : "-");
    if (timing) out << std::setw(12) << format_number(t.seconds);
    out << '\n';
  }
  for (const auto& t : ledger.tallies) {
    for (const auto& w : t.violation_witnesses) out << "VIOLATION " << bound_name(t.bound) << ' ' << w << '\n';
  }
  out << (ledger.failed() ? "FAIL" : "PASS") << ": " << ledger.total_violations() << " violation(s)\n";
}

void write_ledger_csv(const VerificationLedger& ledger, std::ostream& out) {
  out << "n,graph6,bound,param,hypothesis_met,bound_value,actual_value,slack,tight,violation\n";
  for (const auto& r : ledger.rows) {
    out << r.n << ',' << r.graph6 << ',' << bound_name(r.bound) << ',' << r.param << ','
        << r.hypothesis_met << ',' << format_number(r.bound_value) << ','
        << format_number(r.actual_value) << ',' << format_number(r.slack) << ',' << r.tight << ','
        << r.violation << '\n';
  }
}

std::optional<OracleSuite> parse_oracle_suite(std::string_view name) {
  if (name == "join") return OracleSuite::kJoin;
  if (name == "total") return OracleSuite::kTotal;
  if (name == "all") return OracleSuite::kAll;
  return std::nullopt;
}

bool OracleReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const OracleCheck& c) { return c.passed; });
}

namespace {

void observe(OracleCheck& c, double deviation, const std::string& where) {
  ++c.cases;
  if (std::isnan(deviation)) deviation = INFINITY;
  if (c.worst_case.empty() || deviation > c.max_deviation) {
    c.max_deviation = deviation;
    c.worst_case = where;
  }
}

double spectrum_deviation(const Spectrum& a, const Spectrum& b) {
  if (a.size() != b.size()) return INFINITY;
  return max_abs_deviation(a, b);
}

}  // namespace

OracleReport oracle_crosscheck(OracleSuite suite, const OracleFormulas& formulas,
                               const OracleLimits& limits, double tolerance) {
  OracleReport report;
  report.tolerance = tolerance;
  if (suite != OracleSuite::kTotal) {
    OracleCheck spectrum;
    spectrum.name = "join_family_line_spectrum";
    OracleCheck spread;
    spread.name = "join_family_line_spread";
    for (int n = 3; n <= limits.join_limit; ++n) {
      for (int k = 1; k <= n - 2; ++k) {
        for (int i = 1; i <= n - k - 1; ++i) {
          const int m = join_family_edge_count(n, k, i);
          if (n + m > limits.join_limit || m < n) continue;
          const std::string where = "(n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                                    ", i=" + std::to_string(i) + ")";
          const Spectrum eig = adjacency_spectrum(line_graph(join_family(n, k, i)).graph);
          observe(spectrum, spectrum_deviation(formulas.join_spectrum(n, k, i), eig), where);
          if (m > n) observe(spread, std::abs(formulas.join_spread(n, k, i) - eig.spread()), where);
        }
      }
    }
    report.checks.push_back(std::move(spectrum));
    report.checks.push_back(std::move(spread));
  }
  if (suite != OracleSuite::kJoin) {
    auto spread_formula = formulas.regular_total_spread;
    if (!spread_formula) {
      spread_formula = [](double s, double lambda_n, int r) {
        return (2.0 * s + r + 2.0 + total_radical(lambda_n, r)) / 2.0;
      };
    }
    OracleCheck spectrum;
    spectrum.name = "regular_total_spectrum";
    OracleCheck spread;
    spread.name = "regular_total_spread";
    OracleCheck bracket;
    bracket.name = "regular_total_bracket";
    OracleCheck min_eig;
    min_eig.name = "regular_total_min_eig";
    for (int n = 3; n <= limits.regular_max_order; ++n) {
      for (int r = 2; r < n; ++r) {
        for (const Graph& g : enumerate_regular_graphs(n, r, true)) {
          const std::string where = to_graph6(g) + " (n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")";
          const Spectrum a = adjacency_spectrum(g);
          const Spectrum total = adjacency_spectrum(total_graph(g));
          observe(spectrum, spectrum_deviation(formulas.regular_total(a, r), total), where);
          const double lambda_n = a.smallest();
          observe(spread, std::abs(spread_formula(a.spread(), lambda_n, r) - total.spread()), where);
          const double root = total_radical(lambda_n, r);
          const double lower = (2.0 * a.spread() + lambda_n + 2.0 + root) / 2.0;
          const double upper = a.spread() + root - lambda_n;
          observe(bracket, std::max({0.0, lower - total.spread(), total.spread() - upper}), where);
          if (r >= 3) {
            const double value = (2.0 * lambda_n + r - 2.0 - root) / 2.0;
            const double excess = std::max(0.0, value + 2.0);
            observe(min_eig, std::max(std::abs(value - total.smallest()), excess), where);
          }
        }
      }
    }
    report.checks.push_back(std::move(spectrum));
    report.checks.push_back(std::move(spread));
    report.checks.push_back(std::move(bracket));
    report.checks.push_back(std::move(min_eig));
  }
  for (auto& c : report.checks) c.passed = c.max_deviation <= tolerance;
  return report;
}

}  // namespace spreadlab
