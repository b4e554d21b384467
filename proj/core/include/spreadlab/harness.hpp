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

#ifndef SPREADLAB_HARNESS_HPP_
#define SPREADLAB_HARNESS_HPP_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "spreadlab/analysis.hpp"
#include "spreadlab/bounds.hpp"
#include "spreadlab/graph.hpp"
#include "spreadlab/spectra.hpp"

namespace spreadlab {

inline constexpr int kMaxSweepOrder = 8;
inline constexpr int kMaxTotalSweepOrder = 6;
// Witness lists keep the lexicographically smallest entries.
inline constexpr std::size_t kWitnessCap = 1000;
inline constexpr int kLedgerSchemaVersion = 1;

// 2^(n(n-1)/2).
std::uint64_t labeled_graph_count(int n);

// Every labeled simple graph on n vertices, in upper-mask order. With dedup,
// graphs sharing a sorted degree sequence and rounded adjacency spectrum with
// an earlier graph are dropped (a best-effort isomorphism filter).
// Throws CapacityError unless 1 <= n <= kMaxSweepOrder.
std::vector<Graph> enumerate_graphs(int n, bool connected_only, bool dedup);
void for_each_graph(int n, bool connected_only, const std::function<void(const Graph&)>& visit);

// Labeled r-regular graphs on n vertices by backtracking over vertex pairs.
std::vector<Graph> enumerate_regular_graphs(int n, int r, bool connected_only);

// Evaluates one check on one graph. Parameterized checks produce several
// reports (connectivity: one per k; edge addition: one per non-edge); the
// param strings label them.
struct EvaluatedReport {
  BoundReport report;
  std::string param;
};
std::vector<EvaluatedReport> evaluate_bound(BoundId id, Analysis& a);

struct QuarantineEntry {
  BoundId bound = BoundId::kGregoryUpper;
  std::string graph6;
  std::string note;
};

// Lines "bound_id<TAB>graph6<TAB>note"; blank lines and '#' comments skipped.
// Throws ParseError naming the line on malformed input.
std::vector<QuarantineEntry> parse_quarantine(std::istream& in);
std::vector<QuarantineEntry> load_quarantine(const std::string& path);

struct SweepConfig {
  int n_min = 1;
  int n_max = 5;
  bool connected_only = true;
  std::vector<BoundId> bounds;
  // Violation threshold for upper and lower bounds.
  double slack_tolerance = kSlackTolerance;
  bool dedup = false;
  int workers = 1;
  std::vector<QuarantineEntry> quarantine;
  // Keep one row per report for CSV output.
  bool collect_rows = false;
};

// Resolves "all" (or an explicit list) against the order limits: when
// n_max > kMaxTotalSweepOrder the total-graph checks are dropped from "all"
// and rejected with CapacityError if named explicitly.
std::vector<BoundId> resolve_bounds(const std::vector<std::string>& names, int n_max,
                                    std::vector<BoundId>* skipped = nullptr);

struct BoundTally {
  BoundId bound = BoundId::kGregoryUpper;
  std::uint64_t checked = 0;
  std::uint64_t hypothesis_met = 0;
  std::uint64_t gated_out = 0;
  std::uint64_t tight = 0;
  std::uint64_t violations = 0;
  std::uint64_t quarantined = 0;
  // Record-only checks whose inequality failed.
  std::uint64_t record_failures = 0;
  std::uint64_t iff_mismatches = 0;
  std::optional<double> min_slack;
  std::vector<std::string> tight_witnesses;
  std::vector<std::string> violation_witnesses;
  std::vector<std::string> quarantined_witnesses;
  std::vector<std::string> record_failure_witnesses;
  std::vector<std::string> iff_mismatch_witnesses;
  // Excluded from serialized ledgers.
  double seconds = 0.0;
};

struct ReportRow {
  int n = 0;
  std::string graph6;
  BoundId bound = BoundId::kGregoryUpper;
  std::string param;
  bool hypothesis_met = false;
  double bound_value = 0.0;
  double actual_value = 0.0;
  double slack = 0.0;
  bool tight = false;
  bool violation = false;
};

struct VerificationLedger {
  int n_min = 0;
  int n_max = 0;
  bool connected_only = true;
  bool dedup = false;
  std::uint64_t graphs = 0;
  std::vector<BoundTally> tallies;
  std::vector<BoundId> skipped;
  std::vector<ReportRow> rows;

  std::uint64_t total_violations() const;
  bool failed() const { return total_violations() > 0; }
  const BoundTally* tally(BoundId id) const;
  // Commutative, associative: counts add, witness lists union in sorted order.
  void merge(const VerificationLedger& other);
};

// Throws CapacityError / ParameterError for out-of-range configurations.
VerificationLedger run_sweep(const SweepConfig& cfg);

void write_ledger_json(const VerificationLedger& ledger, std::ostream& out);
void write_ledger_text(const VerificationLedger& ledger, std::ostream& out, bool timing);
void write_ledger_csv(const VerificationLedger& ledger, std::ostream& out);

enum class OracleSuite { kJoin, kTotal, kAll };
std::optional<OracleSuite> parse_oracle_suite(std::string_view name);

// The closed forms under test. Replaceable so that a corrupted formula can
// be shown to fail.
struct OracleFormulas {
  std::function<Spectrum(int, int, int)> join_spectrum = join_family_line_spectrum;
  std::function<double(int, int, int)> join_spread = join_family_line_spread;
  std::function<Spectrum(const Spectrum&, int)> regular_total =
      static_cast<Spectrum (*)(const Spectrum&, int)>(regular_total_spectrum);
  // (spread S(G), λ_n, r) -> S(𝒯(G))
  std::function<double(double, double, int)> regular_total_spread;
};

struct OracleCheck {
  std::string name;
  std::uint64_t cases = 0;
  double max_deviation = 0.0;
  std::string worst_case;
  bool passed = true;
};

struct OracleReport {
  double tolerance = 1e-6;
  std::vector<OracleCheck> checks;
  bool passed() const;
};

// Join family: every valid (n, k, i) with n + m <= join_limit. Total: every
// connected regular graph with n <= regular_max_order and r >= 2.
struct OracleLimits {
  int join_limit = 60;
  int regular_max_order = 8;
};

OracleReport oracle_crosscheck(OracleSuite suite, const OracleFormulas& formulas = {},
                               const OracleLimits& limits = {}, double tolerance = 1e-6);

}  // namespace spreadlab

#endif  // SPREADLAB_HARNESS_HPP_
