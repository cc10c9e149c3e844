#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zagreb/graph.hpp"

namespace zagreb {

enum class ClassFilter { none, tree, unicyclic, chemical, k_cyclic };

struct ScanConfig {
  /// Exhaustive source: all labeled graphs on 1..n_max vertices, 1 <= n_max <= 8.
  int n_max = 7;
  /// Corpus source (graph6, one line per graph); overrides the exhaustive source.
  std::optional<std::string> corpus_path;
  bool connected_only = false;
  ClassFilter class_filter = ClassFilter::none;
  long long cycle_rank = 0;  // used by ClassFilter::k_cyclic
  /// Any of: conjecture, m1_lower, m2_lower, common_upper, das_upper.
  std::vector<std::string> checks = default_checks();
  int jobs = 1;
  long long list_cap = 1000;

  static std::vector<std::string> default_checks();
};

/// Aggregate scan result. Graphs with m = 0 get no verdict (the comparison is
/// undefined) and are counted in skipped_edgeless, so the verdict histogram
/// always sums to total_scanned. Graph lists hold single-line edge lists in
/// stream order, capped at list_cap; the *_total counts stay exact.
struct ScanReport {
  long long total_scanned = 0;
  long long skipped_edgeless = 0;
  std::map<std::string, long long> class_counts;
  long long holds_strict = 0;
  long long holds_with_equality = 0;
  long long fails = 0;
  long long failing_total = 0;
  long long equality_total = 0;
  /// Failures that are connected with max degree <= 4; expected to stay 0.
  long long failing_chemical_connected = 0;
  std::vector<std::string> failing;
  std::vector<std::string> equality;
  std::map<std::string, long long> bound_violations;
  std::map<std::string, long long> tightness_mismatches;

  bool operator==(const ScanReport&) const = default;
};

/// Yields every labeled simple graph on n vertices exactly once, in ascending
/// edge-mask order (bit k of the mask is the k-th pair in row-major upper
/// triangle order). Requires 1 <= n <= 8.
void enumerate_labeled(int n, bool connected_only, const std::function<void(const Graph&)>& fn);

/// Runs the configured checks over the stream. The report is identical for
/// any job count: the mask space is split into contiguous ranges merged in
/// range order.
ScanReport scan(const ScanConfig& config);

/// Smallest-n failing connected graph with the given cycle rank, searching
/// all labeled graphs with n <= min(n_cap, 8) and then the C(a, rank) family
/// ladder. Trees (rank 0) and unicyclic graphs (rank 1) never fail.
std::optional<Graph> find_min_counterexample(long long cycle_rank, int n_cap);

}  // namespace zagreb
