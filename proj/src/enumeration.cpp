#include "zagreb/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <string_view>
#include <thread>

#include "zagreb/bounds.hpp"
#include "zagreb/families.hpp"
#include "zagreb/graph_io.hpp"
#include "zagreb/indices.hpp"

namespace zagreb {
namespace {

constexpr int kMaxExhaustiveN = 8;

std::vector<std::pair<int, int>> edge_slots(int n) {
  std::vector<std::pair<int, int>> slots;
  slots.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  return slots;
}

Graph graph_from_mask(int n, const std::vector<std::pair<int, int>>& slots, uint64_t mask,
                      std::vector<std::pair<int, int>>& scratch) {
  scratch.clear();
  for (uint64_t bits = mask; bits != 0; bits &= bits - 1) {
    scratch.push_back(slots[static_cast<size_t>(std::countr_zero(bits))]);
  }
  return Graph::from_edges(n, scratch);
}

bool has_check(const ScanConfig& config, std::string_view name) {
  return std::find(config.checks.begin(), config.checks.end(), name) != config.checks.end();
}

struct CheckToggles {
  bool conjecture = false;
  bool m1_lower = false;
  bool m2_lower = false;
  bool common_upper = false;
  bool das_upper = false;
};

CheckToggles resolve_checks(const ScanConfig& config) {
  static const std::vector<std::string> known = ScanConfig::default_checks();
  for (const std::string& name : config.checks)
    if (std::find(known.begin(), known.end(), name) == known.end())
      fail(errc::parameter_out_of_range, "unknown check \"" + name + "\"");
  return {has_check(config, "conjecture"), has_check(config, "m1_lower"),
          has_check(config, "m2_lower"), has_check(config, "common_upper"),
          has_check(config, "das_upper")};
}

bool passes_filter(const ScanConfig& config, const GraphClass& cls) {
  if (config.connected_only && !cls.connected) return false;
  switch (config.class_filter) {
    case ClassFilter::none: return true;
    case ClassFilter::tree: return cls.is_tree;
    case ClassFilter::unicyclic: return cls.is_unicyclic;
    case ClassFilter::chemical: return cls.is_chemical;
    case ClassFilter::k_cyclic: return cls.cycle_rank == config.cycle_rank;
  }
  return false;
}

void record_bound(ScanReport& report, const std::string& key, bool satisfied, bool tight,
                  bool condition) {
  if (!satisfied) ++report.bound_violations[key];
  if (tight != condition) ++report.tightness_mismatches[key];
}

void process_graph(const Graph& g, const ScanConfig& config, const CheckToggles& toggles,
                   ScanReport& report) {
  const GraphClass cls = classify(g);
  if (!passes_filter(config, cls)) return;
  if (g.edge_count() == 0) {
    ++report.skipped_edgeless;
    return;
  }
  ++report.total_scanned;
  if (cls.is_tree) ++report.class_counts["tree"];
  if (cls.is_unicyclic) ++report.class_counts["unicyclic"];
  if (cls.is_chemical) ++report.class_counts["chemical"];
  if (cls.connected) ++report.class_counts["connected"];
  ++report.class_counts["cyclic_" + std::to_string(cls.cycle_rank)];

  if (toggles.conjecture) {
    const IndexReport r = compare_indices(g);
    switch (r.verdict) {
      case Verdict::holds_strict: ++report.holds_strict; break;
      case Verdict::holds_with_equality:
        ++report.holds_with_equality;
        ++report.equality_total;
        if (static_cast<long long>(report.equality.size()) < config.list_cap)
          report.equality.push_back(edge_list_line(g));
        break;
      case Verdict::fails:
        ++report.fails;
        ++report.failing_total;
        if (cls.connected && cls.is_chemical) ++report.failing_chemical_connected;
        if (static_cast<long long>(report.failing.size()) < config.list_cap)
          report.failing.push_back(edge_list_line(g));
        break;
    }
  }
  if (toggles.m1_lower) {
    const BoundCheck c = check_m1_lower(g);
    record_bound(report, c.name, c.satisfied, c.tight, c.equality_condition_met);
  }
  if (toggles.m2_lower) {
    const BoundCheck c = check_m2_lower(g);
    record_bound(report, c.name, c.satisfied, c.tight, c.equality_condition_met);
  }
  if (toggles.common_upper) {
    const auto [first, second] = check_common_upper(g);
    // The paper's condition is simultaneous equality, so the pair is judged
    // as one check.
    record_bound(report, "common_upper", first.satisfied && second.satisfied,
                 first.tight && second.tight, first.equality_condition_met);
  }
  if (toggles.das_upper) {
    const BoundCheck c = check_das_upper(g);
    record_bound(report, c.name, c.satisfied, c.tight, c.equality_condition_met);
  }
}

void merge_into(ScanReport& total, ScanReport&& part, long long list_cap) {
  total.total_scanned += part.total_scanned;
  total.skipped_edgeless += part.skipped_edgeless;
  for (const auto& [key, count] : part.class_counts) total.class_counts[key] += count;
  total.holds_strict += part.holds_strict;
  total.holds_with_equality += part.holds_with_equality;
  total.fails += part.fails;
  total.failing_total += part.failing_total;
  total.equality_total += part.equality_total;
  total.failing_chemical_connected += part.failing_chemical_connected;
  for (std::string& line : part.failing)
    if (static_cast<long long>(total.failing.size()) < list_cap)
      total.failing.push_back(std::move(line));
  for (std::string& line : part.equality)
    if (static_cast<long long>(total.equality.size()) < list_cap)
      total.equality.push_back(std::move(line));
  for (const auto& [key, count] : part.bound_violations) total.bound_violations[key] += count;
  for (const auto& [key, count] : part.tightness_mismatches)
    total.tightness_mismatches[key] += count;
}

void scan_mask_range(int n, const std::vector<std::pair<int, int>>& slots, uint64_t begin,
                     uint64_t end, const ScanConfig& config, const CheckToggles& toggles,
                     ScanReport& report) {
  std::vector<std::pair<int, int>> scratch;
  for (uint64_t mask = begin; mask < end; ++mask)
    process_graph(graph_from_mask(n, slots, mask, scratch), config, toggles, report);
}

// Next bitmask with the same popcount (Gosper); returns 0 past the range top.
uint64_t next_same_popcount(uint64_t x) {
  const uint64_t low = x & (~x + 1);
  const uint64_t ripple = x + low;
  if (ripple == 0) return 0;
  return ripple | (((x ^ ripple) >> 2) / low);
}

}  // namespace

std::vector<std::string> ScanConfig::default_checks() {
  return {"conjecture", "m1_lower", "m2_lower", "common_upper", "das_upper"};
}

void enumerate_labeled(int n, bool connected_only, const std::function<void(const Graph&)>& fn) {
  if (n < 1) fail(errc::parameter_out_of_range, "enumeration needs n >= 1, got " + std::to_string(n));
  if (n > kMaxExhaustiveN)
    fail(errc::n_too_large, "labeled enumeration capped at n = 8, got " + std::to_string(n));
  const auto slots = edge_slots(n);
  const uint64_t total = uint64_t{1} << slots.size();
  std::vector<std::pair<int, int>> scratch;
  for (uint64_t mask = 0; mask < total; ++mask) {
    Graph g = graph_from_mask(n, slots, mask, scratch);
    if (connected_only && !classify(g).connected) continue;
    fn(g);
  }
}

ScanReport scan(const ScanConfig& config) {
  if (config.jobs < 1)
    fail(errc::parameter_out_of_range, "jobs must be >= 1, got " + std::to_string(config.jobs));
  const CheckToggles toggles = resolve_checks(config);
  const int jobs = config.jobs;
  ScanReport total;

  auto run_partitioned = [&](uint64_t count, const auto& worker) {
    std::vector<ScanReport> parts(static_cast<size_t>(jobs));
    std::vector<std::thread> threads;
    threads.reserve(static_cast<size_t>(jobs));
    for (int w = 0; w < jobs; ++w) {
      const uint64_t begin = count / jobs * w + std::min<uint64_t>(w, count % jobs);
      const uint64_t end = begin + count / jobs + (static_cast<uint64_t>(w) < count % jobs ? 1 : 0);
      threads.emplace_back([&, w, begin, end] { worker(begin, end, parts[static_cast<size_t>(w)]); });
    }
    for (std::thread& t : threads) t.join();
    for (ScanReport& part : parts) merge_into(total, std::move(part), config.list_cap);
  };

  if (config.corpus_path) {
    std::ifstream in(*config.corpus_path);
    if (!in) fail(errc::io_error, "cannot open corpus " + *config.corpus_path);
    std::vector<Graph> graphs;
    for_each_graph6_line(in, [&](const Graph& g, long long) { graphs.push_back(g); });
    run_partitioned(graphs.size(), [&](uint64_t begin, uint64_t end, ScanReport& part) {
      for (uint64_t i = begin; i < end; ++i) process_graph(graphs[i], config, toggles, part);
    });
    return total;
  }

  if (config.n_max < 1 || config.n_max > kMaxExhaustiveN)
    fail(errc::n_too_large, "exhaustive scan needs 1 <= n_max <= 8, got " + std::to_string(config.n_max));
  for (int n = 1; n <= config.n_max; ++n) {
    const auto slots = edge_slots(n);
    run_partitioned(uint64_t{1} << slots.size(),
                    [&](uint64_t begin, uint64_t end, ScanReport& part) {
                      scan_mask_range(n, slots, begin, end, config, toggles, part);
                    });
  }
  return total;
}

std::optional<Graph> find_min_counterexample(long long cycle_rank, int n_cap) {
  if (cycle_rank < 0)
    fail(errc::parameter_out_of_range, "cycle rank must be >= 0, got " + std::to_string(cycle_rank));

  for (int n = 1; n <= std::min(n_cap, kMaxExhaustiveN); ++n) {
    // Connected with m = n - 1 + rank edges is exactly cycle rank `rank`.
    const long long m = n - 1 + cycle_rank;
    const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    if (m < 1 || m > max_edges) continue;
    const auto slots = edge_slots(n);
    std::vector<std::pair<int, int>> scratch;
    const uint64_t top = uint64_t{1} << slots.size();
    for (uint64_t mask = (uint64_t{1} << m) - 1; mask != 0 && mask < top;
         mask = next_same_popcount(mask)) {
      Graph g = graph_from_mask(n, slots, mask, scratch);
      if (!classify(g).connected) continue;
      if (compare_indices(g).verdict == Verdict::fails) return g;
    }
  }

  if (cycle_rank >= 2) {
    const ThresholdResult t = threshold_a(cycle_rank);
    Graph g = make_counterexample_family(t.a_min, cycle_rank);
    if (g.vertex_count() <= n_cap) return g;
  }
  return std::nullopt;
}

}  // namespace zagreb
