#include "zagreb/families.hpp"

#include <string>

#include "zagreb/numeric.hpp"

namespace zagreb {

FamilySpec FamilySpec::of(long long a, long long b) {
  FamilySpec s;
  s.a = a;
  s.b = b;
  s.predicted_n = a + 3 * b + 1;
  s.predicted_m = a + 4 * b;
  s.predicted_m1 = wide_to_int64(static_cast<Wide>(a) * a + a + 22 * static_cast<Wide>(b) - 2, "predicted M1");
  s.predicted_m2 = wide_to_int64(static_cast<Wide>(a) * a + a + 30 * static_cast<Wide>(b) - 8, "predicted M2");
  s.predicted_cycles = b;
  return s;
}

long long family_margin(long long a, long long b) {
  Wide value = static_cast<Wide>(a) * a * (1 - b) + static_cast<Wide>(a) * (7 * b - 5) +
               (2 * static_cast<Wide>(b) * b + 14 * b - 8);
  return wide_to_int64(value, "family margin");
}

Graph make_counterexample_family(long long a, long long b) {
  if (a < 3 || b < 1)
    fail(errc::parameter_out_of_range,
         "C(a,b) needs a >= 3 and b >= 1, got a = " + std::to_string(a) + ", b = " + std::to_string(b));
  if (a + 3 * b + 1 > 100'000'000)
    fail(errc::too_large, "C(a,b) with " + std::to_string(a + 3 * b + 1) + " vertices");

  const int n = static_cast<int>(a + 3 * b + 1);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(a + 4 * b));
  for (int leaf = 1; leaf <= a; ++leaf) edges.emplace_back(0, leaf);

  auto v_of = [&](long long i) { return static_cast<int>(a + 3 * (i - 1) + 1); };
  auto u_of = [&](long long i) { return static_cast<int>(a + 3 * (i - 1) + 2); };
  auto w_of = [&](long long i) { return static_cast<int>(a + 3 * (i - 1) + 3); };

  edges.emplace_back(1, v_of(1));
  for (long long i = 1; i <= b; ++i) {
    edges.emplace_back(v_of(i), u_of(i));
    edges.emplace_back(v_of(i), w_of(i));
    edges.emplace_back(u_of(i), w_of(i));
    if (i < b) edges.emplace_back(u_of(i), v_of(i + 1));
  }
  return Graph::from_edges(n, edges);
}

ThresholdResult threshold_a(long long b) {
  if (b < 2)
    fail(errc::parameter_out_of_range, "threshold needs b >= 2, got b = " + std::to_string(b));

  ThresholdResult r;
  r.b = b;
  Wide d = 8 * static_cast<Wide>(b) * b * b + 97 * static_cast<Wide>(b) * b - 158 * static_cast<Wide>(b) + 57;
  r.discriminant = wide_to_int64(d, "discriminant");

  // Leading coefficient 1 - b < 0, so the quadratic eventually goes negative;
  // scan with exact arithmetic instead of rounding the root formula.
  for (long long a = 3;; ++a) {
    if (family_margin(a, b) < 0) {
      r.a_min = a;
      return r;
    }
  }
}

Graph subdivide(const Graph& g) {
  const int n = g.vertex_count();
  const long long m = g.edge_count();
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(2 * m));
  for (long long e = 0; e < m; ++e) {
    const Edge& edge = g.edges()[static_cast<size_t>(e)];
    const int mid = n + static_cast<int>(e);
    edges.emplace_back(edge.u, mid);
    edges.emplace_back(mid, edge.v);
  }
  return Graph::from_edges(n + static_cast<int>(m), edges);
}

Graph make_named(NamedFamily family, long long size) {
  if (size > 100'000'000) fail(errc::too_large, "family with " + std::to_string(size) + " vertices");
  std::vector<std::pair<int, int>> edges;
  const int n = static_cast<int>(size);
  switch (family) {
    case NamedFamily::star:
      if (size < 2) fail(errc::parameter_out_of_range, "star needs size >= 2, got " + std::to_string(size));
      for (int leaf = 1; leaf < n; ++leaf) edges.emplace_back(0, leaf);
      break;
    case NamedFamily::cycle:
      if (size < 3) fail(errc::parameter_out_of_range, "cycle needs size >= 3, got " + std::to_string(size));
      for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
      break;
    case NamedFamily::path:
      if (size < 1) fail(errc::parameter_out_of_range, "path needs size >= 1, got " + std::to_string(size));
      for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      break;
    case NamedFamily::complete:
      if (size < 1) fail(errc::parameter_out_of_range, "complete graph needs size >= 1, got " + std::to_string(size));
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      break;
  }
  return Graph::from_edges(n, edges);
}

Graph make_disconnected_counterexample() {
  return disjoint_union(make_named(NamedFamily::star, 6), make_named(NamedFamily::cycle, 3));
}

}  // namespace zagreb
