#pragma once

#include "zagreb/graph.hpp"

namespace zagreb {

/// Closed-form predictions for the counterexample family C(a,b): an
/// (a+1)-vertex star with b triangles chained off one leaf.
struct FamilySpec {
  long long a = 0;
  long long b = 0;
  long long predicted_n = 0;       // a + 3b + 1
  long long predicted_m = 0;       // a + 4b
  long long predicted_m1 = 0;      // a^2 + a + 22b - 2
  long long predicted_m2 = 0;      // a^2 + a + 30b - 8
  long long predicted_cycles = 0;  // b

  static FamilySpec of(long long a, long long b);
};

struct ThresholdResult {
  long long b = 0;
  long long discriminant = 0;  // 8b^3 + 97b^2 - 158b + 57
  long long a_min = 0;         // smallest a >= 3 whose C(a,b) violates the comparison
};

/// M2*n - M1*m for C(a,b), reduced to the closed-form quadratic
/// a^2(1-b) + a(7b-5) + (2b^2 + 14b - 8). Negative means C(a,b) fails.
long long family_margin(long long a, long long b);

/// Builds C(a,b) with the canonical labeling: star center 0, leaves 1..a,
/// then per triangle i the vertices (v_i, u_i, w_i); v_1 attaches to leaf 1,
/// u_i connects to v_{i+1}. Requires a >= 3, b >= 1.
Graph make_counterexample_family(long long a, long long b);

/// Smallest a >= 3 with family_margin(a, b) < 0, found by an exact integer
/// sign scan. Requires b >= 2: for b = 1 the quadratic degenerates to
/// 2a + 8, which is never negative, so there is no threshold to report.
ThresholdResult threshold_a(long long b);

/// Subdivision: one new degree-2 vertex on each edge. The edge with canonical
/// index e becomes vertex n + e. An edgeless graph maps to itself.
Graph subdivide(const Graph& g);

enum class NamedFamily { star, cycle, path, complete };

/// Standard constructions; `size` is the vertex count. Minimums: star 2,
/// cycle 3, path 1, complete 1.
Graph make_named(NamedFamily family, long long size);

/// The disconnected counterexample: a six-vertex star plus a triangle.
Graph make_disconnected_counterexample();

}  // namespace zagreb
