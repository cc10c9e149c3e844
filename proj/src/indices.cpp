#include "zagreb/indices.hpp"

#include <cmath>

namespace zagreb {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds_strict: return "holds_strict";
    case Verdict::holds_with_equality: return "holds_with_equality";
    case Verdict::fails: return "fails";
  }
  return "unknown";
}

long long first_zagreb(const Graph& g) {
  Wide sum = 0;
  for (int d : g.degrees()) sum += static_cast<Wide>(d) * d;
  return wide_to_int64(sum, "M1");
}

long long second_zagreb(const Graph& g) {
  Wide sum = 0;
  for (const Edge& e : g.edges()) sum += static_cast<Wide>(g.degree(e.u)) * g.degree(e.v);
  return wide_to_int64(sum, "M2");
}

IndexReport compare_indices(const Graph& g) {
  IndexReport r;
  r.n = g.vertex_count();
  r.m = g.edge_count();
  if (r.n == 0 || r.m == 0)
    fail(errc::empty_graph, "comparison needs n >= 1 and m >= 1, got n = " + std::to_string(r.n) +
                                ", m = " + std::to_string(r.m));
  r.m1 = first_zagreb(g);
  r.m2 = second_zagreb(g);
  r.comparison = static_cast<Wide>(r.m2) * r.n - static_cast<Wide>(r.m1) * r.m;
  r.verdict = r.comparison < 0    ? Verdict::fails
              : r.comparison == 0 ? Verdict::holds_with_equality
                                  : Verdict::holds_strict;
  return r;
}

namespace {

void require_degrees_positive_for(const Graph& g, double lambda) {
  if (lambda < 0.0 && g.vertex_count() > 0 && g.min_degree() == 0)
    fail(errc::isolated_vertex_with_negative_lambda,
         "lambda = " + std::to_string(lambda) + " with an isolated vertex");
}

}  // namespace

VariableIndexValue variable_first_zagreb(const Graph& g, double lambda) {
  require_degrees_positive_for(g, lambda);
  double sum = 0.0;
  for (int d : g.degrees()) sum += std::pow(static_cast<double>(d), 2.0 * lambda);
  return {lambda, sum};
}

VariableIndexValue variable_second_zagreb(const Graph& g, double lambda) {
  require_degrees_positive_for(g, lambda);
  double sum = 0.0;
  for (const Edge& e : g.edges())
    sum += std::pow(static_cast<double>(g.degree(e.u)) * g.degree(e.v), lambda);
  return {lambda, sum};
}

}  // namespace zagreb
