#include "zagreb/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "zagreb/families.hpp"

namespace zagreb {
namespace {

constexpr double kRelTolerance = 1e-9;
constexpr double kAbsFloor = 1e-12;

BoundCheck exact_check(std::string name, Relation rel, Rational lhs, Rational rhs, bool condition) {
  BoundCheck c;
  c.name = std::move(name);
  c.relation = rel;
  auto order = lhs <=> rhs;
  c.satisfied = rel == Relation::greater_equal ? order >= 0 : order <= 0;
  c.tight = order == 0;
  c.equality_condition_met = condition;
  c.lhs = lhs;
  c.rhs = rhs;
  return c;
}

BoundCheck real_check(std::string name, Relation rel, double lhs, double rhs, bool condition) {
  BoundCheck c;
  c.name = std::move(name);
  c.relation = rel;
  const double tol = std::max(kAbsFloor, kRelTolerance * std::max(std::fabs(lhs), std::fabs(rhs)));
  c.satisfied = rel == Relation::greater_equal ? lhs >= rhs - tol : lhs <= rhs + tol;
  c.tight = std::fabs(lhs - rhs) <= tol;
  c.equality_condition_met = condition;
  c.lhs = lhs;
  c.rhs = rhs;
  return c;
}

void require_vertices(const Graph& g) {
  if (g.vertex_count() == 0) fail(errc::empty_graph, "bound needs n >= 1");
}

void require_edges(const Graph& g) {
  if (g.edge_count() == 0) fail(errc::empty_graph, "bound needs m >= 1");
}

}  // namespace

double BoundCheck::lhs_value() const {
  return exact() ? std::get<Rational>(lhs).to_double() : std::get<double>(lhs);
}

double BoundCheck::rhs_value() const {
  return exact() ? std::get<Rational>(rhs).to_double() : std::get<double>(rhs);
}

BoundCheck check_m1_lower(const Graph& g) {
  require_vertices(g);
  const long long n = g.vertex_count();
  const long long m = g.edge_count();
  const long long m1 = first_zagreb(g);
  return exact_check("m1_lower", Relation::greater_equal, Rational::integer(m1),
                     Rational::make(4 * static_cast<Wide>(m) * m, n), classify(g).is_regular);
}

BoundCheck check_m2_lower(const Graph& g) {
  require_vertices(g);
  const long long n = g.vertex_count();
  const long long m = g.edge_count();
  const long long m2 = second_zagreb(g);
  return exact_check("m2_lower", Relation::greater_equal, Rational::integer(m2),
                     Rational::make(4 * static_cast<Wide>(m) * m * m, static_cast<Wide>(n) * n),
                     classify(g).is_regular);
}

std::pair<BoundCheck, BoundCheck> check_common_upper(const Graph& g) {
  require_edges(g);
  const long long n = g.vertex_count();
  const long long m = g.edge_count();
  const long long m1 = first_zagreb(g);
  const long long m2 = second_zagreb(g);
  const long long max_deg = g.max_degree();
  const bool regular = classify(g).is_regular;
  const Rational common = Rational::make(static_cast<Wide>(max_deg) * m1, 2 * static_cast<Wide>(m));
  return {exact_check("m1_upper", Relation::less_equal, Rational::make(m1, n), common, regular),
          exact_check("m2_upper", Relation::less_equal, Rational::make(m2, m), common, regular)};
}

bool is_clique_plus_isolated(const Graph& g) {
  const long long max_deg = g.max_degree();
  if (max_deg < 1) return false;
  long long at_max = 0;
  long long isolated = 0;
  for (int d : g.degrees()) {
    if (d == max_deg) ++at_max;
    else if (d == 0) ++isolated;
  }
  // max_deg-regular on max_deg+1 non-isolated vertices forces the clique.
  return at_max + isolated == g.vertex_count() && at_max == max_deg + 1 &&
         g.edge_count() == max_deg * (max_deg + 1) / 2;
}

BoundCheck check_das_upper(const Graph& g) {
  const long long n = g.vertex_count();
  if (n < 2) fail(errc::too_few_vertices, "bound needs n >= 2, got n = " + std::to_string(n));
  const long long m = g.edge_count();
  const long long max_deg = g.max_degree();
  const long long min_deg = g.min_degree();
  // m * (2m + (n-2)*D + (D-d)*(n-1-D)) / (n-1), kept as one exact rational.
  const Wide scaled = 2 * static_cast<Wide>(m) + (n - 2) * static_cast<Wide>(max_deg) +
                      static_cast<Wide>(max_deg - min_deg) * (n - 1 - max_deg);
  const GraphClass cls = classify(g);
  const bool condition = cls.is_star || cls.is_regular || is_clique_plus_isolated(g);
  return exact_check("das_upper", Relation::less_equal, Rational::integer(first_zagreb(g)),
                     Rational::make(static_cast<Wide>(m) * scaled, n - 1), condition);
}

BoundCheck check_variable_m1_lower(const Graph& g, double lambda) {
  require_vertices(g);
  if (g.min_degree() == 0) fail(errc::isolated_vertex, "variable lower bound needs min degree >= 1");
  if (lambda < 0.5)
    fail(errc::lambda_out_of_range,
         "variable M1 lower bound needs lambda >= 1/2, got " + std::to_string(lambda));
  const double n = static_cast<double>(g.vertex_count());
  const double m = static_cast<double>(g.edge_count());
  const double rhs = n * std::pow(2.0 * m / n, 2.0 * lambda);
  return real_check("var_m1_lower", Relation::greater_equal, variable_first_zagreb(g, lambda).value,
                    rhs, classify(g).is_regular);
}

BoundCheck check_variable_m2_lower(const Graph& g, double lambda) {
  require_vertices(g);
  if (g.min_degree() == 0) fail(errc::isolated_vertex, "variable lower bound needs min degree >= 1");
  if (lambda < 0.0)
    fail(errc::lambda_out_of_range,
         "variable M2 lower bound needs lambda >= 0, got " + std::to_string(lambda));
  const double n = static_cast<double>(g.vertex_count());
  const double m = static_cast<double>(g.edge_count());
  const double rhs = m * std::pow(2.0 * m / n, 2.0 * lambda);
  return real_check("var_m2_lower", Relation::greater_equal, variable_second_zagreb(g, lambda).value,
                    rhs, classify(g).is_regular);
}

std::pair<BoundCheck, BoundCheck> check_variable_lower(const Graph& g, double lambda) {
  return {check_variable_m1_lower(g, lambda), check_variable_m2_lower(g, lambda)};
}

std::pair<BoundCheck, BoundCheck> check_variable_upper(const Graph& g, double lambda) {
  require_edges(g);
  if (lambda < 0.0)
    fail(errc::lambda_out_of_range,
         "variable upper bound needs lambda >= 0, got " + std::to_string(lambda));
  const double n = static_cast<double>(g.vertex_count());
  const double m = static_cast<double>(g.edge_count());
  const double vm1 = variable_first_zagreb(g, lambda).value;
  const double vm2 = variable_second_zagreb(g, lambda).value;
  const double common = g.max_degree() * vm1 / (2.0 * m);
  const bool regular = classify(g).is_regular;
  return {real_check("var_m1_upper", Relation::less_equal, vm1 / n, common, regular),
          real_check("var_m2_upper", Relation::less_equal, vm2 / m, common, regular)};
}

BoundCheck check_subdivision_theorem(const Graph& g) {
  require_edges(g);
  const long long n = g.vertex_count();
  const long long m = g.edge_count();
  const Graph s = subdivide(g);
  return exact_check("subdivision", Relation::less_equal,
                     Rational::make(first_zagreb(s), n + m),
                     Rational::make(second_zagreb(s), 2 * static_cast<Wide>(m)),
                     classify(g).is_regular);
}

}  // namespace zagreb
