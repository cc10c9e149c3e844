#pragma once

#include <string>
#include <utility>
#include <variant>

#include "zagreb/graph.hpp"
#include "zagreb/indices.hpp"
#include "zagreb/rational.hpp"

namespace zagreb {

enum class Relation { less_equal, greater_equal };

/// One verified inequality. Lambda-free bounds carry exact rationals and are
/// decided by integer cross-multiplication; variable-lambda bounds carry
/// doubles and use relative tolerance 1e-9 with an absolute floor of 1e-12.
/// `equality_condition_met` reports the structural condition under which the
/// bound is known to be tight (regularity, star, ...).
struct BoundCheck {
  std::string name;
  Relation relation = Relation::greater_equal;
  std::variant<Rational, double> lhs;
  std::variant<Rational, double> rhs;
  bool satisfied = false;
  bool tight = false;
  bool equality_condition_met = false;

  bool exact() const { return std::holds_alternative<Rational>(lhs); }
  double lhs_value() const;
  double rhs_value() const;
};

/// M1 >= 4m^2/n, tight iff regular. Requires n >= 1.
BoundCheck check_m1_lower(const Graph& g);

/// M2 >= 4m^3/n^2, tight iff regular. Requires n >= 1.
BoundCheck check_m2_lower(const Graph& g);

/// M1/n <= D*M1/2m and M2/m <= D*M1/2m where D is the max degree; both tight
/// simultaneously iff regular. Requires m >= 1.
std::pair<BoundCheck, BoundCheck> check_common_upper(const Graph& g);

/// M1 <= m(2m/(n-1) + (n-2)D/(n-1) + (D-d)(1 - D/(n-1))), tight iff the graph
/// is a star, regular, or a clique K_{D+1} plus isolated vertices. Defined for
/// disconnected graphs and min degree 0. Requires n >= 2.
BoundCheck check_das_upper(const Graph& g);

/// Variable lower bounds against m-weighted powers of the average degree.
/// The M1 form needs lambda >= 1/2, the M2 form lambda >= 0; both need min
/// degree >= 1.
BoundCheck check_variable_m1_lower(const Graph& g, double lambda);
BoundCheck check_variable_m2_lower(const Graph& g, double lambda);
std::pair<BoundCheck, BoundCheck> check_variable_lower(const Graph& g, double lambda);

/// Variable analogue of the common upper bound; lambda >= 0, m >= 1.
std::pair<BoundCheck, BoundCheck> check_variable_upper(const Graph& g, double lambda);

/// M1(S)/(n+m) <= M2(S)/(2m) for the subdivision S of g, tight iff g is
/// regular. Requires m >= 1.
BoundCheck check_subdivision_theorem(const Graph& g);

/// Exactly one clique on max_degree+1 vertices, every other vertex isolated.
bool is_clique_plus_isolated(const Graph& g);

}  // namespace zagreb
