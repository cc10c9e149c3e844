#pragma once

#include "zagreb/graph.hpp"
#include "zagreb/numeric.hpp"

namespace zagreb {

enum class Verdict { holds_strict, holds_with_equality, fails };

const char* verdict_name(Verdict v);

/// Exact comparison of M1/n against M2/m. The verdict is decided by the sign
/// of comparison = M2*n - M1*m, cross-multiplied in 128-bit integers; no
/// floating point is involved.
struct IndexReport {
  long long n = 0;
  long long m = 0;
  long long m1 = 0;
  long long m2 = 0;
  Wide comparison = 0;
  Verdict verdict = Verdict::holds_with_equality;
};

/// Sum of squared vertex degrees.
long long first_zagreb(const Graph& g);

/// Sum over edges of the product of endpoint degrees.
long long second_zagreb(const Graph& g);

/// Throws EmptyGraph when n = 0 or m = 0 (the ratios are undefined).
IndexReport compare_indices(const Graph& g);

struct VariableIndexValue {
  double lambda = 0.0;
  double value = 0.0;
};

/// Sum of d_i^(2*lambda). Lambda < 0 requires min degree >= 1.
VariableIndexValue variable_first_zagreb(const Graph& g, double lambda);

/// Sum over edges of (d_i * d_j)^lambda. Lambda < 0 requires min degree >= 1.
VariableIndexValue variable_second_zagreb(const Graph& g, double lambda);

}  // namespace zagreb
