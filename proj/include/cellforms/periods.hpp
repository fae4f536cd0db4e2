#ifndef CELLFORMS_PERIODS_HPP
#define CELLFORMS_PERIODS_HPP

// Numerical periods over the standard cell, multiple zeta reference values,
// fitting of periods as rational combinations of those values, and the
// Zagier dimension recursion.

#include "cellforms/combinatorics.hpp"
#include "cellforms/forms.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cellforms {

struct QuadratureSpec {
  int nodes_per_axis = 8;  // first level; doubled at every further level
  int levels = 5;
  double tolerance = 1e-8;

  // 1e-8 for n <= 5, 1e-6 for n = 6, 1e-4 for n = 7.
  static QuadratureSpec defaults_for(int n);
};

struct IntegrationResult {
  double value = 0.0;
  double error = 0.0;                 // |I_k - I_{k-1}| at the accepted level
  int nodes_per_axis = 0;             // at the accepted level
  std::vector<double> level_values;   // I_0, I_1, ...
  std::vector<double> level_errors;   // |I_k - I_{k-1}| for k >= 1
};

// Lebesgue integral over 0 < t1 < ... < t_{n-3} < 1 of the coefficient
// function (ascending variable orientation). Refuses forms that do not
// converge on the standard cell; throws NoConvergenceError when successive
// levels never agree to the tolerance.
IntegrationResult integrate(const FormSum& f, const QuadratureSpec& q, std::uint64_t seed = 0);

// Same quadrature without the convergence precondition or the tolerance
// stop; runs every level. Used for refinement studies.
IntegrationResult integrate_all_levels(const FormSum& f, const QuadratureSpec& q);

struct MzvEntry {
  std::string name;     // e.g. "zeta(3)", "zeta(2)*zeta(3)"
  std::string decimal;  // `digits` significant digits
  long double value = 0;
};

struct MzvTable {
  int weight = 0;
  int digits = 0;
  std::vector<MzvEntry> entries;
};

// Weights 2..5; at least 30 digits are always computed.
MzvTable mzv_values(int weight, int digits = 40);

// zeta(s) for integer s >= 2 by alternating-series acceleration.
std::string zeta_decimal(int s, int digits);

struct MzvFit {
  bool found = false;
  std::vector<std::pair<Rational, std::string>> terms;  // coefficient, MZV name
  double residual = 0.0;
};

// Expresses v as a rational combination of the weight-w MZV basis:
// continued fractions when the basis has one element, lattice reduction when
// it has two. Denominators at most max_den; residual below 10 * eps.
MzvFit fit_mzv(double v, int weight, long max_den, double eps = 1e-8);

// d_0..d_N with d_0 = 1, d_1 = 0, d_2 = 1 and d_n = d_{n-2} + d_{n-3}.
std::vector<std::uint64_t> zagier_dims(int N);

struct RelationInstance {
  std::string kind;         // "symmetric" or "shuffle"
  std::string description;
  double lhs = 0.0;
  double rhs = 0.0;
  int sign = 1;             // symmetric relations: sign relating the two sides
  bool pass = false;
};

struct RelationReport {
  int n = 0;
  std::vector<RelationInstance> instances;
  bool ok() const;
};

// Checks the symmetric-group relation on dihedral symmetries of the standard
// cell (identity included) and the one-point shuffle relations numerically.
RelationReport period_relation_check(int n, std::uint64_t seed, int symmetric_instances = 3,
                                     int shuffle_instances = 3);

}  // namespace cellforms

#endif  // CELLFORMS_PERIODS_HPP
