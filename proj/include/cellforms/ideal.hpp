#ifndef CELLFORMS_IDEAL_HPP
#define CELLFORMS_IDEAL_HPP

// The shuffle ideal I_n, reduction of polygons to the 01-basis, and shuffle
// relations with respect to an arbitrary marked point.

#include "cellforms/combinatorics.hpp"
#include "cellforms/forms.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace cellforms {

// Unordered splitting {a, b} of the points other than one fixed point. Each
// side is kept in standard-cell order by the generators below, but callers of
// shuffle_relation may pass any order.
struct Partition2 {
  Word a;
  Word b;
};

// One partition per unordered {A, B} of {0, t1, ..., t_{n-3}, 1} (A holds 0),
// with both sides in standard-cell order: (2^{n-1} - 2) / 2 of them.
std::vector<Partition2> infinity_partitions(int n);

// sum over W in A sh B of [W, x]. Throws DomainError unless a, b are nonempty,
// disjoint and cover every point except x.
PolygonSum shuffle_relation(const Label& x, const Partition2& part, int n);

// The generators sum_{W in A sh B} [W, inf] of I_n.
std::vector<PolygonSum> ideal_generators(int n);

struct KernelReport {
  int n = 0;
  std::size_t generators = 0;
  std::size_t points = 0;
  Rational max_abs_value;             // over all generators and points; 0 when the check passes
  std::vector<std::size_t> violations;  // generator indices with a nonzero value

  bool ok() const { return violations.empty(); }
};

KernelReport verify_kernel(int n, std::uint64_t seed, std::size_t points = 20);

// Reduction of polygons (and their sums) modulo I_n, realised through the cell
// form isomorphism onto the 01-basis.
class Reducer {
 public:
  Reducer(int n, std::uint64_t seed);

  int n() const { return n_; }
  const std::vector<Polygon>& basis() const { return basis_; }
  const std::vector<FormSum>& basis_forms() const { return solver_.basis(); }

  // Coefficients on basis(); throws InternalError if the 01-basis fails to
  // span (impossible unless the implementation is wrong).
  std::vector<Rational> reduce(const Polygon& p) const;
  std::vector<Rational> reduce(const PolygonSum& s) const;
  std::vector<Rational> reduce(const FormSum& f) const;

 private:
  int n_;
  std::vector<Polygon> basis_;
  SpanSolver solver_;
};

std::vector<Rational> reduce_to_01(const Polygon& p, std::uint64_t seed);

}  // namespace cellforms

#endif  // CELLFORMS_IDEAL_HPP
