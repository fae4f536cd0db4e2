#ifndef CELLFORMS_FORMS_HPP
#define CELLFORMS_FORMS_HPP

// Cell forms as exact rational functions times dt1 ^ ... ^ dt_{n-3}, and the
// evaluation-matrix linear algebra used to compare them.

#include "cellforms/combinatorics.hpp"
#include "cellforms/linalg.hpp"
#include "cellforms/modular.hpp"
#include "cellforms/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

namespace cellforms {

// A factor (a, b) stands for the linear polynomial a - b in the denominator.
using Factor = std::pair<Label, Label>;

// sign / prod(a - b), with constant factors (1 - 0), (0 - 1) folded into sign.
struct BasicForm {
  int n = 0;
  int sign = 1;
  std::vector<Factor> factors;  // sorted; never involves infinity

  auto operator<=>(const BasicForm&) const = default;
};

class FormSum {
 public:
  FormSum() = default;
  explicit FormSum(int n) : n_(n) {}
  explicit FormSum(const BasicForm& f, Rational coeff = 1);

  int n() const { return n_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<BasicForm, Rational>& terms() const { return terms_; }

  void add(const BasicForm& f, const Rational& coeff);
  FormSum& operator+=(const FormSum& other);
  FormSum& operator-=(const FormSum& other);
  FormSum operator+(const FormSum& other) const;
  FormSum operator-(const FormSum& other) const;
  FormSum operator*(const Rational& scalar) const;

  bool operator==(const FormSum&) const = default;

 private:
  int n_ = 0;
  std::map<BasicForm, Rational> terms_;
};

// Coordinates t1..t_{n-3}; coords[i - 1] is the value of t_i.
struct Point {
  std::vector<Rational> coords;

  bool operator==(const Point&) const = default;
};

BasicForm cell_form(const Polygon& p);
FormSum to_forms(const PolygonSum& s);
// Linear combination of basic forms with the given coefficients.
FormSum combine(const std::vector<FormSum>& forms, const std::vector<Rational>& coeffs);

// Exact value of the coefficient function. Throws PoleError when a factor
// vanishes at x.
Rational evaluate(const BasicForm& f, const Point& x);
Rational evaluate(const FormSum& f, const Point& x);

// Deterministic valid points: coordinates p/q with |p|, q <= 10^4, pairwise
// distinct, never 0 or 1.
std::vector<Point> random_points(int n, std::size_t count, std::uint64_t seed);

// rows: points, cols: forms.
RationalMatrix evaluation_matrix(const std::vector<FormSum>& forms, const std::vector<Point>& points);

// Rank of the evaluation matrix at |forms| + 8 points, computed over two
// 62-bit prime fields (a lower bound for the rank over Q, equal to it for
// all but finitely many primes) and repeated at a second derived seed.
// Throws UnstableRankError when the two seeds disagree.
std::size_t rank(const std::vector<FormSum>& forms, std::uint64_t seed);

// Canonical polygons with 1 right after 0; (n-2)! of them.
std::vector<Polygon> basis01(int n);
std::vector<FormSum> basis01_forms(int n);

// Solves f = sum c_i b_i for a fixed linearly independent basis. The basis is
// sampled once at |basis| + 8 points. Coefficients are solved mod primes,
// lifted by CRT and rational reconstruction, then checked exactly over Q at
// all sample points and 8 fresh points.
class SpanSolver {
 public:
  SpanSolver(std::vector<FormSum> basis, std::uint64_t seed);

  int n() const { return n_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<FormSum>& basis() const { return basis_; }

  // nullopt when f is not in the span.
  std::optional<std::vector<Rational>> express(const FormSum& f) const;

 private:
  int n_ = 0;
  std::vector<FormSum> basis_;
  std::vector<Point> points_;
  std::vector<Point> verify_points_;
  RationalMatrix values_;         // points_ x basis_
  RationalMatrix verify_values_;  // verify_points_ x basis_
  std::vector<std::size_t> square_rows_;

  struct PrimeData {
    std::uint64_t p = 0;
    bool usable = false;
    modular::ModMatrix values;
    modular::ModMatrix verify_values;
    modular::ModMatrix square_inverse;
  };
  const PrimeData* prime_data(std::size_t i) const;
  mutable std::mutex cache_lock_;
  mutable std::vector<std::unique_ptr<PrimeData>> primes_;
};

std::optional<std::vector<Rational>> express_in_basis(const FormSum& f, const std::vector<FormSum>& basis,
                                                      std::uint64_t seed);

}  // namespace cellforms

#endif  // CELLFORMS_FORMS_HPP
