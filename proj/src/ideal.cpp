#include "cellforms/ideal.hpp"

#include "cellforms/errors.hpp"

#include <algorithm>
#include <set>

namespace cellforms {

std::vector<Partition2> infinity_partitions(int n) {
  if (n < 4) throw DomainError("ideal generators need n >= 4");
  const auto finite = finite_labels_cell_order(n);
  const std::size_t m = finite.size();
  std::vector<Partition2> out;
  // Bit 0 is the label 0 and always lies in A.
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m) - 1; mask += 2) {
    Partition2 part;
    for (std::size_t i = 0; i < m; ++i) ((mask >> i) & 1 ? part.a : part.b).push_back(finite[i]);
    out.push_back(std::move(part));
  }
  return out;
}

PolygonSum shuffle_relation(const Label& x, const Partition2& part, int n) {
  if (part.a.empty() || part.b.empty()) throw DomainError("shuffle relation needs two nonempty factors");
  if (!x.valid_for(n)) throw DomainError("point " + x.str() + " out of range");
  std::set<Label> covered(part.a.begin(), part.a.end());
  covered.insert(part.b.begin(), part.b.end());
  if (covered.size() != part.a.size() + part.b.size()) throw DomainError("shuffle factors overlap");
  if (covered.count(x) || static_cast<int>(covered.size()) != n - 1) {
    throw DomainError("shuffle factors must partition the points other than " + x.str());
  }
  PolygonSum out;
  for (auto& w : shuffle(part.a, part.b)) {
    w.push_back(x);
    out.add(canonicalize(w), 1);
  }
  return out;
}

std::vector<PolygonSum> ideal_generators(int n) {
  std::vector<PolygonSum> out;
  for (const auto& part : infinity_partitions(n)) out.push_back(shuffle_relation(Label::infinity(), part, n));
  return out;
}

KernelReport verify_kernel(int n, std::uint64_t seed, std::size_t points) {
  KernelReport report;
  report.n = n;
  const auto gens = ideal_generators(n);
  report.generators = gens.size();
  report.points = points;
  const auto xs = random_points(n, points, seed);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const FormSum f = to_forms(gens[g]);
    bool bad = false;
    for (const auto& x : xs) {
      const Rational v = abs(evaluate(f, x));
      if (v != 0) bad = true;
      if (v > report.max_abs_value) report.max_abs_value = v;
    }
    if (bad) report.violations.push_back(g);
  }
  return report;
}

Reducer::Reducer(int n, std::uint64_t seed) : n_(n), basis_(basis01(n)), solver_(basis01_forms(n), seed) {}

std::vector<Rational> Reducer::reduce(const FormSum& f) const {
  auto c = solver_.express(f);
  if (!c) throw InternalError("form is not in the span of the 01-basis");
  return *c;
}

std::vector<Rational> Reducer::reduce(const Polygon& p) const {
  if (p.n() != n_) throw DomainError("polygon size does not match reducer");
  return reduce(FormSum(cell_form(p)));
}

std::vector<Rational> Reducer::reduce(const PolygonSum& s) const {
  if (!s.empty() && s.n() != n_) throw DomainError("polygon sum size does not match reducer");
  return reduce(to_forms(s));
}

std::vector<Rational> reduce_to_01(const Polygon& p, std::uint64_t seed) { return Reducer(p.n(), seed).reduce(p); }

}  // namespace cellforms
