#include "cellforms/periods.hpp"

#include "cellforms/convergence.hpp"
#include "cellforms/errors.hpp"
#include "cellforms/ideal.hpp"
#include "cellforms/insertion.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

namespace cellforms {

namespace {

Rational make_rational(long long num, long long den) {
  Rational q(static_cast<long>(num), static_cast<unsigned long>(den < 0 ? -den : den));
  if (den < 0) q = -q;
  q.canonicalize();
  return q;
}

std::optional<MzvFit> fit_one(double v, const MzvEntry& basis, long max_den, double eps) {
  const long double zeta = basis.value;
  const long double ratio = static_cast<long double>(v) / zeta;
  // Continued-fraction convergents h/k of the ratio.
  long double rem = ratio;
  long long h_prev = 1, h = static_cast<long long>(std::floor(rem));
  long long k_prev = 0, k = 1;
  for (int step = 0; step < 64 && k <= max_den; ++step) {
    const double residual = static_cast<double>(std::fabs(static_cast<long double>(v) - zeta * h / k));
    if (residual < 10 * eps) {
      MzvFit fit;
      fit.found = true;
      fit.terms.emplace_back(make_rational(h, k), basis.name);
      fit.residual = residual;
      return fit;
    }
    const long double frac = rem - std::floor(rem);
    if (frac < 1e-18L) break;
    rem = 1 / frac;
    const long long a = static_cast<long long>(std::floor(rem));
    const long long h_next = a * h + h_prev;
    const long long k_next = a * k + k_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  return std::nullopt;
}

// LLL reduction (delta = 3/4) of the rows of a small basis, in long double.
template <std::size_t Dim>
void lll_reduce(std::vector<std::array<long double, Dim>>& b) {
  const std::size_t rows = b.size();
  auto dot = [](const auto& x, const auto& y) {
    long double s = 0;
    for (std::size_t i = 0; i < Dim; ++i) s += x[i] * y[i];
    return s;
  };
  std::vector<std::array<long double, Dim>> star(rows);
  std::vector<std::vector<long double>> mu(rows, std::vector<long double>(rows, 0));
  std::vector<long double> norm(rows);
  auto gram_schmidt = [&] {
    for (std::size_t i = 0; i < rows; ++i) {
      star[i] = b[i];
      for (std::size_t j = 0; j < i; ++j) {
        mu[i][j] = dot(b[i], star[j]) / norm[j];
        for (std::size_t d = 0; d < Dim; ++d) star[i][d] -= mu[i][j] * star[j][d];
      }
      norm[i] = dot(star[i], star[i]);
    }
  };
  gram_schmidt();
  std::size_t k = 1;
  for (int guard = 0; k < rows && guard < 10000; ++guard) {
    for (std::size_t j = k; j-- > 0;) {
      const long double q = std::round(mu[k][j]);
      if (q != 0) {
        for (std::size_t d = 0; d < Dim; ++d) b[k][d] -= q * b[j][d];
        gram_schmidt();
      }
    }
    if (norm[k] >= (0.75L - mu[k][k - 1] * mu[k][k - 1]) * norm[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      gram_schmidt();
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
}

std::optional<MzvFit> fit_two(double v, const MzvEntry& z1, const MzvEntry& z2, long max_den, double eps) {
  const long double scale = 1.0L / eps;
  std::vector<std::array<long double, 4>> basis = {
      std::array<long double, 4>{1, 0, 0, scale * v},
      std::array<long double, 4>{0, 1, 0, scale * z1.value},
      std::array<long double, 4>{0, 0, 1, scale * z2.value},
  };
  lll_reduce(basis);
  std::optional<MzvFit> best;
  for (const auto& row : basis) {
    long long a = std::llround(row[0]);
    long long b = std::llround(row[1]);
    long long c = std::llround(row[2]);
    if (a == 0 || std::llabs(a) > max_den) continue;
    if (a < 0) {
      a = -a;
      b = -b;
      c = -c;
    }
    // a v + b z1 + c z2 = 0  =>  v = (-b/a) z1 + (-c/a) z2
    const long double approx = (-static_cast<long double>(b) * z1.value - static_cast<long double>(c) * z2.value) / a;
    const double residual = static_cast<double>(std::fabs(static_cast<long double>(v) - approx));
    if (residual >= 10 * eps) continue;
    if (best && best->residual <= residual) continue;
    MzvFit fit;
    fit.found = true;
    fit.residual = residual;
    if (b != 0) fit.terms.emplace_back(make_rational(-b, a), z1.name);
    if (c != 0) fit.terms.emplace_back(make_rational(-c, a), z2.name);
    best = std::move(fit);
  }
  return best;
}

}  // namespace

MzvFit fit_mzv(double v, int weight, long max_den, double eps) {
  if (max_den < 1) throw DomainError("max_den must be positive");
  if (!(eps > 0)) throw DomainError("error bound must be positive");
  const MzvTable table = mzv_values(weight, 30);
  if (std::fabs(v) < 10 * eps) {
    MzvFit zero;
    zero.found = true;
    zero.residual = std::fabs(v);
    return zero;
  }
  std::optional<MzvFit> fit;
  if (table.entries.size() == 1) {
    fit = fit_one(v, table.entries[0], max_den, eps);
  } else if (table.entries.size() == 2) {
    fit = fit_two(v, table.entries[0], table.entries[1], max_den, eps);
  }
  return fit.value_or(MzvFit{});
}

std::vector<std::uint64_t> zagier_dims(int N) {
  if (N < 0) throw DomainError("zagier_dims needs N >= 0");
  std::vector<std::uint64_t> d{1, 0, 1};
  for (int i = 3; i <= N; ++i) d.push_back(d[static_cast<std::size_t>(i - 2)] + d[static_cast<std::size_t>(i - 3)]);
  d.resize(static_cast<std::size_t>(N + 1));
  return d;
}

bool RelationReport::ok() const {
  return !instances.empty() &&
         std::all_of(instances.begin(), instances.end(), [](const RelationInstance& r) { return r.pass; });
}

namespace {

// Symmetries of the cyclic order (0, t1, ..., t_{n-3}, 1, inf): the rotation
// by `shift` positions, optionally composed with the reflection.
Permutation dihedral(int n, int shift, bool reflect) {
  const auto cell = delta(n).polygon.order();
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int j = reflect ? ((shift - i) % n + n) % n : (i + shift) % n;
    image[static_cast<std::size_t>(cell[static_cast<std::size_t>(i)].code(n))] = cell[static_cast<std::size_t>(j)].code(n);
  }
  return Permutation::from_images(n, std::move(image));
}

}  // namespace

RelationReport period_relation_check(int n, std::uint64_t seed, int symmetric_instances, int shuffle_instances) {
  if (n < 5 || n > 6) throw DomainError("period_relation_check supports n in 5..6, got " + std::to_string(n));
  RelationReport report;
  report.n = n;
  const QuadratureSpec q = QuadratureSpec::defaults_for(n);
  std::mt19937_64 rng(derive_seed(seed, 0x9E1A));

  const DeltaBasis basis = delta_basis(n, seed);
  if (basis.elements.empty()) throw InternalError("no convergent forms to test relations on");

  for (int i = 0; i < symmetric_instances; ++i) {
    const auto& element = basis.elements[rng() % basis.elements.size()];
    const bool identity = (i == 0);
    const int shift = identity ? 0 : static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    const bool reflect = identity ? false : (shift == 0 || rng() % 2 == 1);
    const Permutation sigma = dihedral(n, shift, reflect);
    const FormSum moved = to_forms(act(sigma, element.polygons));

    RelationInstance r;
    r.kind = "symmetric";
    r.description = std::string(identity ? "identity" : (reflect ? "reflection" : "rotation")) +
                    " shift " + std::to_string(shift) + " on " + element.origin;
    r.lhs = integrate(element.form, q, seed).value;
    r.rhs = integrate(moved, q, seed).value;
    if (identity) {
      r.pass = (r.lhs == r.rhs);
    } else {
      r.sign = std::fabs(r.lhs - r.rhs) <= std::fabs(r.lhs + r.rhs) ? 1 : -1;
      r.pass = std::fabs(r.lhs - r.sign * r.rhs) < 3 * q.tolerance;
    }
    report.instances.push_back(std::move(r));
  }

  const auto finite = finite_labels_cell_order(n);
  int made = 0;
  for (int attempt = 0; made < shuffle_instances && attempt < 50 * shuffle_instances; ++attempt) {
    const Label x = finite[rng() % finite.size()];
    Word rest;
    for (const Label& l : all_labels(n)) {
      if (l != x) rest.push_back(l);
    }
    std::shuffle(rest.begin(), rest.end(), rng);
    const std::size_t cut = 1 + rng() % (rest.size() - 1);
    const Partition2 part{Word(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(cut)),
                          Word(rest.begin() + static_cast<std::ptrdiff_t>(cut), rest.end())};
    const PolygonSum sum = shuffle_relation(x, part, n);
    const FormSum form = to_forms(sum);
    if (!converges_on_delta(form, seed)) continue;
    RelationInstance r;
    r.kind = "shuffle";
    r.description = "shuffle w.r.t. " + x.str() + ": " + to_string(part.a) + " sh " + to_string(part.b);
    r.lhs = integrate(form, q, seed).value;
    r.rhs = 0.0;
    r.pass = std::fabs(r.lhs) < 1e-6;
    report.instances.push_back(std::move(r));
    ++made;
  }
  if (made < shuffle_instances) throw InternalError("could not find enough convergent shuffle relations");
  return report;
}

}  // namespace cellforms
