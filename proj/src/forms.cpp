#include "cellforms/forms.hpp"

#include "cellforms/errors.hpp"
#include "cellforms/modular.hpp"
#include "cellforms/parallel.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace cellforms {

FormSum::FormSum(const BasicForm& f, Rational coeff) : n_(f.n) {
  if (coeff != 0) terms_.emplace(f, std::move(coeff));
}

void FormSum::add(const BasicForm& f, const Rational& coeff) {
  if (n_ == 0) n_ = f.n;
  if (f.n != n_) throw DomainError("form sum mixes n=" + std::to_string(n_) + " and n=" + std::to_string(f.n));
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(f, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

FormSum& FormSum::operator+=(const FormSum& other) {
  if (n_ == 0) n_ = other.n_;
  for (const auto& [f, c] : other.terms_) add(f, c);
  return *this;
}

FormSum& FormSum::operator-=(const FormSum& other) {
  if (n_ == 0) n_ = other.n_;
  for (const auto& [f, c] : other.terms_) add(f, -c);
  return *this;
}

FormSum FormSum::operator+(const FormSum& other) const {
  FormSum out = *this;
  out += other;
  return out;
}

FormSum FormSum::operator-(const FormSum& other) const {
  FormSum out = *this;
  out -= other;
  return out;
}

FormSum FormSum::operator*(const Rational& scalar) const {
  FormSum out(n_);
  if (scalar == 0) return out;
  for (const auto& [f, c] : terms_) out.terms_.emplace(f, c * scalar);
  return out;
}

BasicForm cell_form(const Polygon& p) {
  BasicForm f;
  f.n = p.n();
  const auto& s = p.order();
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Label& prev = s[(i + s.size() - 1) % s.size()];
    const Label& cur = s[i];
    if (prev.is_infinity() || cur.is_infinity()) continue;
    if (!prev.is_var() && !cur.is_var()) {
      // (1 - 0) or (0 - 1)
      if (cur == Label::zero()) f.sign = -f.sign;
      continue;
    }
    f.factors.emplace_back(cur, prev);
  }
  std::sort(f.factors.begin(), f.factors.end());
  return f;
}

FormSum to_forms(const PolygonSum& s) {
  FormSum out(s.n());
  for (const auto& [p, c] : s.terms()) out.add(cell_form(p), c);
  return out;
}

FormSum combine(const std::vector<FormSum>& forms, const std::vector<Rational>& coeffs) {
  if (forms.size() != coeffs.size()) throw DomainError("combine: size mismatch");
  FormSum out(forms.empty() ? 0 : forms.front().n());
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (coeffs[i] != 0) out += forms[i] * coeffs[i];
  }
  return out;
}

namespace {

const Rational& label_value(const Label& l, const Point& x, const Rational& zero, const Rational& one) {
  switch (l.kind()) {
    case LabelKind::Zero: return zero;
    case LabelKind::One: return one;
    case LabelKind::Var: return x.coords[static_cast<std::size_t>(l.index() - 1)];
    case LabelKind::Infinity: break;
  }
  throw DomainError("infinity has no finite value");
}

void check_point(int n, const Point& x) {
  if (static_cast<int>(x.coords.size()) != n - 3) {
    throw DomainError("point has " + std::to_string(x.coords.size()) + " coordinates, expected " +
                      std::to_string(n - 3));
  }
}

}  // namespace

Rational evaluate(const BasicForm& f, const Point& x) {
  check_point(f.n, x);
  static const Rational zero(0);
  static const Rational one(1);
  Rational denom(f.sign);
  Rational diff;
  for (const auto& [a, b] : f.factors) {
    diff = label_value(a, x, zero, one) - label_value(b, x, zero, one);
    if (diff == 0) throw PoleError("factor (" + a.str() + " - " + b.str() + ") vanishes at the evaluation point");
    denom *= diff;
  }
  return 1 / denom;
}

Rational evaluate(const FormSum& f, const Point& x) {
  Rational total(0);
  for (const auto& [form, c] : f.terms()) total += c * evaluate(form, x);
  return total;
}

std::vector<Point> random_points(int n, std::size_t count, std::uint64_t seed) {
  if (n < 4) throw DomainError("random_points needs n >= 4");
  constexpr std::uint64_t kBound = 10000;
  std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(n)));
  auto draw = [&] {
    const auto num = static_cast<long>(rng() % (2 * kBound + 1)) - static_cast<long>(kBound);
    const auto den = static_cast<long>(rng() % kBound) + 1;
    Rational q(num, den);
    q.canonicalize();
    return q;
  };
  std::vector<Point> out;
  std::set<std::vector<Rational>> seen;
  while (out.size() < count) {
    Point p;
    while (static_cast<int>(p.coords.size()) < n - 3) {
      Rational q = draw();
      if (q == 0 || q == 1) continue;
      if (std::find(p.coords.begin(), p.coords.end(), q) != p.coords.end()) continue;
      p.coords.push_back(std::move(q));
    }
    if (seen.insert(p.coords).second) out.push_back(std::move(p));
  }
  return out;
}

RationalMatrix evaluation_matrix(const std::vector<FormSum>& forms, const std::vector<Point>& points) {
  RationalMatrix m(points.size(), forms.size());
  parallel_for(points.size(), [&](std::size_t i) {
    for (std::size_t j = 0; j < forms.size(); ++j) m(i, j) = evaluate(forms[j], points[i]);
  });
  return m;
}

namespace {

int uniform_n(const std::vector<FormSum>& forms) {
  int n = 0;
  for (const auto& f : forms) {
    if (f.n() == 0) continue;
    if (n == 0) n = f.n();
    if (f.n() != n) throw DomainError("forms of different n in one computation");
  }
  return n;
}

}  // namespace

namespace {

using modular::u64;

std::optional<u64> evaluate_mod(const FormSum& f, const std::vector<u64>& coords, u64 p) {
  auto value = [&](const Label& l) -> u64 {
    if (l.is_var()) return coords[static_cast<std::size_t>(l.index() - 1)];
    return l == Label::one() ? 1 : 0;
  };
  u64 total = 0;
  for (const auto& [form, c] : f.terms()) {
    const auto cm = modular::reduce(c, p);
    if (!cm) return std::nullopt;
    u64 denom = form.sign > 0 ? 1 : p - 1;
    for (const auto& [a, b] : form.factors) denom = modular::mul(denom, modular::sub(value(a), value(b), p), p);
    if (denom == 0) return std::nullopt;
    total = modular::add(total, modular::mul(*cm, modular::inv(denom, p), p), p);
  }
  return total;
}

std::optional<std::vector<u64>> reduce_point(const Point& x, u64 p) {
  std::vector<u64> out;
  for (const auto& q : x.coords) {
    auto r = modular::reduce(q, p);
    if (!r) return std::nullopt;
    out.push_back(*r);
  }
  return out;
}

// Rank of the evaluation matrix over F_p; nullopt when p is unusable.
std::optional<std::size_t> rank_mod(const std::vector<FormSum>& forms, const std::vector<Point>& points, u64 p) {
  modular::ModMatrix m(forms.size(), points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto x = reduce_point(points[i], p);
    if (!x) return std::nullopt;
    for (std::size_t j = 0; j < forms.size(); ++j) {
      const auto v = evaluate_mod(forms[j], *x, p);
      if (!v) return std::nullopt;
      m(j, i) = *v;
    }
  }
  return modular::eliminate(std::move(m), p).rank;
}

// Reduction mod p never increases rank, so the largest value over a few
// primes is a certified lower bound for the rank over Q.
std::size_t evaluation_rank(const std::vector<FormSum>& forms, const std::vector<Point>& points) {
  std::size_t best = 0;
  for (std::size_t i = 0, used = 0; used < 2 && i < 16; ++i) {
    if (auto r = rank_mod(forms, points, modular::prime(i))) {
      best = std::max(best, *r);
      ++used;
    }
  }
  return best;
}

}  // namespace

std::size_t rank(const std::vector<FormSum>& forms, std::uint64_t seed) {
  const int n = uniform_n(forms);
  if (n == 0) return 0;
  const std::size_t count = forms.size() + 8;
  const auto first = evaluation_rank(forms, random_points(n, count, seed));
  const auto second = evaluation_rank(forms, random_points(n, count, derive_seed(seed, 0x5EC0)));
  if (first != second) {
    throw UnstableRankError("evaluation rank differs between seeds: " + std::to_string(first) + " vs " +
                            std::to_string(second));
  }
  return first;
}

std::vector<Polygon> basis01(int n) {
  std::vector<Polygon> out;
  for (auto& p : enumerate_polygons(n)) {
    if (p.is_01()) out.push_back(std::move(p));
  }
  return out;
}

std::vector<FormSum> basis01_forms(int n) {
  std::vector<FormSum> out;
  for (const auto& p : basis01(n)) out.emplace_back(cell_form(p));
  return out;
}

SpanSolver::SpanSolver(std::vector<FormSum> basis, std::uint64_t seed) : basis_(std::move(basis)) {
  n_ = uniform_n(basis_);
  if (basis_.empty()) return;
  if (n_ == 0) throw DomainError("basis contains only zero forms");
  const std::size_t k = basis_.size();
  points_ = random_points(n_, k + 8, seed);
  verify_points_ = random_points(n_, 8, derive_seed(seed, 0xF5E5));
  values_ = evaluation_matrix(basis_, points_);
  verify_values_ = evaluation_matrix(basis_, verify_points_);

  // Eliminating the transpose mod p picks k points whose block is invertible
  // mod p, hence over Q.
  for (std::size_t i = 0; i < 16 && square_rows_.empty(); ++i) {
    const u64 p = modular::prime(i);
    modular::ModMatrix t(k, points_.size());
    bool usable = true;
    for (std::size_t r = 0; r < points_.size() && usable; ++r) {
      for (std::size_t j = 0; j < k && usable; ++j) {
        const auto v = modular::reduce(values_(r, j), p);
        usable = v.has_value();
        if (usable) t(j, r) = *v;
      }
    }
    if (!usable) continue;
    const auto e = modular::eliminate(std::move(t), p);
    if (e.rank == k) square_rows_ = e.pivot_cols;
  }
  if (square_rows_.empty()) {
    const auto again = rank(basis_, derive_seed(seed, 0xBA515));
    if (again == k) throw UnstableRankError("basis rank unstable across seeds");
    throw DomainError("basis is linearly dependent (rank " + std::to_string(again) + " of " + std::to_string(k) + ")");
  }
}

const SpanSolver::PrimeData* SpanSolver::prime_data(std::size_t i) const {
  std::lock_guard<std::mutex> guard(cache_lock_);
  while (primes_.size() <= i) {
    PrimeData d;
    d.p = modular::prime(primes_.size());
    const std::size_t k = basis_.size();
    auto fill = [&](const RationalMatrix& src, modular::ModMatrix& dst) {
      dst = modular::ModMatrix(src.rows(), src.cols());
      for (std::size_t r = 0; r < src.rows(); ++r) {
        for (std::size_t c = 0; c < src.cols(); ++c) {
          const auto v = modular::reduce(src(r, c), d.p);
          if (!v) return false;
          dst(r, c) = *v;
        }
      }
      return true;
    };
    d.usable = fill(values_, d.values) && fill(verify_values_, d.verify_values);
    if (d.usable) {
      modular::ModMatrix square(k, k);
      for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) square(r, c) = d.values(square_rows_[r], c);
      }
      auto inv = modular::inverse(square, d.p);
      d.usable = inv.has_value();
      if (inv) d.square_inverse = std::move(*inv);
    }
    primes_.push_back(std::make_unique<PrimeData>(std::move(d)));
  }
  return primes_[i]->usable ? primes_[i].get() : nullptr;
}

std::optional<std::vector<Rational>> SpanSolver::express(const FormSum& f) const {
  constexpr std::size_t kMaxPrimes = 256;
  const std::size_t k = basis_.size();
  if (f.empty()) return std::vector<Rational>(k);
  if (k == 0) return std::nullopt;
  if (f.n() != n_) throw DomainError("form and basis have different n");

  std::vector<Rational> v(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) v[i] = evaluate(f, points_[i]);
  std::vector<Rational> w(verify_points_.size());
  for (std::size_t i = 0; i < verify_points_.size(); ++i) w[i] = evaluate(f, verify_points_[i]);

  auto exact_ok = [&](const std::vector<Rational>& c) {
    auto consistent = [&](const RationalMatrix& values, const std::vector<Rational>& target) {
      for (std::size_t r = 0; r < values.rows(); ++r) {
        Rational acc(0);
        for (std::size_t j = 0; j < k; ++j) acc += values(r, j) * c[j];
        if (acc != target[r]) return false;
      }
      return true;
    };
    return consistent(values_, v) && consistent(verify_values_, w);
  };

  mpz_class modulus = 1;
  std::vector<mpz_class> residues(k);
  for (std::size_t i = 0; i < kMaxPrimes; ++i) {
    const PrimeData* d = prime_data(i);
    if (d == nullptr) continue;
    const u64 p = d->p;
    auto reduce_all = [&](const std::vector<Rational>& src) -> std::optional<std::vector<u64>> {
      std::vector<u64> out;
      for (const auto& q : src) {
        auto r = modular::reduce(q, p);
        if (!r) return std::nullopt;
        out.push_back(*r);
      }
      return out;
    };
    const auto vm = reduce_all(v);
    const auto wm = reduce_all(w);
    if (!vm || !wm) continue;
    std::vector<u64> c(k, 0);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t j = 0; j < k; ++j) {
        c[r] = modular::add(c[r], modular::mul(d->square_inverse(r, j), (*vm)[square_rows_[j]], p), p);
      }
    }
    // Inconsistency mod p implies inconsistency over Q.
    auto consistent_mod = [&](const modular::ModMatrix& values, const std::vector<u64>& target) {
      for (std::size_t r = 0; r < values.rows(); ++r) {
        u64 acc = 0;
        for (std::size_t j = 0; j < k; ++j) acc = modular::add(acc, modular::mul(values(r, j), c[j], p), p);
        if (acc != target[r]) return false;
      }
      return true;
    };
    if (!consistent_mod(d->values, *vm) || !consistent_mod(d->verify_values, *wm)) return std::nullopt;

    const mpz_class pz(static_cast<unsigned long>(p));
    const u64 m_inv = modular::inv(modular::reduce(modulus, p), p);
    for (std::size_t j = 0; j < k; ++j) {
      const u64 delta = modular::mul(modular::sub(c[j], modular::reduce(residues[j], p), p), m_inv, p);
      residues[j] += modulus * mpz_class(static_cast<unsigned long>(delta));
    }
    modulus *= pz;

    std::vector<Rational> lifted;
    lifted.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
      auto q = modular::reconstruct(residues[j], modulus);
      if (!q) break;
      lifted.push_back(std::move(*q));
    }
    if (lifted.size() == k && exact_ok(lifted)) return lifted;
  }
  throw InternalError("span coefficients did not lift to Q");
}

std::optional<std::vector<Rational>> express_in_basis(const FormSum& f, const std::vector<FormSum>& basis,
                                                      std::uint64_t seed) {
  return SpanSolver(basis, seed).express(f);
}

}  // namespace cellforms
