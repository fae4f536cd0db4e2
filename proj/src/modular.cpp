#include "cellforms/modular.hpp"

#include <mutex>

namespace cellforms::modular {

u64 prime(std::size_t i) {
  static std::mutex lock;
  static std::vector<u64> cache;
  std::lock_guard<std::mutex> guard(lock);
  while (cache.size() <= i) {
    mpz_class candidate = cache.empty() ? mpz_class(u64{1} << 62) : mpz_class(static_cast<unsigned long>(cache.back()));
    // step downwards: previous prime below the last one
    do {
      candidate -= 1;
    } while (mpz_probab_prime_p(candidate.get_mpz_t(), 40) == 0);
    cache.push_back(static_cast<u64>(candidate.get_ui()));
  }
  return cache[i];
}

u64 mul(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

u64 add(u64 a, u64 b, u64 p) {
  const u64 s = a + b;
  return s >= p ? s - p : s;
}

u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 inv(u64 a, u64 p) {
  // Fermat
  u64 result = 1;
  u64 base = a % p;
  for (u64 e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = mul(result, base, p);
    base = mul(base, base, p);
  }
  return result;
}

u64 reduce(const mpz_class& z, u64 p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(p));
  return static_cast<u64>(r.get_ui());
}

std::optional<u64> reduce(const Rational& q, u64 p) {
  const u64 den = reduce(q.get_den(), p);
  if (den == 0) return std::nullopt;
  return mul(reduce(q.get_num(), p), inv(den, p), p);
}

ModEchelon eliminate(ModMatrix m, u64 p) {
  ModEchelon e;
  std::vector<bool> used(m.rows(), false);
  for (std::size_t col = 0; col < m.cols() && e.rank < m.rows(); ++col) {
    std::size_t pr = m.rows();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (!used[r] && m(r, col) != 0) {
        pr = r;
        break;
      }
    }
    if (pr == m.rows()) continue;
    used[pr] = true;
    e.pivot_cols.push_back(col);
    e.pivot_rows.push_back(pr);
    ++e.rank;
    const u64 scale = inv(m(pr, col), p);
    for (std::size_t c = col; c < m.cols(); ++c) m(pr, c) = mul(m(pr, c), scale, p);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (used[r] || m(r, col) == 0) continue;
      const u64 f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (m(pr, c) != 0) m(r, c) = sub(m(r, c), mul(f, m(pr, c), p), p);
      }
    }
  }
  return e;
}

std::optional<ModMatrix> inverse(const ModMatrix& m, u64 p) {
  const std::size_t k = m.rows();
  ModMatrix a(k, 2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) a(i, j) = m(i, j);
    a(i, k + i) = 1;
  }
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pr = col;
    while (pr < k && a(pr, col) == 0) ++pr;
    if (pr == k) return std::nullopt;
    if (pr != col) {
      for (std::size_t c = 0; c < 2 * k; ++c) std::swap(a(pr, c), a(col, c));
    }
    const u64 scale = inv(a(col, col), p);
    for (std::size_t c = 0; c < 2 * k; ++c) a(col, c) = mul(a(col, c), scale, p);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const u64 f = a(r, col);
      for (std::size_t c = 0; c < 2 * k; ++c) {
        if (a(col, c) != 0) a(r, c) = sub(a(r, c), mul(f, a(col, c), p), p);
      }
    }
  }
  ModMatrix out(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) out(i, j) = a(i, k + j);
  }
  return out;
}

std::optional<Rational> reconstruct(const mpz_class& a, const mpz_class& m) {
  mpz_class bound;
  mpz_class half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = m, r1 = a % m;
  if (r1 < 0) r1 += m;
  mpz_class s0 = 0, s1 = 1;
  while (r1 > bound) {
    const mpz_class q = r0 / r1;
    mpz_class t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (s1 == 0 || abs(s1) > bound) return std::nullopt;
  Rational out(r1, s1);
  out.canonicalize();
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), s1.get_mpz_t(), m.get_mpz_t());
  if (g != 1) return std::nullopt;
  return out;
}

}  // namespace cellforms::modular
