#include "cellforms/errors.hpp"
#include "cellforms/periods.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>

namespace cellforms {

namespace {

using boost::multiprecision::mpfr_float;

class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits10) : saved_(mpfr_float::default_precision()) {
    mpfr_float::default_precision(digits10);
  }
  ~PrecisionScope() { mpfr_float::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

// Borwein's acceleration of the alternating series
//   eta(s) = sum_{k>=1} (-1)^{k-1} / k^s,  zeta(s) = eta(s) / (1 - 2^{1-s}),
// with error below 3 / (3 + sqrt 8)^terms.
mpfr_float zeta_borwein(int s, int digits) {
  const int terms = static_cast<int>(std::ceil(digits / std::log10(3.0 + std::sqrt(8.0)))) + 4;
  // d_k = terms * sum_{i<=k} (terms + i - 1)! 4^i / ((terms - i)! (2i)!), all integers.
  std::vector<mpz_class> d(static_cast<std::size_t>(terms + 1));
  mpz_class term;  // (terms + i - 1)! 4^i / ((terms - i)! (2i)!) * terms
  mpz_class acc = 0;
  for (int i = 0; i <= terms; ++i) {
    if (i == 0) {
      term = 1;  // terms * (terms - 1)! / terms! = 1
    } else {
      // ratio term_i / term_{i-1} = (terms + i - 1)(terms - i + 1) * 4 / ((2i)(2i - 1))
      term *= mpz_class(terms + i - 1) * (terms - i + 1) * 4;
      term /= mpz_class(2 * i) * (2 * i - 1);
    }
    acc += term;
    d[static_cast<std::size_t>(i)] = acc;
  }
  const mpz_class& dn = d.back();
  mpfr_float sum = 0;
  for (int k = 0; k < terms; ++k) {
    mpz_class num = d[static_cast<std::size_t>(k)] - dn;
    if (k % 2) num = -num;
    mpfr_float kp = mpfr_float(k + 1);
    sum += mpfr_float(num.get_mpz_t()) / pow(kp, s);
  }
  const mpfr_float two_pow = pow(mpfr_float(2), 1 - s);
  return -sum / (mpfr_float(dn.get_mpz_t()) * (1 - two_pow));
}

std::string decimal(const mpfr_float& v, int digits) { return v.str(digits, std::ios_base::fmtflags(0)); }

}  // namespace

std::string zeta_decimal(int s, int digits) {
  if (s < 2) throw DomainError("zeta(s) needs s >= 2");
  if (digits < 1) throw DomainError("digits must be positive");
  PrecisionScope scope(static_cast<unsigned>(digits + 20));
  return decimal(zeta_borwein(s, digits + 10), digits);
}

MzvTable mzv_values(int weight, int digits) {
  if (weight < 2 || weight > 5) throw DomainError("MZV tables cover weights 2..5, got " + std::to_string(weight));
  digits = std::max(digits, 30);
  PrecisionScope scope(static_cast<unsigned>(digits + 20));
  MzvTable table{weight, digits, {}};
  auto push = [&](std::string name, const mpfr_float& v) {
    table.entries.push_back({std::move(name), decimal(v, digits), v.convert_to<long double>()});
  };
  const mpfr_float z = zeta_borwein(weight, digits + 10);
  push("zeta(" + std::to_string(weight) + ")", z);
  if (weight == 5) push("zeta(2)*zeta(3)", zeta_borwein(2, digits + 10) * zeta_borwein(3, digits + 10));
  return table;
}

}  // namespace cellforms
