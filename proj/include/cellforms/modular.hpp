#ifndef CELLFORMS_MODULAR_HPP
#define CELLFORMS_MODULAR_HPP

// Linear algebra over prime fields F_p with p just below 2^62, plus CRT and
// rational reconstruction for lifting solutions back to Q.

#include "cellforms/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace cellforms::modular {

using u64 = std::uint64_t;

// The i-th working prime (deterministic, 61-62 bits).
u64 prime(std::size_t i);

u64 mul(u64 a, u64 b, u64 p);
u64 add(u64 a, u64 b, u64 p);
u64 sub(u64 a, u64 b, u64 p);
u64 inv(u64 a, u64 p);

// q mod p; nullopt when p divides the denominator.
std::optional<u64> reduce(const Rational& q, u64 p);
u64 reduce(const mpz_class& z, u64 p);

class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  u64& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  u64 operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<u64> data_;
};

struct ModEchelon {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
  std::vector<std::size_t> pivot_rows;  // input rows used as pivots, in pivot order
};

ModEchelon eliminate(ModMatrix m, u64 p);

std::optional<ModMatrix> inverse(const ModMatrix& m, u64 p);

// Smallest-denominator rational congruent to a mod m with |num|, den below
// sqrt(m/2); nullopt when none exists.
std::optional<Rational> reconstruct(const mpz_class& a, const mpz_class& m);

}  // namespace cellforms::modular

#endif  // CELLFORMS_MODULAR_HPP
