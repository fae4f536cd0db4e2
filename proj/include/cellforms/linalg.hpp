#ifndef CELLFORMS_LINALG_HPP
#define CELLFORMS_LINALG_HPP

// Dense exact linear algebra over Q.

#include "cellforms/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace cellforms {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Rational> values);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct Echelon {
  RationalMatrix reduced;                // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivot_cols;   // one per row of `reduced`
  std::vector<std::size_t> pivot_rows;   // rows of the input that were used as pivots
};

Echelon row_reduce(RationalMatrix m);
std::size_t rank(const RationalMatrix& m);

// Basis of {x : m x = 0}, each vector with a 1 in its free coordinate.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

// Inverse of a square matrix; nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

// Incrementally maintained row space, used for greedy independence tests and
// for accumulating constraints until their rank stops growing.
class RowSpace {
 public:
  explicit RowSpace(std::size_t cols) : cols_(cols) {}

  std::size_t dimension() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  // Returns true and stores the row if it is independent of the rows so far.
  bool insert(std::vector<Rational> row);
  bool contains(std::vector<Rational> row) const;

  const std::vector<std::vector<Rational>>& rows() const { return rows_; }

 private:
  void reduce(std::vector<Rational>& row) const;

  std::size_t cols_;
  std::vector<std::vector<Rational>> rows_;  // each normalised with a unit pivot
  std::vector<std::size_t> pivots_;
};

}  // namespace cellforms

#endif  // CELLFORMS_LINALG_HPP
