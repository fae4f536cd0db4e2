#include "cellforms/linalg.hpp"

#include "cellforms/errors.hpp"

#include <algorithm>

namespace cellforms {

void RationalMatrix::append_row(std::span<const Rational> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw DomainError("row width mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

namespace {

// Picks the candidate with the smallest numerator+denominator bit size to
// slow down coefficient growth.
std::size_t choose_pivot(const RationalMatrix& m, const std::vector<std::size_t>& live_rows, std::size_t col) {
  std::size_t best = live_rows.size();
  std::size_t best_bits = 0;
  for (std::size_t i = 0; i < live_rows.size(); ++i) {
    const Rational& v = m(live_rows[i], col);
    if (v == 0) continue;
    const std::size_t bits = mpz_sizeinbase(v.get_num_mpz_t(), 2) + mpz_sizeinbase(v.get_den_mpz_t(), 2);
    if (best == live_rows.size() || bits < best_bits) {
      best = i;
      best_bits = bits;
    }
  }
  return best;
}

}  // namespace

Echelon row_reduce(RationalMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> live(rows);
  for (std::size_t i = 0; i < rows; ++i) live[i] = i;

  Echelon out;
  std::vector<std::size_t> order;  // pivot rows of m in pivot order
  Rational factor;
  for (std::size_t col = 0; col < cols && !live.empty(); ++col) {
    const std::size_t pick = choose_pivot(m, live, col);
    if (pick == live.size()) continue;
    const std::size_t pr = live[pick];
    live.erase(live.begin() + static_cast<std::ptrdiff_t>(pick));

    const Rational inv = 1 / m(pr, col);
    for (std::size_t c = col; c < cols; ++c) m(pr, c) *= inv;
    auto eliminate = [&](std::size_t r) {
      if (m(r, col) == 0) return;
      factor = m(r, col);
      for (std::size_t c = col; c < cols; ++c) {
        if (m(pr, c) != 0) m(r, c) -= factor * m(pr, c);
      }
    };
    for (std::size_t r : live) eliminate(r);
    for (std::size_t r : order) eliminate(r);
    order.push_back(pr);
    out.pivot_cols.push_back(col);
  }

  out.reduced = RationalMatrix(order.size(), cols);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t c = 0; c < cols; ++c) out.reduced(i, c) = m(order[i], c);
  }
  out.pivot_rows = std::move(order);
  return out;
}

std::size_t rank(const RationalMatrix& m) {
  // Forward elimination only; no back substitution needed for the count.
  RationalMatrix a = m;
  std::vector<std::size_t> live(a.rows());
  for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;
  std::size_t r = 0;
  Rational factor;
  for (std::size_t col = 0; col < a.cols() && !live.empty(); ++col) {
    const std::size_t pick = choose_pivot(a, live, col);
    if (pick == live.size()) continue;
    const std::size_t pr = live[pick];
    live.erase(live.begin() + static_cast<std::ptrdiff_t>(pick));
    ++r;
    for (std::size_t row : live) {
      if (a(row, col) == 0) continue;
      factor = a(row, col) / a(pr, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (a(pr, c) != 0) a(row, c) -= factor * a(pr, c);
      }
    }
  }
  return r;
}

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
  const Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rational>> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) v[e.pivot_cols[i]] = -e.reduced(i, free);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  const std::size_t k = m.rows();
  if (m.cols() != k) throw DomainError("inverse of a non-square matrix");
  RationalMatrix aug(k, 2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = m(i, j);
    aug(i, k + i) = 1;
  }
  const Echelon e = row_reduce(std::move(aug));
  if (e.pivot_cols.size() < k || e.pivot_cols[k - 1] != k - 1) return std::nullopt;
  RationalMatrix inv(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) inv(i, j) = e.reduced(i, k + j);
  }
  return inv;
}

void RowSpace::reduce(std::vector<Rational>& row) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (row[p] == 0) continue;
    const Rational f = row[p];
    for (std::size_t c = 0; c < cols_; ++c) {
      if (rows_[i][c] != 0) row[c] -= f * rows_[i][c];
    }
  }
}

bool RowSpace::insert(std::vector<Rational> row) {
  if (row.size() != cols_) throw DomainError("row width mismatch");
  reduce(row);
  const auto it = std::find_if(row.begin(), row.end(), [](const Rational& v) { return v != 0; });
  if (it == row.end()) return false;
  const std::size_t p = static_cast<std::size_t>(it - row.begin());
  const Rational inv = 1 / row[p];
  for (auto& v : row) v *= inv;
  // Keep stored rows mutually reduced on pivot columns.
  for (auto& other : rows_) {
    if (other[p] == 0) continue;
    const Rational f = other[p];
    for (std::size_t c = 0; c < cols_; ++c) {
      if (row[c] != 0) other[c] -= f * row[c];
    }
  }
  rows_.push_back(std::move(row));
  pivots_.push_back(p);
  return true;
}

bool RowSpace::contains(std::vector<Rational> row) const {
  if (row.size() != cols_) throw DomainError("row width mismatch");
  reduce(row);
  return std::all_of(row.begin(), row.end(), [](const Rational& v) { return v == 0; });
}

}  // namespace cellforms
