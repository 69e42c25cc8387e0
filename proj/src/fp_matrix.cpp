#include "pgcert/fp_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace pgcert {

int mod_p(long long v, int p) {
  long long r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

int inverse_mod(int a, int p) {
  a = mod_p(a, p);
  if (a == 0)
    throw std::domain_error("zero has no inverse mod p");
  // Fermat: a^(p-2)
  long long result = 1, base = a;
  for (int e = p - 2; e > 0; e >>= 1) {
    if (e & 1)
      result = result * base % p;
    base = base * base % p;
  }
  return static_cast<int>(result);
}

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, int p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

FpMatrix FpMatrix::from_rows(const std::vector<FpVector>& rows, std::size_t cols, int p) {
  FpMatrix a(rows.size(), cols, p);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c)
      a.set(r, c, rows[r][c]);
  }
  return a;
}

void FpMatrix::set(std::size_t r, std::size_t c, int v) { data_[r * cols_ + c] = mod_p(v, p_); }

std::size_t FpMatrix::rank() const {
  std::vector<int> a = data_;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    std::size_t piv = rank;
    while (piv < rows_ && a[piv * cols_ + c] == 0)
      ++piv;
    if (piv == rows_)
      continue;
    for (std::size_t k = 0; k < cols_; ++k)
      std::swap(a[piv * cols_ + k], a[rank * cols_ + k]);
    const int inv = inverse_mod(a[rank * cols_ + c], p_);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == rank || a[r * cols_ + c] == 0)
        continue;
      const long long f = static_cast<long long>(a[r * cols_ + c]) * inv % p_;
      for (std::size_t k = 0; k < cols_; ++k)
        a[r * cols_ + k] = mod_p(a[r * cols_ + k] - f * a[rank * cols_ + k], p_);
    }
    ++rank;
  }
  return rank;
}

// x A = b  <=>  A^T x^T = b^T; eliminate on the augmented transpose.
std::optional<FpVector> FpMatrix::solve_left(const FpVector& b) const {
  if (b.size() != cols_)
    throw std::invalid_argument("right-hand side has wrong length");
  const std::size_t n = rows_;      // unknowns
  const std::size_t eqs = cols_;    // equations
  const std::size_t w = n + 1;
  std::vector<int> t(eqs * w);
  for (std::size_t e = 0; e < eqs; ++e) {
    for (std::size_t u = 0; u < n; ++u)
      t[e * w + u] = at(u, e);
    t[e * w + n] = mod_p(b[e], p_);
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < eqs; ++c) {
    std::size_t piv = row;
    while (piv < eqs && t[piv * w + c] == 0)
      ++piv;
    if (piv == eqs)
      continue;
    for (std::size_t k = 0; k < w; ++k)
      std::swap(t[piv * w + k], t[row * w + k]);
    const int inv = inverse_mod(t[row * w + c], p_);
    for (std::size_t k = 0; k < w; ++k)
      t[row * w + k] = static_cast<int>(static_cast<long long>(t[row * w + k]) * inv % p_);
    for (std::size_t r = 0; r < eqs; ++r) {
      if (r == row || t[r * w + c] == 0)
        continue;
      const long long f = t[r * w + c];
      for (std::size_t k = 0; k < w; ++k)
        t[r * w + k] = mod_p(t[r * w + k] - f * t[row * w + k], p_);
    }
    pivot_col.push_back(c);
    ++row;
  }
  if (pivot_col.size() != n)
    return std::nullopt;
  for (std::size_t r = row; r < eqs; ++r)
    if (t[r * w + n] != 0)
      return std::nullopt;
  FpVector x(n, 0);
  for (std::size_t r = 0; r < n; ++r)
    x[pivot_col[r]] = t[r * w + n];
  return x;
}

}  // namespace pgcert
