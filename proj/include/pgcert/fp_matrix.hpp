#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace pgcert {

using FpVector = std::vector<int>;

/// Dense matrix over F_p, row-major. Entries are kept in [0, p).
class FpMatrix {
 public:
  FpMatrix(std::size_t rows, std::size_t cols, int p);
  static FpMatrix from_rows(const std::vector<FpVector>& rows, std::size_t cols, int p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int prime() const { return p_; }

  int at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, int v);

  std::size_t rank() const;

  /// Unique x with x * A = b (row-vector convention), or nullopt when A is
  /// singular or b is outside the row space.
  std::optional<FpVector> solve_left(const FpVector& b) const;

 private:
  std::size_t rows_, cols_;
  int p_;
  std::vector<int> data_;
};

int mod_p(long long v, int p);
int inverse_mod(int a, int p);

}  // namespace pgcert
