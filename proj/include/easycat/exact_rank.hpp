#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace easycat {

/// Dense matrix of arbitrary-precision integers, row-major.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_symmetric() const;
  /// Rows newline-separated, entries space-separated.
  std::string to_text() const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

/// Rank over the rationals by fraction-free (Bareiss) elimination with
/// pivoting on the largest magnitude in the column.
std::size_t exact_rank(ExactMatrix m);

}  // namespace easycat
