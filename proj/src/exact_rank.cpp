#include "easycat/exact_rank.hpp"

#include <utility>

namespace easycat {

bool ExactMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

std::string ExactMatrix::to_text() const {
  std::string s;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) s += ' ';
      s += (*this)(i, j).get_str();
    }
    s += '\n';
  }
  return s;
}

std::size_t exact_rank(ExactMatrix m) {
  const std::size_t R = m.rows(), C = m.cols();
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < C && rank < R; ++col) {
    // pivot: largest magnitude in this column at or below `rank`
    std::size_t piv = R;
    for (std::size_t r = rank; r < R; ++r) {
      if (sgn(m(r, col)) == 0) continue;
      if (piv == R || mpz_cmpabs(m(r, col).get_mpz_t(), m(piv, col).get_mpz_t()) > 0) piv = r;
    }
    if (piv == R) continue;
    if (piv != rank)
      for (std::size_t c = 0; c < C; ++c) std::swap(m(piv, c), m(rank, c));
    const mpz_class p = m(rank, col);
    for (std::size_t r = rank + 1; r < R; ++r) {
      const mpz_class f = m(r, col);
      for (std::size_t c = col + 1; c < C; ++c) {
        mpz_class v = p * m(r, c) - f * m(rank, c);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(r, c) = std::move(v);
      }
      m(r, col) = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

}  // namespace easycat
