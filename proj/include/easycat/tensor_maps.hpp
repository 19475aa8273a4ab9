#pragma once

// The functor p -> T_p. For p in P(k,l), T_p maps (C^n)^{⊗k} to (C^n)^{⊗l};
// rows are lower multi-indices, columns upper ones, with the first tensor
// factor most significant. Entry (β, α) is δ_p(α, β).

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "easycat/category.hpp"
#include "easycat/exact_rank.hpp"
#include "easycat/partition.hpp"

namespace easycat {

class SizeCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coordinate cap for n^{max(k,l)}; 10^7 unless EASYCAT_COORD_CAP is set.
std::uint64_t coordinate_cap();

/// n^e, throwing SizeCapError if the result exceeds `cap`.
std::uint64_t checked_power(std::uint64_t n, std::size_t e, std::uint64_t cap);

/// 1 iff every block of p carries a constant index. Indices are 1-based.
int delta(const ColoredPartition& p, std::span<const int> alpha, std::span<const int> beta);

/// Sparse integer matrix with sorted (row, col) entries.
class SparseMatrix {
 public:
  struct Entry {
    std::uint64_t row;
    std::uint64_t col;
    std::int64_t value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  SparseMatrix() = default;
  SparseMatrix(std::uint64_t rows, std::uint64_t cols, std::vector<Entry> entries);

  std::uint64_t rows() const { return rows_; }
  std::uint64_t cols() const { return cols_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::int64_t at(std::uint64_t r, std::uint64_t c) const;

  SparseMatrix transpose() const;
  SparseMatrix scaled(std::int64_t factor) const;

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix kronecker(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  void normalize();
  std::uint64_t rows_ = 0;
  std::uint64_t cols_ = 0;
  std::vector<Entry> entries_;
};

/// T_p as a 0/1 sparse matrix.
struct PartitionMap {
  int n = 0;
  std::size_t k = 0;
  std::size_t l = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> coords;  // sorted (β, α)

  SparseMatrix matrix() const;
};

/// Throws SizeCapError if n^{max(k,l)} exceeds the coordinate cap.
PartitionMap build_map(const ColoredPartition& p, int n);

struct LawReport {
  bool tensor = false;
  bool adjoint = false;
  bool composition = false;
  bool composition_checked = false;  // false when the colors do not match
  int loops = 0;
};

/// Checks T_{p⊗q} = T_p ⊗ T_q, T_{p*} = T_pᵀ and, when q sits on top of p with
/// matching colors, T_p T_q = n^{rl} T_{compose(q,p)}.
LawReport verify_functor_laws(const ColoredPartition& p, const ColoredPartition& q, int n);

/// G[i][j] = number of coordinates shared by T_{parts[i]} and T_{parts[j]}.
/// Throws std::invalid_argument if arities or color words differ.
ExactMatrix gram_matrix(const std::vector<ColoredPartition>& parts, int n);

/// Header "n=<n> r=<word> s=<word>" followed by the Gram rows.
std::string export_gram(const ExactMatrix& g, int n, std::span<const Color> r,
                        std::span<const Color> s);

/// Every set partition of k + l points with the given colors.
std::vector<ColoredPartition> all_partitions(std::span<const Color> upper, std::span<const Color> lower);

/// Members of the slice in P(|r|,|s|) with upper colors r and lower colors s.
std::vector<ColoredPartition> slice_members(const CategorySlice& slice, std::span<const Color> r,
                                            std::span<const Color> s);

/// Rank of the Gram matrix of slice_members. Throws std::invalid_argument if
/// |r| + |s| exceeds the slice's P_max.
std::size_t intertwiner_dimension(const CategorySlice& slice, std::span<const Color> r,
                                  std::span<const Color> s, int n);

/// All-white partition connecting u_i with l_{sigma(i)}; sigma is 1-based.
/// Throws PartitionError if sigma is not a bijection.
ColoredPartition permutation_partition(std::span<const int> sigma);

}  // namespace easycat
