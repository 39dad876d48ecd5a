// Exact linear algebra: F2 matrices (bit-packed Gaussian elimination) and
// small integer matrices (kernel bases, Diophantine solves, positivity checks).
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace bhf {

// Dense row-major matrix over F2, rows packed into 64-bit words.
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool get(int r, int c) const;
  void set(int r, int c, bool v);
  void add_row(int dst, int src);  // row_dst += row_src

  // Reduces in place to row echelon form; returns pivot columns in order.
  std::vector<int> row_reduce();

  int rank() const;

  // Basis of the right kernel {x : A x = 0}, one column vector per entry.
  std::vector<std::vector<bool>> kernel_basis() const;

  // Solves A x = b; empty optional when inconsistent.
  std::optional<std::vector<bool>> solve(const std::vector<bool>& b) const;

 private:
  int rows_ = 0, cols_ = 0, words_ = 0;
  std::vector<uint64_t> data_;
};

// Rank over F2 of a sparse column list: each column is a sorted list of row
// indices. Used for homology ranks of combinatorially given differentials.
int f2_rank_of_columns(const std::vector<std::vector<int>>& columns, int nrows);

// --- Integer matrices (row-major, small sizes) ---

using IntMat = std::vector<std::vector<long long>>;

// Basis for the integer kernel {x : A x = 0}, via column-style Hermite
// reduction. Each returned vector has length = #cols of A.
std::vector<std::vector<long long>> int_kernel_basis(const IntMat& a);

// Solves A x = b over the integers; empty optional when no solution.
std::optional<std::vector<long long>> int_solve(const IntMat& a,
                                                const std::vector<long long>& b);

// True when some strictly positive rational vector w satisfies w . v = 0 for
// every v in `lattice` (the admissibility criterion: the real span of the
// lattice meets the nonnegative orthant only at 0).
bool positive_orthogonal_vector_exists(
    const std::vector<std::vector<long long>>& lattice, int dim,
    std::vector<long long>* witness_area = nullptr);

// Searches small integer combinations of the lattice basis (|coeff| <= bound)
// for a nonzero one-signed vector; empty optional when none is found.
std::optional<std::vector<long long>> one_signed_combination(
    const std::vector<std::vector<long long>>& lattice, int dim, int bound);

}  // namespace bhf
