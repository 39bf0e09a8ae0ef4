#pragma once

#include "skein/polynomial.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace skein {

/// Dense matrix over Z with arbitrary-precision entries, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, int cols = -1);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  BigInt& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
  const BigInt& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }

  IntMatrix transpose() const;
  bool is_zero() const;
  std::string to_string() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  // row[dst] += k * row[src]
  void add_row(int dst, int src, const BigInt& k);
  void add_col(int dst, int src, const BigInt& k);
  void negate_row(int r);
  void negate_col(int c);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigInt> data_;
};

/// Row-style Hermite normal form: U * M = H with U unimodular, H in row
/// echelon form, pivots positive, entries above each pivot reduced into
/// [0, pivot). Zero rows are at the bottom; `rank` counts the nonzero ones.
struct HermiteResult {
  IntMatrix H;
  IntMatrix U;
  int rank = 0;
  std::vector<int> pivot_cols;
};
HermiteResult hermite_normal_form(const IntMatrix& M);

/// Smith normal form: U * M * V = D with U, V unimodular and D diagonal,
/// d_1 | d_2 | ... and d_i >= 0. `divisors` holds the min(rows, cols)
/// diagonal entries.
struct SmithResult {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;
  std::vector<BigInt> divisors;
};
SmithResult smith_normal_form(const IntMatrix& M);

/// Nonzero rows of the HNF of the given generators: a basis of the lattice
/// they span.
std::vector<std::vector<BigInt>> lattice_basis(const std::vector<std::vector<BigInt>>& generators, int dim);

/// A sublattice of Z^k containing n·Z^k, kept as an upper-triangular basis
/// with entries reduced mod n (row i has its pivot in column i, and the
/// pivot divides n). Starts as n·Z^k; `insert` enlarges it by one vector.
class ModularLattice {
 public:
  ModularLattice(std::int64_t modulus, int dim);

  std::int64_t modulus() const { return modulus_; }
  int dim() const { return dim_; }
  bool contains(std::vector<std::int64_t> v) const;
  /// Returns true if the lattice grew.
  bool insert(std::vector<std::int64_t> v);
  const std::vector<std::vector<std::int64_t>>& rows() const { return rows_; }

 private:
  std::int64_t mod(std::int64_t x) const {
    x %= modulus_;
    return x < 0 ? x + modulus_ : x;
  }
  std::int64_t modulus_;
  int dim_;
  std::vector<std::vector<std::int64_t>> rows_;
};

}  // namespace skein
