#pragma once

// Exact integer matrix kernel: Smith and Hermite normal forms, unimodular
// completion and transport, and integer linear systems.

#include "tropfan/numeric.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace tropfan {

/// Dense row-major matrix of arbitrary-precision integers. Never empty.
class IntMatrix {
 public:
  /// Zero matrix. Throws Error(BadParameters) if either dimension is 0.
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);
  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t height);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  IntMatrix transpose() const;
  bool is_zero() const;

  /// Matrix-vector product; throws DimensionMismatch.
  IntVector apply(const IntVector& v) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Integer> data_;
};

Integer determinant(const IntMatrix& a);
bool is_unimodular(const IntMatrix& a);

/// Inverse of a matrix in GL(n, Z). Throws BadParameters when |det| != 1.
IntMatrix inverse_unimodular(const IntMatrix& a);

/// P * A * Q = D with P, Q unimodular and D = diag(alpha_1..alpha_r, 0..),
/// alpha_i > 0, alpha_i | alpha_{i+1}.
struct SmithForm {
  IntMatrix P;
  IntMatrix D;
  IntMatrix Q;
  IntVector invariant_factors;  // alpha_1..alpha_r

  std::size_t rank() const noexcept { return invariant_factors.size(); }
};

SmithForm snf(const IntMatrix& a);

/// Column-style Hermite form A * U = H. H is lower triangular in the echelon
/// sense: column k (k < rank) has its positive pivot in row pivot_rows[k],
/// zeros above it, and the entries to the left of each pivot in its row lie
/// in [0, pivot). Columns rank..cols-1 of H are zero.
struct HermiteForm {
  IntMatrix H;
  IntMatrix U;
  std::vector<std::size_t> pivot_rows;

  std::size_t rank() const noexcept { return pivot_rows.size(); }
};

HermiteForm hnf(const IntMatrix& a);

/// Some z with A z = b over Z (the HNF back-substitution solution), or none.
std::optional<IntVector> lattice_solve(const IntMatrix& a, const IntVector& b);

/// Extends an m x n matrix (m >= n) with an integer left inverse to an
/// element of GL(m, Z) whose first n columns are A.
/// Throws NotLeftInvertible, or BadParameters when m < n.
IntMatrix complete_unimodular(const IntMatrix& a);

/// T in GL(m, Z) with T A = B, given that A and B factor through each other
/// over Z. Throws NoMutualFactorization otherwise.
IntMatrix unimodular_transport(const IntMatrix& a, const IntMatrix& b);

/// Rows forming a Z-basis of the lattice spanned by the rows of A
/// (empty when A = 0).
std::vector<IntVector> row_lattice_basis(const IntMatrix& a);

}  // namespace tropfan
