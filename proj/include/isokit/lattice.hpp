#pragma once

// Exact integer/rational linear algebra: matrices over Z, Smith normal form,
// finitely generated abelian groups, sublattices, cones and lattice points of
// convex hulls.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "isokit/error.hpp"
#include "isokit/execution.hpp"

namespace isokit {

using Int = mpz_class;
using Rat = mpq_class;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

IntVector int_vector(std::initializer_list<long> values);
RatVector to_rational(const IntVector& v);
/// Component-wise integral check; returns the integer vector when every entry has denominator 1.
std::optional<IntVector> to_integral(const RatVector& v);
RatVector rat_vector(std::initializer_list<std::pair<long, long>> values);

IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a);
IntVector operator*(const Int& s, const IntVector& v);
RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);
RatVector operator*(const Rat& s, const RatVector& v);

Int dot(const IntVector& a, const IntVector& b);
Rat dot(const IntVector& a, const RatVector& b);
bool is_zero(const IntVector& v);
bool is_zero(const RatVector& v);

std::string format(const Int& x);
std::string format(const Rat& x);
std::string format(const IntVector& v);
std::string format(const RatVector& v);

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  std::vector<IntVector> columns() const;

  IntVector apply(const IntVector& v) const;
  RatVector apply(const RatVector& v) const;

  IntMatrix transpose() const;
  /// Columns of `this` followed by columns of `other`; row counts must agree.
  IntMatrix hconcat(const IntMatrix& other) const;
  bool is_identity() const;
  bool is_square() const { return rows_ == cols_; }

  /// Fraction-free (Bareiss) determinant.
  Int determinant() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;
  friend bool operator<(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> entries_;
};

IntMatrix power(const IntMatrix& m, std::size_t exponent);

/// Order of a square matrix in GL(Z), or nullopt if it exceeds `cap`.
std::optional<std::size_t> matrix_order(const IntMatrix& m, std::size_t cap = 100000);

/// D = left * m * right with `left`, `right` unimodular and D diagonal with
/// d_1 | d_2 | ... (trailing zeros last, all entries nonnegative).
struct SmithForm {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;

  std::size_t rank() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Finitely generated abelian group Z^n / relations, presented by its
/// nontrivial invariant factors and a surjection from the ambient lattice.
class FinAbGroup {
 public:
  FinAbGroup() = default;
  FinAbGroup(std::vector<Int> invariant_factors, IntMatrix projection);

  /// Each entry is > 1 or 0 (free); divisibility chain with zeros last.
  const std::vector<Int>& invariant_factors() const { return factors_; }
  const IntMatrix& projection() const { return projection_; }
  std::size_t ambient_rank() const { return projection_.cols(); }

  std::size_t free_rank() const;
  bool is_trivial() const { return factors_.empty(); }
  /// Group order, nullopt when infinite.
  std::optional<Int> order() const;

  /// Canonical coordinates of the class of `x`: torsion coordinates in [0, d).
  IntVector element(const IntVector& x) const;
  IntVector reduce(IntVector coords) const;
  bool is_torsion(const IntVector& coords) const;

 private:
  std::vector<Int> factors_;
  IntMatrix projection_;
};

/// Cokernel Z^rows / (column span of m).
FinAbGroup cokernel(const IntMatrix& m);

// Rational linear algebra.
std::size_t rank(const std::vector<RatVector>& vectors);
std::size_t rank(const IntMatrix& m);

/// Basis of {x : m x = 0} over Q.
std::vector<RatVector> rational_kernel(const IntMatrix& m);

/// Unique solution of sum_i c_i g_i = target when it exists. Throws
/// DimensionMismatch on ragged input and BadInput if generators are dependent.
std::optional<RatVector> solve_in_span(const RatVector& target, std::span<const RatVector> generators);

/// Coefficients c_i >= 0 with sum_i c_i g_i = target, if the target lies in
/// the cone; generators must be linearly independent.
std::optional<RatVector> cone_coefficients(const RatVector& target, std::span<const RatVector> generators);

// Sublattices of Z^n given by generating columns.
/// Integer basis of {x in Z^cols : m x = 0}, as columns.
IntMatrix integer_kernel(const IntMatrix& m);
/// Integral coordinates of `v` in the Z-span of the columns of `basis`, if any.
std::optional<IntVector> lattice_coordinates(const IntMatrix& basis, const IntVector& v);
bool in_lattice(const IntMatrix& generators, const IntVector& v);
/// Generators (columns) of the intersection of two column-spanned lattices.
IntMatrix lattice_intersection(const IntMatrix& a, const IntMatrix& b);
/// A basis (linearly independent columns) of the lattice spanned by the columns.
IntMatrix lattice_basis(const IntMatrix& generators);

/// Exact test whether `point` is a convex combination of `vertices`.
bool in_convex_hull(const IntVector& point, std::span<const IntVector> vertices);

/// All integer points of Conv(vertices), sorted lexicographically.
std::vector<IntVector> lattice_points_in_hull(std::span<const IntVector> vertices,
                                              Execution policy = Execution::parallel);

}  // namespace isokit
