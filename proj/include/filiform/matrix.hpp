#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "filiform/parallel.hpp"
#include "filiform/rational.hpp"
#include "filiform/scalar.hpp"

namespace filiform {

// Coordinate column over the Laurent ring; index 0 is the first basis vector.
using Column = std::vector<Scalar>;
using RationalVector = std::vector<Rational>;

Column ZeroColumn(std::size_t n);
Column BasisColumn(std::size_t n, std::size_t i);
bool IsZeroColumn(const Column& c);
Column operator+(const Column& a, const Column& b);
Column operator-(const Column& a, const Column& b);
Column operator*(const Scalar& s, const Column& c);
std::string ColumnText(const Column& c);

class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  explicit ScalarMatrix(std::size_t n) : n_(n), entries_(n * n) {}

  static ScalarMatrix Identity(std::size_t n);
  static ScalarMatrix Diagonal(std::span<const Scalar> diagonal);

  std::size_t size() const { return n_; }
  Scalar& operator()(std::size_t row, std::size_t col) { return entries_[row * n_ + col]; }
  const Scalar& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * n_ + col];
  }
  Column column(std::size_t col) const;

  bool is_diagonal() const;
  bool uses_t() const;
  bool uses_alpha() const;
  // Principal submatrix on the given (sorted, distinct) indices.
  ScalarMatrix submatrix(std::span<const std::size_t> indices) const;
  ScalarMatrix specialize_t(const Rational& t0) const;

  friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
  friend ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b);
  friend ScalarMatrix operator-(const ScalarMatrix& a, const ScalarMatrix& b);
  friend bool operator==(const ScalarMatrix&, const ScalarMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Scalar> entries_;
};

// Throws DimensionMismatch.
Column mat_apply(const ScalarMatrix& m, const Column& v);
// Division-free (Berkowitz); valid over any commutative ring.
UniPoly mat_char_poly(const ScalarMatrix& m);
Scalar mat_det(const ScalarMatrix& m);
// Exact inverse of a matrix whose determinant is c*t^k. Throws NotAUnit.
ScalarMatrix mat_inverse_unit(const ScalarMatrix& m);
// p(m) for a polynomial with Scalar coefficients, by Horner.
ScalarMatrix mat_eval_poly(const UniPoly& p, const ScalarMatrix& m);

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  static RationalMatrix FromRows(const std::vector<RationalVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

// Result of fraction-free elimination. `rows` is the echelon form scaled to
// a rational reduced row echelon form; `pivots` lists pivot columns.
struct Echelon {
  std::vector<RationalVector> rows;
  std::vector<std::size_t> pivots;
};

// Bareiss elimination; pivot = first nonzero entry of the leftmost
// non-exhausted column. Row updates of one step run concurrently.
Echelon rat_echelon(const RationalMatrix& m, Exec exec = Exec::kParallel);
// Basis of the right nullspace; one vector per free column, that column set to 1.
std::vector<RationalVector> rat_nullspace(const RationalMatrix& m, Exec exec = Exec::kParallel);
std::size_t rat_rank(const RationalMatrix& m, Exec exec = Exec::kParallel);

namespace reference {
// Textbook Gauss-Jordan over Q with divisions; oracle for rat_echelon.
Echelon rat_echelon_gauss_jordan(const RationalMatrix& m);
}  // namespace reference

}  // namespace filiform
