#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "filiform/rational.hpp"

namespace filiform {

// Exponent pair of a monomial t^t * alpha^alpha. The t exponent may be
// negative, the alpha exponent never is.
struct Exponent {
  int t = 0;
  int alpha = 0;
  friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

struct Term {
  Exponent exponent;
  Rational coefficient;
  friend bool operator==(const Term&, const Term&) = default;
};

// Element of Q[alpha][t, 1/t], stored sparsely as terms sorted by exponent
// with no zero coefficients. Two Scalars are equal iff their term lists are.
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Rational& c);  // NOLINT(implicit)
  Scalar(std::int64_t c) : Scalar(Rational(c)) {}  // NOLINT(implicit)

  static Scalar T() { return Monomial(Rational(1), 1, 0); }
  static Scalar Alpha() { return Monomial(Rational(1), 0, 1); }
  // c * t^t_exp * alpha^alpha_exp; alpha_exp must be non-negative.
  static Scalar Monomial(const Rational& c, int t_exp, int alpha_exp = 0);
  // Builds from arbitrary (possibly unsorted, duplicated, zero) terms.
  static Scalar FromTerms(std::vector<Term> terms);

  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  // Single term with no alpha: c * t^k with c != 0, invertible for t != 0.
  bool is_unit() const;
  std::optional<Rational> constant_value() const;
  Rational coefficient(Exponent e) const;

  bool uses_t() const;
  bool uses_alpha() const;
  bool has_negative_t() const;
  // Degree bounds in t; zero scalar reports 0 for both.
  int min_t_degree() const;
  int max_t_degree() const;
  int max_alpha_degree() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);

  Scalar pow(unsigned exponent) const;
  // Multiplication by t^k.
  Scalar shift_t(int k) const;
  // Inverse of a unit; throws NotAUnit otherwise.
  Scalar unit_inverse() const;

  // Full evaluation. Throws ZeroSpecialization when t0 = 0 meets a pole.
  Rational specialize(const Rational& t0, const Rational& alpha0) const;
  // Substitute only t (alpha stays symbolic) or only alpha.
  Scalar specialize_t(const Rational& t0) const;
  Scalar specialize_alpha(const Rational& alpha0) const;

  // Canonical text, parseable by the expression grammar: terms in
  // descending exponent order, e.g. "-8/5*t^5 + 8/5*t".
  std::string str() const;

  friend bool operator==(const Scalar&, const Scalar&) = default;

 private:
  std::vector<Term> terms_;
};

inline bool scalar_is_zero(const Scalar& a) { return a.is_zero(); }
inline Scalar scalar_add(const Scalar& a, const Scalar& b) { return a + b; }
inline Scalar scalar_mul(const Scalar& a, const Scalar& b) { return a * b; }
inline Rational scalar_specialize(const Scalar& a, const Rational& t0, const Rational& alpha0) {
  return a.specialize(t0, alpha0);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Polynomial in an auxiliary indeterminate x with Scalar coefficients,
// coefficient i multiplying x^i. Trailing zeros are trimmed.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Scalar> coefficients);

  // prod_i (x - roots[i])
  static UniPoly FromRoots(std::span<const Scalar> roots);

  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Scalar& operator[](std::size_t i) const { return coeffs_[i]; }

  Scalar evaluate(const Scalar& x) const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  std::string str() const;

 private:
  void Trim();
  std::vector<Scalar> coeffs_;
};

}  // namespace filiform
