#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "filiform/rational.hpp"
#include "filiform/scalar.hpp"

namespace filiform {

// AST of the data grammar:
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' ['-'] INT)?
//   base   := INT ['/' INT] | IDENT | '(' expr ')'
// Negative exponents are accepted only on the symbol t.
struct Expr {
  enum class Kind { kNumber, kSymbol, kNeg, kAdd, kSub, kMul, kPow };

  Kind kind = Kind::kNumber;
  Rational number;     // kNumber, non-negative
  std::string symbol;  // kSymbol
  int exponent = 0;    // kPow
  std::vector<Expr> args;

  static Expr Number(Rational value);
  static Expr Symbol(std::string name);
  static Expr Unary(Kind kind, Expr operand);
  static Expr Binary(Kind kind, Expr lhs, Expr rhs);
  static Expr Power(Expr base, int exponent);

  friend bool operator==(const Expr&, const Expr&) = default;
};

// Throws ParseError; `line` and `column` locate the first character.
Expr parse_expression(std::string_view text, int line = 1, int column = 1);

// Canonical text; parse_expression(expression_text(e)) == e.
std::string expression_text(const Expr& e);

void collect_symbols(const Expr& e, std::set<std::string>& out);

// Symbols available to an evaluation. t and alpha are enabled per context;
// `named` supplies scalar definitions such as p1..p17.
struct ScalarEnv {
  bool allow_t = false;
  bool allow_alpha = false;
  std::map<std::string, Scalar> named;
};

// Throws ValidationError on unknown symbols.
Scalar evaluate_scalar(const Expr& e, const ScalarEnv& env);

// sum_k coeffs[k] * V_(k+1) + constant, for vector symbols V1..Vn.
struct LinearForm {
  Scalar constant;
  std::map<std::size_t, Scalar> coeffs;  // 0-based basis index
};

// Throws ValidationError on unknown symbols, out-of-range vectors and
// products or powers of vectors.
LinearForm evaluate_linear(const Expr& e, const ScalarEnv& env, char vector_prefix, std::size_t n);

}  // namespace filiform
