#include "filiform/expression.hpp"

#include <cctype>
#include <climits>
#include <functional>

#include "filiform/errors.hpp"

namespace filiform {

Expr Expr::Number(Rational value) {
  Expr e;
  e.kind = Kind::kNumber;
  e.number = std::move(value);
  return e;
}

Expr Expr::Symbol(std::string name) {
  Expr e;
  e.kind = Kind::kSymbol;
  e.symbol = std::move(name);
  return e;
}

Expr Expr::Unary(Kind kind, Expr operand) {
  Expr e;
  e.kind = kind;
  e.args.push_back(std::move(operand));
  return e;
}

Expr Expr::Binary(Kind kind, Expr lhs, Expr rhs) {
  Expr e;
  e.kind = kind;
  e.args.push_back(std::move(lhs));
  e.args.push_back(std::move(rhs));
  return e;
}

Expr Expr::Power(Expr base, int exponent) {
  Expr e = Unary(Kind::kPow, std::move(base));
  e.exponent = exponent;
  return e;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, int line, int column) : text_(text), line_(line), column_(column) {}

  Expr Parse() {
    Expr e = ParseExpr();
    SkipSpace();
    if (pos_ < text_.size()) Fail("unexpected character '" + std::string(1, text_[pos_]) + "'", {"+", "-", "*", "^", "end of input"});
    return e;
  }

 private:
  [[noreturn]] void Fail(const std::string& message, std::set<std::string> expected) const {
    throw ParseError(message, line_, column_ + static_cast<int>(pos_), std::move(expected));
  }

  void SkipSpace() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool Accept(char c) {
    SkipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr ParseExpr() {
    Expr e;
    if (Accept('-')) {
      e = Expr::Unary(Expr::Kind::kNeg, ParseTerm());
    } else {
      e = ParseTerm();
    }
    for (;;) {
      if (Accept('+')) {
        e = Expr::Binary(Expr::Kind::kAdd, std::move(e), ParseTerm());
      } else if (Accept('-')) {
        e = Expr::Binary(Expr::Kind::kSub, std::move(e), ParseTerm());
      } else {
        return e;
      }
    }
  }

  Expr ParseTerm() {
    Expr e = ParseFactor();
    while (Accept('*')) e = Expr::Binary(Expr::Kind::kMul, std::move(e), ParseFactor());
    return e;
  }

  Expr ParseFactor() {
    Expr base = ParseBase();
    if (!Accept('^')) return base;
    SkipSpace();
    const std::size_t start = pos_;
    const bool negative = Accept('-');
    SkipSpace();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      Fail(pos_ >= text_.size() ? "dangling exponent" : "exponent must be an integer literal", {"integer"});
    }
    const std::string digits = ReadDigits();
    if (digits.size() > 6) Fail("exponent too large", {});
    const int value = std::stoi(digits);
    if (negative && !(base.kind == Expr::Kind::kSymbol && base.symbol == "t")) {
      pos_ = start;
      Fail("negative exponent is only allowed on t", {"integer"});
    }
    return Expr::Power(std::move(base), negative ? -value : value);
  }

  std::string ReadDigits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Expr ParseBase() {
    SkipSpace();
    static const std::set<std::string> kExpected = {"number", "identifier", "("};
    if (pos_ >= text_.size()) Fail("unexpected end of input", kExpected);
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string literal = ReadDigits();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          Fail("denominator must be an integer literal", {"integer"});
        }
        const std::size_t den_pos = pos_;
        const std::string den = ReadDigits();
        if (den.find_first_not_of('0') == std::string::npos) {
          pos_ = den_pos;
          Fail("zero denominator", {});
        }
        literal += "/" + den;
      }
      return Expr::Number(Rational::Parse(literal));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      return Expr::Symbol(std::string(text_.substr(start, pos_ - start)));
    }
    if (c == '(') {
      ++pos_;
      Expr inner = ParseExpr();
      if (!Accept(')')) Fail("missing ')'", {")", "+", "-", "*"});
      return inner;
    }
    Fail("unexpected character '" + std::string(1, c) + "'", kExpected);
  }

  std::string_view text_;
  int line_;
  int column_;
  std::size_t pos_ = 0;
};

int Precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kNeg:
    case Expr::Kind::kAdd:
    case Expr::Kind::kSub:
      return 1;
    case Expr::Kind::kMul:
      return 2;
    case Expr::Kind::kPow:
      return 3;
    default:
      return 4;
  }
}

std::string Text(const Expr& e, int min_precedence) {
  std::string out;
  switch (e.kind) {
    case Expr::Kind::kNumber:
      out = e.number.str();
      break;
    case Expr::Kind::kSymbol:
      out = e.symbol;
      break;
    case Expr::Kind::kNeg:
      out = "-" + Text(e.args[0], 2);
      break;
    case Expr::Kind::kAdd:
      out = Text(e.args[0], 1) + " + " + Text(e.args[1], 2);
      break;
    case Expr::Kind::kSub:
      out = Text(e.args[0], 1) + " - " + Text(e.args[1], 2);
      break;
    case Expr::Kind::kMul:
      out = Text(e.args[0], 2) + "*" + Text(e.args[1], 3);
      break;
    case Expr::Kind::kPow:
      out = Text(e.args[0], 4) + "^" + std::to_string(e.exponent);
      break;
  }
  return Precedence(e) < min_precedence ? "(" + out + ")" : out;
}

// Scalar plus optional vector part; a pure scalar has an empty map.
struct Value {
  Scalar constant;
  std::map<std::size_t, Scalar> vec;
};

Value Combine(const Value& a, const Value& b, bool subtract) {
  Value out = a;
  out.constant = subtract ? a.constant - b.constant : a.constant + b.constant;
  for (const auto& [k, s] : b.vec) {
    Scalar& slot = out.vec[k];
    slot = subtract ? slot - s : slot + s;
    if (slot.is_zero()) out.vec.erase(k);
  }
  return out;
}

Value Scale(const Value& v, const Scalar& s) {
  Value out;
  out.constant = v.constant * s;
  for (const auto& [k, x] : v.vec) {
    Scalar y = x * s;
    if (!y.is_zero()) out.vec[k] = std::move(y);
  }
  return out;
}

Value Evaluate(const Expr& e, const ScalarEnv& env, char prefix, std::size_t n) {
  switch (e.kind) {
    case Expr::Kind::kNumber:
      return Value{Scalar(e.number), {}};
    case Expr::Kind::kSymbol: {
      if (e.symbol == "t" && env.allow_t) return Value{Scalar::T(), {}};
      if (e.symbol == "alpha" && env.allow_alpha) return Value{Scalar::Alpha(), {}};
      auto it = env.named.find(e.symbol);
      if (it != env.named.end()) return Value{it->second, {}};
      if (prefix != 0 && e.symbol.size() > 1 && e.symbol[0] == prefix &&
          e.symbol.find_first_not_of("0123456789", 1) == std::string::npos && e.symbol[1] != '0' &&
          e.symbol.size() < 6) {
        const std::size_t k = std::stoul(e.symbol.substr(1));
        if (k >= 1 && k <= n) return Value{Scalar(), {{k - 1, Scalar(1)}}};
        throw ValidationError("basis vector " + e.symbol + " outside dimension " + std::to_string(n));
      }
      throw ValidationError("unknown symbol '" + e.symbol + "'");
    }
    case Expr::Kind::kNeg:
      return Scale(Evaluate(e.args[0], env, prefix, n), Scalar(-1));
    case Expr::Kind::kAdd:
    case Expr::Kind::kSub:
      return Combine(Evaluate(e.args[0], env, prefix, n), Evaluate(e.args[1], env, prefix, n),
                     e.kind == Expr::Kind::kSub);
    case Expr::Kind::kMul: {
      const Value a = Evaluate(e.args[0], env, prefix, n);
      const Value b = Evaluate(e.args[1], env, prefix, n);
      if (!a.vec.empty() && !b.vec.empty()) throw ValidationError("product of two basis vectors");
      if (a.vec.empty()) return Scale(b, a.constant);
      return Scale(a, b.constant);
    }
    case Expr::Kind::kPow: {
      const Value base = Evaluate(e.args[0], env, prefix, n);
      if (!base.vec.empty()) throw ValidationError("power of a basis vector");
      if (e.exponent >= 0) return Value{base.constant.pow(static_cast<unsigned>(e.exponent)), {}};
      return Value{base.constant.unit_inverse().pow(static_cast<unsigned>(-e.exponent)), {}};
    }
  }
  return {};
}

}  // namespace

Expr parse_expression(std::string_view text, int line, int column) { return Parser(text, line, column).Parse(); }

std::string expression_text(const Expr& e) { return Text(e, 0); }

void collect_symbols(const Expr& e, std::set<std::string>& out) {
  if (e.kind == Expr::Kind::kSymbol) out.insert(e.symbol);
  for (const auto& a : e.args) collect_symbols(a, out);
}

Scalar evaluate_scalar(const Expr& e, const ScalarEnv& env) { return Evaluate(e, env, 0, 0).constant; }

LinearForm evaluate_linear(const Expr& e, const ScalarEnv& env, char vector_prefix, std::size_t n) {
  Value v = Evaluate(e, env, vector_prefix, n);
  return LinearForm{std::move(v.constant), std::move(v.vec)};
}

}  // namespace filiform
