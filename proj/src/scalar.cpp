#include "filiform/scalar.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "filiform/errors.hpp"

namespace filiform {

namespace {

// Merge two sorted term lists with coefficient scaling of the second.
std::vector<Term> Merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exponent < b[j].exponent)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exponent < a[i].exponent) {
      out.push_back(subtract ? Term{b[j].exponent, -b[j].coefficient} : b[j]);
      ++j;
    } else {
      Rational c = subtract ? a[i].coefficient - b[j].coefficient
                            : a[i].coefficient + b[j].coefficient;
      if (!c.is_zero()) out.push_back(Term{a[i].exponent, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

std::string MonomialText(const Exponent& e) {
  std::string out;
  if (e.t != 0) out += e.t == 1 ? "t" : "t^" + std::to_string(e.t);
  if (e.alpha != 0) {
    if (!out.empty()) out += "*";
    out += e.alpha == 1 ? "alpha" : "alpha^" + std::to_string(e.alpha);
  }
  return out;
}

}  // namespace

Scalar::Scalar(const Rational& c) {
  if (!c.is_zero()) terms_.push_back(Term{Exponent{}, c});
}

Scalar Scalar::Monomial(const Rational& c, int t_exp, int alpha_exp) {
  if (alpha_exp < 0) throw NegativeExponent("negative alpha exponent");
  Scalar s;
  if (!c.is_zero()) s.terms_.push_back(Term{Exponent{t_exp, alpha_exp}, c});
  return s;
}

Scalar Scalar::FromTerms(std::vector<Term> terms) {
  std::map<Exponent, Rational> acc;
  for (auto& term : terms) {
    if (term.exponent.alpha < 0) throw NegativeExponent("negative alpha exponent");
    acc[term.exponent] += term.coefficient;
  }
  Scalar s;
  for (auto& [e, c] : acc) {
    if (!c.is_zero()) s.terms_.push_back(Term{e, c});
  }
  return s;
}

bool Scalar::is_one() const {
  return terms_.size() == 1 && terms_[0].exponent == Exponent{} && terms_[0].coefficient.is_one();
}

bool Scalar::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent == Exponent{});
}

bool Scalar::is_unit() const { return terms_.size() == 1 && terms_[0].exponent.alpha == 0; }

std::optional<Rational> Scalar::constant_value() const {
  if (!is_constant()) return std::nullopt;
  return terms_.empty() ? Rational(0) : terms_[0].coefficient;
}

Rational Scalar::coefficient(Exponent e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& term, const Exponent& x) { return term.exponent < x; });
  if (it != terms_.end() && it->exponent == e) return it->coefficient;
  return Rational(0);
}

bool Scalar::uses_t() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& x) { return x.exponent.t != 0; });
}

bool Scalar::uses_alpha() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const Term& x) { return x.exponent.alpha != 0; });
}

bool Scalar::has_negative_t() const { return !terms_.empty() && terms_.front().exponent.t < 0; }

int Scalar::min_t_degree() const { return terms_.empty() ? 0 : terms_.front().exponent.t; }

int Scalar::max_t_degree() const { return terms_.empty() ? 0 : terms_.back().exponent.t; }

int Scalar::max_alpha_degree() const {
  int m = 0;
  for (const auto& x : terms_) m = std::max(m, x.exponent.alpha);
  return m;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  for (auto& x : s.terms_) x.coefficient = -x.coefficient;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  terms_ = Merge(terms_, o.terms_, false);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  terms_ = Merge(terms_, o.terms_, true);
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return Scalar();
  if (b.terms_.size() == 1) {
    const Term& m = b.terms_[0];
    Scalar s;
    s.terms_.reserve(a.terms_.size());
    for (const auto& x : a.terms_) {
      s.terms_.push_back(Term{Exponent{x.exponent.t + m.exponent.t, x.exponent.alpha + m.exponent.alpha},
                              x.coefficient * m.coefficient});
    }
    return s;
  }
  std::map<Exponent, Rational> acc;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      acc[Exponent{x.exponent.t + y.exponent.t, x.exponent.alpha + y.exponent.alpha}] +=
          x.coefficient * y.coefficient;
    }
  }
  Scalar s;
  s.terms_.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (!c.is_zero()) s.terms_.push_back(Term{e, std::move(c)});
  }
  return s;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  *this = *this * o;
  return *this;
}

Scalar Scalar::pow(unsigned exponent) const {
  Scalar result(Rational(1));
  Scalar base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base *= base;
  }
  return result;
}

Scalar Scalar::shift_t(int k) const {
  Scalar s = *this;
  for (auto& x : s.terms_) x.exponent.t += k;
  return s;
}

Scalar Scalar::unit_inverse() const {
  if (!is_unit()) throw NotAUnit("scalar " + str() + " is not a Laurent unit");
  return Monomial(terms_[0].coefficient.inverse(), -terms_[0].exponent.t, 0);
}

Rational Scalar::specialize(const Rational& t0, const Rational& alpha0) const {
  if (t0.is_zero() && has_negative_t()) throw ZeroSpecialization();
  Rational sum(0);
  for (const auto& x : terms_) {
    Rational v = x.coefficient;
    if (x.exponent.t != 0) v *= t0.pow(x.exponent.t);
    if (x.exponent.alpha != 0) v *= alpha0.pow(x.exponent.alpha);
    sum += v;
  }
  return sum;
}

Scalar Scalar::specialize_t(const Rational& t0) const {
  if (t0.is_zero() && has_negative_t()) throw ZeroSpecialization();
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& x : terms_) {
    Rational v = x.exponent.t == 0 ? x.coefficient : x.coefficient * t0.pow(x.exponent.t);
    out.push_back(Term{Exponent{0, x.exponent.alpha}, std::move(v)});
  }
  return FromTerms(std::move(out));
}

Scalar Scalar::specialize_alpha(const Rational& alpha0) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& x : terms_) {
    Rational v = x.exponent.alpha == 0 ? x.coefficient : x.coefficient * alpha0.pow(x.exponent.alpha);
    out.push_back(Term{Exponent{x.exponent.t, 0}, std::move(v)});
  }
  return FromTerms(std::move(out));
}

std::string Scalar::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rational& c = it->coefficient;
    const std::string mono = MonomialText(it->exponent);
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    std::string body;
    if (mono.empty()) {
      body = mag.str();
    } else if (mag.is_one()) {
      body = mono;
    } else {
      body = mag.str() + "*" + mono;
    }
    if (out.empty()) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

UniPoly::UniPoly(std::vector<Scalar> coefficients) : coeffs_(std::move(coefficients)) { Trim(); }

void UniPoly::Trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::FromRoots(std::span<const Scalar> roots) {
  UniPoly p({Scalar(1)});
  for (const auto& r : roots) p = p * UniPoly({-r, Scalar(1)});
  return p;
}

Scalar UniPoly::evaluate(const Scalar& x) const {
  Scalar acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Scalar> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Scalar> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(c));
}

std::string UniPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeffs_[i].str() << ")";
    if (i > 0) os << "*x^" << i;
  }
  return os.str();
}

}  // namespace filiform
