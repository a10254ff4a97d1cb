#include <gtest/gtest.h>

#include "filiform/errors.hpp"
#include "filiform/expression.hpp"
#include "filiform/scalar.hpp"
#include "support.hpp"

namespace filiform {
namespace {

using testing::RandomNonzeroRational;
using testing::RandomRational;
using testing::RandomScalar;
using testing::Rng;

constexpr int kPropertyCases = 1000;

Scalar T() { return Scalar::T(); }
Scalar A() { return Scalar::Alpha(); }
Scalar Parse(const std::string& text) {
  ScalarEnv env;
  env.allow_t = true;
  env.allow_alpha = true;
  return evaluate_scalar(parse_expression(text), env);
}

TEST(RationalTest, CanonicalForm) {
  EXPECT_EQ(Rational(6, -4).str(), "-3/2");
  EXPECT_EQ(Rational(0, 5).str(), "0");
  EXPECT_EQ(Rational::Parse("-14/21"), Rational(-2, 3));
  EXPECT_TRUE(Rational(4, 2).is_integer());
}

TEST(RationalTest, ParseRejectsGarbage) {
  EXPECT_THROW(Rational::Parse("1/"), std::invalid_argument);
  EXPECT_THROW(Rational::Parse("x"), std::invalid_argument);
  EXPECT_THROW(Rational::Parse("1/0"), std::invalid_argument);
}

TEST(RationalTest, DivisionByZeroThrows) {
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_THROW(Rational(0).inverse(), std::domain_error);
}

TEST(RationalTest, PowersHandleSignsAndNegativeExponents) {
  EXPECT_EQ(Rational(-2, 3).pow(3), Rational(-8, 27));
  EXPECT_EQ(Rational(2, 5).pow(-2), Rational(25, 4));
  EXPECT_EQ(Rational(7).pow(0), Rational(1));
}

TEST(RationalTest, NoOverflowOnLargeDenominators) {
  Rational r(1);
  for (int k = 0; k < 40; ++k) r *= Rational(20160, 20161);
  EXPECT_EQ(r * Rational(20161, 20160).pow(40), Rational(1));
}

TEST(ScalarExamples, Addition) {
  EXPECT_EQ((T() + 1) + Scalar(-1), T());
  EXPECT_EQ(Scalar::Monomial(Rational(3, 5), 4) + Scalar::Monomial(Rational(2, 5), 4), T().pow(4));
}

TEST(ScalarExamples, SumOfTwoCertificatePolynomials) {
  // Expanded by hand: -(1/5)t^5 + (1/5)t - (1/4)t^4 + (1/4)t.
  const Scalar p2 = Parse("-(1/5)*t*(t^4-1)");
  const Scalar p3 = Parse("-(1/4)*t*(t^3-1)");
  const Scalar expected = Scalar::Monomial(Rational(-1, 5), 5) + Scalar::Monomial(Rational(-1, 4), 4) +
                          Scalar::Monomial(Rational(9, 20), 1);
  EXPECT_EQ(p2 + p3, expected);
  EXPECT_EQ((p2 + p3).str(), "-1/5*t^5 - 1/4*t^4 + 9/20*t");
}

TEST(ScalarExamples, Multiplication) {
  EXPECT_EQ(Scalar::Monomial(Rational(1), -1) * T(), Scalar(1));
  EXPECT_EQ((T() - 1) * (T() + 1), T().pow(2) - 1);
  const Scalar p15 = Parse("-(1/2)*t^6*(t-1)");
  EXPECT_EQ(A() * p15, Scalar::Monomial(Rational(-1, 2), 7, 1) + Scalar::Monomial(Rational(1, 2), 6, 1));
}

TEST(ScalarExamples, Specialize) {
  EXPECT_EQ((T().pow(2) + A()).specialize(Rational(3), Rational(1, 2)), Rational(19, 2));
  EXPECT_EQ(Parse("-(8/5)*t*(t^4-1)").specialize(Rational(2), Rational(0)), Rational(-48));
  EXPECT_THROW(Scalar::Monomial(Rational(1), -1).specialize(Rational(0), Rational(0)), ZeroSpecialization);
}

TEST(ScalarExamples, IsZero) {
  EXPECT_TRUE(Scalar().is_zero());
  EXPECT_TRUE(((T() - 1) - T() + 1).is_zero());
  EXPECT_FALSE(Parse("-(2/5)*t*(2*t^4-t^3-1)").is_zero());
}

TEST(ScalarTest, UnitsAndInverses) {
  EXPECT_TRUE(Scalar::Monomial(Rational(-3, 7), -2).is_unit());
  EXPECT_FALSE((T() - 1).is_unit());
  EXPECT_FALSE(A().is_unit());
  EXPECT_FALSE(Scalar().is_unit());
  const Scalar u = Scalar::Monomial(Rational(-3, 7), 5);
  EXPECT_EQ(u * u.unit_inverse(), Scalar(1));
  EXPECT_THROW((T() + 1).unit_inverse(), NotAUnit);
}

TEST(ScalarTest, CanonicalTextReparses) {
  Rng rng(11);
  for (int k = 0; k < 300; ++k) {
    const Scalar a = RandomScalar(rng);
    EXPECT_EQ(Parse(a.str()), a) << a.str();
  }
}

TEST(ScalarTest, FromTermsIsIdempotentAndCanonical) {
  Rng rng(12);
  for (int k = 0; k < 300; ++k) {
    const Scalar a = RandomScalar(rng, 8, -2, 2, 1);
    std::vector<Term> terms(a.terms().begin(), a.terms().end());
    EXPECT_EQ(Scalar::FromTerms(terms), a);
    for (std::size_t i = 0; i + 1 < terms.size(); ++i) EXPECT_LT(terms[i].exponent, terms[i + 1].exponent);
    for (const auto& term : terms) EXPECT_FALSE(term.coefficient.is_zero());
  }
}

TEST(ScalarTest, PartialSpecializationCommutes) {
  Rng rng(13);
  for (int k = 0; k < 200; ++k) {
    const Scalar a = RandomScalar(rng);
    const Rational t0 = RandomNonzeroRational(rng), a0 = RandomRational(rng);
    EXPECT_EQ(a.specialize_t(t0).specialize_alpha(a0), Scalar(a.specialize(t0, a0)));
    EXPECT_EQ(a.specialize_alpha(a0).specialize_t(t0), Scalar(a.specialize(t0, a0)));
  }
}

TEST(ScalarProperty, RingAxioms) {
  Rng rng(1);
  for (int k = 0; k < kPropertyCases; ++k) {
    const Scalar a = RandomScalar(rng), b = RandomScalar(rng), c = RandomScalar(rng);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a + Scalar(), a);
    ASSERT_EQ(a * Scalar(1), a);
    ASSERT_TRUE((a + (-a)).is_zero());
    ASSERT_TRUE((a - a).is_zero());
    ASSERT_TRUE((a * Scalar()).is_zero());
  }
}

TEST(ScalarProperty, SpecializationIsARingHomomorphism) {
  Rng rng(2);
  for (int k = 0; k < kPropertyCases; ++k) {
    const Scalar a = RandomScalar(rng), b = RandomScalar(rng);
    const Rational t0 = RandomNonzeroRational(rng), a0 = RandomRational(rng);
    ASSERT_EQ((a + b).specialize(t0, a0), a.specialize(t0, a0) + b.specialize(t0, a0));
    ASSERT_EQ((a * b).specialize(t0, a0), a.specialize(t0, a0) * b.specialize(t0, a0));
    ASSERT_EQ((-a).specialize(t0, a0), -a.specialize(t0, a0));
  }
}

TEST(ScalarProperty, PowerMatchesRepeatedProduct) {
  Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    const Scalar a = RandomScalar(rng, 3, -1, 2, 1);
    const unsigned e = static_cast<unsigned>(testing::UniformInt(rng, 0, 5));
    Scalar p(1);
    for (unsigned i = 0; i < e; ++i) p *= a;
    ASSERT_EQ(a.pow(e), p);
  }
}

// A polynomial of t-degree <= dt and alpha-degree <= da vanishing on a
// (dt+1) x (da+1) grid of distinct points is zero; so grid evaluation and
// is_zero must agree.
bool VanishesOnGrid(const Scalar& a) {
  const int dt = a.max_t_degree(), da = a.max_alpha_degree();
  for (int i = 0; i <= dt; ++i) {
    for (int j = 0; j <= da; ++j) {
      const Rational t0(dt + 1 + i, 1 + i % 3);
      const Rational a0(j - da, 1 + j % 2);
      if (!a.specialize(t0, a0).is_zero()) return false;
    }
  }
  return true;
}

TEST(ScalarProperty, InterpolationConsistency) {
  Rng rng(4);
  int zeros = 0;
  for (int k = 0; k < kPropertyCases; ++k) {
    const Scalar a = RandomScalar(rng, 3, 0, 4, 2), b = RandomScalar(rng, 3, 0, 4, 2);
    Scalar s;
    switch (k % 4) {
      case 0: s = (a + b) * (a - b) - (a * a - b * b); break;
      case 1: s = a * b - b * a; break;
      case 2: s = a * b + a; break;
      default: s = a - b; break;
    }
    ASSERT_FALSE(s.has_negative_t());
    ASSERT_EQ(VanishesOnGrid(s), s.is_zero()) << s.str();
    zeros += s.is_zero();
  }
  EXPECT_GT(zeros, kPropertyCases / 2 - 1);
}

TEST(UniPolyTest, FromRootsExpandsProduct) {
  const std::vector<Scalar> roots = {T(), T().pow(2)};
  const UniPoly p = UniPoly::FromRoots(roots);
  ASSERT_EQ(p.degree(), 2);
  EXPECT_EQ(p[0], T().pow(3));
  EXPECT_EQ(p[1], -(T() + T().pow(2)));
  EXPECT_EQ(p[2], Scalar(1));
  EXPECT_TRUE(p.evaluate(T()).is_zero());
  EXPECT_TRUE(p.evaluate(T().pow(2)).is_zero());
  EXPECT_FALSE(p.evaluate(T().pow(3)).is_zero());
}

TEST(UniPolyTest, TrimsTrailingZeros) {
  const UniPoly p({Scalar(1), Scalar(), Scalar()});
  EXPECT_EQ(p.degree(), 0);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((p - p).degree(), -1);
}

}  // namespace
}  // namespace filiform
