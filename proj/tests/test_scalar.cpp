#include <gtest/gtest.h>

#include <random>

#include "qsa/expr.hpp"
#include "qsa/scalar.hpp"

using qsa::RatPoly;
using qsa::Scalar;

namespace {

Scalar P(const std::string& s) { return Scalar::parse(s); }

// Evaluate numerator/denominator at an integer point with exact rationals.
mpq_class eval_at(const RatPoly& p, const mpq_class& x) {
  mpq_class r = 0;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) r = r * x + p[i];
  return r;
}

mpq_class value_at(const Scalar& s, const mpq_class& x) {
  return eval_at(s.plain_numerator(), x) / eval_at(s.plain_denominator(), x);
}

Scalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-3, 3), d(0, 3), sh(-3, 3);
  auto poly = [&]() {
    std::vector<mpq_class> v(static_cast<std::size_t>(d(rng) + 1));
    for (auto& x : v) x = c(rng);
    return RatPoly(v);
  };
  RatPoly den = poly();
  while (den.is_zero()) den = poly();
  return Scalar::fraction(poly(), den) * Scalar::q_power(sh(rng));
}

}  // namespace

TEST(Scalar, InverseOfQ) { EXPECT_TRUE((Scalar::q() * Scalar::q_power(-1)).is_one()); }

TEST(Scalar, ExactPolynomialDivision) {
  const Scalar r = (Scalar::q_power(-4) - 1) / (Scalar::q_power(-2) - 1);
  EXPECT_EQ(r, Scalar::q_power(-2) + 1);
  EXPECT_TRUE(r.den().is_one());
}

TEST(Scalar, AdditiveIdentity) { EXPECT_EQ(Scalar() + Scalar::q_power(3), Scalar::q_power(3)); }

TEST(Scalar, QPowers) {
  EXPECT_TRUE(Scalar::q_power(0).is_one());
  EXPECT_EQ(Scalar::q_power(-2), Scalar(1) / (Scalar::q() * Scalar::q()));
  EXPECT_EQ(Scalar::q_power(2) * Scalar::q_power(3), Scalar::q_power(5));
}

TEST(Scalar, AsQPower) {
  EXPECT_EQ(Scalar::q_power(3).as_q_power(), 3);
  EXPECT_FALSE((Scalar::q() + 1).as_q_power().has_value());
  EXPECT_EQ(Scalar(1).as_q_power(), 0);
  EXPECT_FALSE(Scalar(2).as_q_power().has_value());
  EXPECT_FALSE((-Scalar::q()).as_q_power().has_value());
  EXPECT_THROW(Scalar().as_q_power(), qsa::ArithmeticError);
  for (long k = -100; k <= 100; ++k) EXPECT_EQ(Scalar::q_power(k).as_q_power(), k);
}

TEST(Scalar, DivisionByZero) {
  EXPECT_THROW(Scalar(1) / Scalar(), qsa::ArithmeticError);
  EXPECT_THROW(Scalar().inverse(), qsa::ArithmeticError);
}

TEST(Scalar, CanonicalForm) {
  const Scalar s = P("(2*q^2 - 2)/(4*q + 4)");
  EXPECT_EQ(s, P("(q - 1)/2"));
  EXPECT_TRUE(s.den().is_one());
  const Scalar t = P("(q^2 + 1)/(-2*q^3 - 4*q)");
  EXPECT_EQ(t.den().lead(), 1);  // content 1, positive leading coefficient
  EXPECT_EQ(t.shift(), -1);
  EXPECT_EQ(t.canonical(), t);
}

TEST(Scalar, Printing) {
  EXPECT_EQ(P("q^-1 - q").to_string(), "q^-1 - q");
  EXPECT_EQ(P("1/(1 - q^2)").to_string(), "-1/(-1 + q^2)");
  EXPECT_EQ(P("3/2").to_string(), "3/2");
  EXPECT_EQ(P("-q").to_string(), "-q");
  EXPECT_EQ(Scalar().to_string(), "0");
}

TEST(Scalar, ParseErrorsCarryColumns) {
  try {
    P("q + r");
    FAIL();
  } catch (const qsa::ParseError& e) {
    EXPECT_EQ(e.kind(), qsa::ParseError::Kind::UnknownSymbol);
    EXPECT_EQ(e.column(), 5u);
  }
  try {
    P("(q + 1");
    FAIL();
  } catch (const qsa::ParseError& e) {
    EXPECT_EQ(e.kind(), qsa::ParseError::Kind::Syntax);
    EXPECT_EQ(e.column(), 7u);
  }
  EXPECT_THROW(P("1/(q - q)"), qsa::ParseError);
}

TEST(ScalarProperty, FieldAxiomsAndEvaluationOracle) {
  std::mt19937_64 rng(7);
  const mpq_class pts[] = {mpq_class(2), mpq_class(5, 3), mpq_class(-7, 2)};
  for (int t = 0; t < 200; ++t) {
    const Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
    EXPECT_EQ(a.canonical(), a);
    EXPECT_EQ(Scalar::parse(a.to_string()), a);
    // Cross-multiplication equality agrees with structural equality.
    const bool cross = (a.plain_numerator() * b.plain_denominator()) == (b.plain_numerator() * a.plain_denominator());
    EXPECT_EQ(cross, a == b);
    for (const auto& x : pts) {
      const mpq_class da = eval_at(a.plain_denominator(), x), db = eval_at(b.plain_denominator(), x);
      if (da == 0 || db == 0) continue;
      const Scalar s = a + b, p = a * b;
      if (eval_at(s.plain_denominator(), x) != 0) EXPECT_EQ(value_at(s, x), value_at(a, x) + value_at(b, x));
      if (eval_at(p.plain_denominator(), x) != 0) EXPECT_EQ(value_at(p, x), value_at(a, x) * value_at(b, x));
    }
  }
}
