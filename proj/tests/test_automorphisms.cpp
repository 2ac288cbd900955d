#include <gtest/gtest.h>

#include "qsa/automorphisms.hpp"
#include "qsa/expr.hpp"

using namespace qsa;

namespace {

const Scalar q = Scalar::q();

std::vector<AlgebraElement> generators() {
  return {AlgebraElement::K(), AlgebraElement::K(-1), AlgebraElement::X(), AlgebraElement::Y(),
          AlgebraElement::E()};
}

}  // namespace

TEST(Aut, ApplyExamples) {
  const Scalar l = Scalar::parse("q + 2"), m = Scalar::parse("-q^3"), g = Scalar(5);
  for (long i : {-2L, 0L, 3L}) {
    const Aut s(l, m, g, i);
    EXPECT_EQ(apply(s, AlgebraElement::X()), l * (AlgebraElement::K(i) * AlgebraElement::X()));
    EXPECT_EQ(apply(s, phi()), l * (AlgebraElement::K(i) * phi()));
    EXPECT_EQ(apply(s, AlgebraElement::K(-1)), g.inverse() * AlgebraElement::K(-1));
  }
  ElementSampler smp(41);
  for (int t = 0; t < 20; ++t) {
    const AlgebraElement x = smp.element();
    EXPECT_EQ(apply(Aut::identity(), x), x);
  }
  EXPECT_THROW(Aut(Scalar(), Scalar(1), Scalar(1), 0), std::invalid_argument);
}

TEST(Aut, ComposeAndInverseExamples) {
  const Scalar g = Scalar::parse("q - 3");
  const Scalar one(1);
  EXPECT_EQ(compose(Aut(one, one, g, 1), Aut(one, one, one, 1)), Aut(g, g.inverse(), g, 2));
  const Aut a(Scalar(2), q, g, 0), b(Scalar::parse("q^2 + 1"), Scalar(-1), Scalar(7), 0);
  EXPECT_EQ(compose(a, b), Aut(a.lambda() * b.lambda(), a.mu() * b.mu(), a.gamma() * b.gamma(), 0));
  EXPECT_EQ(inverse(a), Aut(Scalar(2).inverse(), q.inverse(), g.inverse(), 0));
  EXPECT_EQ(inverse(Aut(one, one, g, 1)), Aut(g, g.inverse(), g.inverse(), -1));
  EXPECT_EQ(inverse(Aut::identity()), Aut::identity());
  const Aut c(Scalar(3), q, g, -4);
  EXPECT_EQ(compose(c, inverse(c)), Aut::identity());
  EXPECT_EQ(compose(inverse(c), c), Aut::identity());
}

TEST(Aut, ParseLiteral) {
  const Aut s = Aut::parse("aut(q^2; -1; (q+1)/(q-1); -3)");
  EXPECT_EQ(s, Aut(Scalar::parse("q^2"), Scalar(-1), Scalar::parse("(q+1)/(q-1)"), -3));
  EXPECT_EQ(Aut::parse(s.to_string()), s);
  EXPECT_THROW(Aut::parse("aut(1;1;1)"), ParseError);
  EXPECT_THROW(Aut::parse("sigma(1;1;1;0)"), ParseError);
  EXPECT_THROW(Aut::parse("aut(1;1;1;x)"), ParseError);
  try {
    Aut::parse("aut(1;1;q^;0)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_GE(e.column(), 9u);
  }
  try {
    Aut::parse("aut(1;0;1;0)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseError::Kind::Domain);
    EXPECT_EQ(e.column(), 7u);
  }
}

TEST(Aut, ActOnSpectrumExamples) {
  const Aut s(Scalar(2), q, Scalar::parse("q^2 - 1"), 3);
  EXPECT_EQ(act_on_spectrum(s, PrimeIdeal::x()), PrimeIdeal::x());
  const Scalar z = Scalar::parse("q + 4");
  EXPECT_EQ(act_on_spectrum(s, PrimeIdeal::q(z)),
            PrimeIdeal::q(z / (s.lambda() * s.mu() / s.gamma() * Scalar::q_power(3))));
  EXPECT_EQ(act_on_spectrum(Aut::identity(), PrimeIdeal::r(z)), PrimeIdeal::r(z));
  EXPECT_EQ(act_on_spectrum(s, PrimeIdeal::p(z)), PrimeIdeal::p(z / s.gamma()));
}

TEST(AutProperty, ScalingOfZAndC) {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 25; ++t) {
    const Aut s = random_aut(rng);
    EXPECT_EQ(apply(s, element_Z()), z_scaling(s) * element_Z()) << s.to_string();
    EXPECT_EQ(apply(s, element_C()), c_scaling(s) * element_C()) << s.to_string();
  }
}

TEST(AutProperty, Homomorphism) {
  std::mt19937_64 rng(43);
  ElementSampler smp(44);
  for (int t = 0; t < 100; ++t) {
    const Aut s = random_aut(rng);
    const AlgebraElement x = smp.element(), y = smp.element();
    EXPECT_EQ(apply(s, x * y), apply(s, x) * apply(s, y));
    EXPECT_EQ(apply(s, x + y), apply(s, x) + apply(s, y));
  }
}

TEST(AutProperty, RelationsPreserved) {
  std::mt19937_64 rng(45);
  for (int t = 0; t < 25; ++t) {
    const Report r = check_relations(random_aut(rng));
    EXPECT_TRUE(r.all_passed()) << r.to_string();
  }
}

TEST(AutProperty, GroupLaws) {
  std::mt19937_64 rng(46);
  for (int t = 0; t < 25; ++t) {
    const Aut a = random_aut(rng), b = random_aut(rng), c = random_aut(rng);
    EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
    const Aut ab = compose(a, b), ai = inverse(a);
    for (const auto& g : generators()) {
      EXPECT_EQ(apply(ab, g), apply(a, apply(b, g)));
      EXPECT_EQ(apply(ai, apply(a, g)), g);
      EXPECT_EQ(apply(a, apply(ai, g)), g);
    }
  }
}

TEST(AutProperty, SpectrumAction) {
  std::mt19937_64 rng(47);
  const Scalar z = Scalar::parse("2*q - 1");
  for (int t = 0; t < 25; ++t) {
    const Aut s = random_aut(rng);
    for (const auto& I : representatives(z, z)) {
      const PrimeIdeal J = act_on_spectrum(s, I);
      EXPECT_EQ(J.kind(), I.kind());
      for (const auto& g : I.generators()) EXPECT_TRUE(contains(J, apply(s, g))) << s.to_string() << I.name();
      if (I.kind() != PrimeKind::P && I.kind() != PrimeKind::Q && I.kind() != PrimeKind::R) EXPECT_EQ(J, I);
      EXPECT_EQ(act_on_spectrum(inverse(s), J), I);
    }
  }
}
