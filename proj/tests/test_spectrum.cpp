#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "qsa/spectrum.hpp"

using namespace qsa;

namespace {

// Order of representatives(): zero, X, phi, Y, E, YE, P, Q, R.
std::vector<std::vector<bool>> drawn_closure() {
  const std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4},
                                                  {3, 5}, {4, 5}, {5, 6}, {1, 7}, {2, 8}};
  std::vector<std::vector<bool>> r(9, std::vector<bool>(9, false));
  for (int i = 0; i < 9; ++i) r[i][i] = true;
  for (auto [a, b] : edges) r[a][b] = true;
  for (int k = 0; k < 9; ++k)
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j < 9; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  return r;
}

}  // namespace

TEST(Spectrum, ContainsExamples) {
  EXPECT_TRUE(contains(PrimeIdeal::y(), AlgebraElement::X()));
  EXPECT_TRUE(contains(PrimeIdeal::e(), AlgebraElement::X()));
  EXPECT_TRUE(contains(PrimeIdeal::e(), phi()));
  EXPECT_FALSE(contains(PrimeIdeal::phi(), AlgebraElement::X()));
  EXPECT_FALSE(contains(PrimeIdeal::x(), phi()));
  EXPECT_TRUE(contains(PrimeIdeal::zero(), AlgebraElement()));
  EXPECT_FALSE(contains(PrimeIdeal::zero(), AlgebraElement::Y()));
  const Scalar z = Scalar::parse("q + 3");
  EXPECT_TRUE(contains(PrimeIdeal::q(z), element_Z() - z));
  EXPECT_FALSE(contains(PrimeIdeal::q(z), element_Z()));
  EXPECT_TRUE(contains(PrimeIdeal::r(z), element_C() - z));
  EXPECT_TRUE(contains(PrimeIdeal::p(z), AlgebraElement::K(-1) - z.inverse()));
}

TEST(Spectrum, LeqExamples) {
  EXPECT_TRUE(leq(PrimeIdeal::x(), PrimeIdeal::y()));
  EXPECT_TRUE(leq(PrimeIdeal::x(), PrimeIdeal::e()));
  EXPECT_FALSE(leq(PrimeIdeal::y(), PrimeIdeal::e()));
  EXPECT_FALSE(leq(PrimeIdeal::x(), PrimeIdeal::phi()));
  EXPECT_FALSE(leq(PrimeIdeal::phi(), PrimeIdeal::x()));
  EXPECT_FALSE(leq(PrimeIdeal::q(Scalar(1)), PrimeIdeal::q(Scalar(2))));
}

TEST(Spectrum, LeqMatrixIsTheDrawnDiagram) {
  const HasseDiagram h = hasse();
  EXPECT_EQ(h.leq, drawn_closure());
  EXPECT_EQ(h.covers.size(), 11u);
  EXPECT_EQ(h.nodes.front(), "zero");
  for (std::size_t j = 0; j < h.nodes.size(); ++j) EXPECT_TRUE(h.leq[0][j]);
}

TEST(Spectrum, MaximalNodes) {
  const HasseDiagram h = hasse();
  std::vector<std::string> tops;
  for (std::size_t i = 0; i < h.nodes.size(); ++i) {
    bool top = true;
    for (std::size_t j = 0; j < h.nodes.size(); ++j)
      if (i != j && h.leq[i][j]) top = false;
    if (top) tops.push_back(h.nodes[i]);
  }
  EXPECT_EQ(tops, (std::vector<std::string>{"P_family", "Q_family", "R_family"}));
}

TEST(Spectrum, Classify) {
  for (const auto& I : representatives()) {
    const Classification c = classify(I);
    EXPECT_TRUE(c.completely_prime);
    const bool top = I.kind() == PrimeKind::P || I.kind() == PrimeKind::Q || I.kind() == PrimeKind::R;
    EXPECT_EQ(c.maximal, top) << I.name();
    const bool prim = top || I.kind() == PrimeKind::Y || I.kind() == PrimeKind::E || I.kind() == PrimeKind::Zero;
    EXPECT_EQ(c.primitive, prim) << I.name();
  }
  EXPECT_FALSE(classify(PrimeIdeal::ye()).primitive);
  EXPECT_FALSE(classify(PrimeIdeal::x()).primitive);
  EXPECT_THROW(PrimeIdeal::q(Scalar()), std::invalid_argument);
  EXPECT_THROW(PrimeIdeal::r(Scalar()), std::invalid_argument);
  EXPECT_THROW(PrimeIdeal::p(Scalar()), std::invalid_argument);
}

TEST(Spectrum, DotIsDeterministic) {
  const std::string a = hasse().dot(), b = hasse().dot();
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("zero -> X;"), std::string::npos);
  EXPECT_NE(a.find("YE -> P_family;"), std::string::npos);
  EXPECT_NE(a.find("phi -> R_family;"), std::string::npos);
  const auto j = hasse().to_json();
  EXPECT_EQ(j["nodes"].size(), 9u);
  EXPECT_EQ(j["covers"]["zero"], nlohmann::json({"X", "phi"}));
}

TEST(Spectrum, MemberBounded) {
  EXPECT_EQ(member_bounded({AlgebraElement::Y()}, AlgebraElement::X(), 3), Membership::Yes);
  EXPECT_EQ(member_bounded({AlgebraElement::X()}, AlgebraElement::X().pow(2), 4), Membership::Yes);
  EXPECT_EQ(member_bounded({phi()}, AlgebraElement::X(), 4), Membership::Unknown);
  EXPECT_EQ(member_bounded({AlgebraElement::E()}, phi(), 3), Membership::Yes);
}

TEST(SpectrumProperty, BoundedMembershipIsSound) {
  ElementSampler s(31);
  const std::vector<PrimeIdeal> ideals = {PrimeIdeal::x(), PrimeIdeal::phi(), PrimeIdeal::y(), PrimeIdeal::e(),
                                          PrimeIdeal::ye(), PrimeIdeal::p(Scalar(2)), PrimeIdeal::q(Scalar::q()),
                                          PrimeIdeal::r(Scalar(-1))};
  for (const auto& I : ideals) {
    const IdealSlice slice(I.generators(), 5);
    int yes = 0;
    for (int t = 0; t < 50; ++t) {
      // Half the samples are built inside the ideal so that both outcomes occur.
      AlgebraElement x = s.element(3, 3);
      if (t % 2 == 0) {
        const auto& g = I.generators()[static_cast<std::size_t>(t / 2) % I.generators().size()];
        x = AlgebraElement(s.monomial(1)) * g * AlgebraElement(s.monomial(1));
        if (x.degree() > 5) continue;
      }
      if (slice.test(x) == Membership::Yes) {
        ++yes;
        EXPECT_TRUE(contains(I, x)) << I.name() << " " << x.to_string();
      }
    }
    EXPECT_GT(yes, 0) << I.name();
  }
}

TEST(SpectrumProperty, CompletelyPrime) {
  ElementSampler s(32);
  for (const auto& I : representatives(Scalar(3), Scalar::parse("q^2"))) {
    int tried = 0;
    for (int t = 0; t < 2000 && tried < 100; ++t) {
      const auto pick = [&] {
        return s.element() + s.coefficient() * AlgebraElement::K(static_cast<long>(s.rng()() % 5) - 2);
      };
      const AlgebraElement x = pick(), y = pick();
      if (contains(I, x) || contains(I, y)) continue;
      ++tried;
      EXPECT_FALSE(contains(I, x * y)) << I.name();
    }
    EXPECT_EQ(tried, 100) << I.name();
  }
}

TEST(SpectrumProperty, FactorMapsAreWellDefined) {
  for (const auto& I : representatives())
    if (I.map()) EXPECT_TRUE(check_well_defined(*I.map()).all_passed()) << I.name();
}
