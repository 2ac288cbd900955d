#include <gtest/gtest.h>

#include "qsa/gwa.hpp"

using namespace qsa;

namespace {

const Scalar q = Scalar::q();
const Scalar qi = Scalar::q_power(-1);

// K[H] with sigma(H) = qH and a = H, a quantum-plane-like GWA.
GWAData::Ptr small_gwa() {
  const auto D = QCAlgebra::make("K[H]", {"H"}, {false}, {{0}});
  return GWAData::diagonal(D, {1}, D->gen(0) + D->one());
}

// K[H^+-1, W] with a non-diagonal sigma: sigma(W) = W + H.
GWAData::Ptr affine_gwa() {
  const auto D = QCAlgebra::make("K[H^+-1,W]", {"H", "W"}, {true, false}, {{0, 0}, {0, 0}});
  const QCElement H = D->gen(0), W = D->gen(1);
  return GWAData::make(D, {q * H, W + H}, {qi * H, W - qi * H}, H * W + Scalar(2) * D->one());
}

}  // namespace

TEST(Gwa, ProductExamples) {
  const auto g = small_gwa();
  const auto v1 = GWAElement::v(g, 1), vm1 = GWAElement::v(g, -1);
  EXPECT_EQ(v1 * vm1, GWAElement(g, g->apply_sigma(g->a(), 1)));
  EXPECT_EQ(vm1 * v1, GWAElement(g, g->a()));
  EXPECT_EQ(GWAElement::v(g, 2) * GWAElement::v(g, 0), GWAElement::v(g, 2));
  const QCElement H = g->D()->gen(0);
  EXPECT_EQ(v1 * GWAElement(g, H), GWAElement(g, q * H) * v1);
  EXPECT_EQ(vm1 * GWAElement(g, H), GWAElement(g, qi * H) * vm1);
  // (2, -3) = sigma^2(a) sigma(a)
  EXPECT_EQ(g->left_coefficient(2, -3), g->apply_sigma(g->a(), 2) * g->apply_sigma(g->a(), 1));
  // (-3, 2) = sigma^-2(a) sigma^-1(a)
  EXPECT_EQ(g->left_coefficient(-3, 2), g->apply_sigma(g->a(), -2) * g->apply_sigma(g->a(), -1));
  EXPECT_EQ(g->left_coefficient(2, 3), g->D()->one());
}

TEST(Gwa, InvalidData) {
  const auto D = QCAlgebra::make("K[H]", {"H"}, {false}, {{0}});
  EXPECT_THROW(GWAData::make(D, {q * D->gen(0)}, {D->gen(0)}, D->gen(0)), std::invalid_argument);
  const auto Dq = QCAlgebra::make("qplane", {"u", "w"}, {false, false}, {{0, 1}, {-1, 0}});
  EXPECT_THROW(GWAData::diagonal(Dq, {0, 0}, Dq->one()), std::invalid_argument);
}

TEST(Gwa, LawsOnSeveralRings) {
  for (const auto& g : {small_gwa(), affine_gwa(), e_gwa()}) {
    const Report r = gwa_law_check(g, 40, 4, 7);
    EXPECT_TRUE(r.all_passed()) << r.to_string();
  }
}

TEST(Gwa, AmbiskewForEReproducesAlpha) {
  const AmbiskewData e = e_ambiskew();
  const AmbiskewResult r = ambiskew_to_gwa(e);
  EXPECT_TRUE(r.report.all_passed()) << r.report.to_string();
  ASSERT_TRUE(r.alpha.has_value());
  const Scalar c = (qi - q).inverse();
  EXPECT_EQ(*r.alpha, c * e.D->gen(0));
  ASSERT_TRUE(r.form3);
  const QCElement X = r.form3->D()->gen(0), C = r.form3->D()->gen(1);
  EXPECT_EQ(r.form3->a(), q * C - c * X);
  EXPECT_EQ(r.form3->apply_sigma(C, 1), qi * C);
  EXPECT_EQ(r.form1->apply_sigma(r.form1->D()->gen(1), 1), qi * r.form1->D()->gen(1) + r.form1->D()->gen(0));
  EXPECT_TRUE(gwa_law_check(r.form1, 20, 3).all_passed());
  EXPECT_TRUE(gwa_law_check(r.form3, 20, 3).all_passed());
}

TEST(Gwa, PhiFromTheNormalElementC) {
  const AmbiskewResult r = ambiskew_to_gwa(e_ambiskew());
  // X -> X, C -> phi / (q (q^-1 - q)), v_1 -> E, v_-1 -> Y.
  const Scalar k = (q * (qi - q)).inverse();
  const GWAToA F{r.form3, {AlgebraElement::X(), k * phi()}, AlgebraElement::E(), AlgebraElement::Y()};
  const auto x = GWAElement::v(r.form3, 1), y = GWAElement::v(r.form3, -1);
  const GWAElement alpha(r.form3, extend(*r.alpha, r.form3->D()));
  const AlgebraElement C = F(GWAElement(r.form3, qi * r.form3->D()->one()) * (y * x + alpha));
  EXPECT_EQ(q * (qi - q) * C, phi());
  EXPECT_EQ(phi(), (qi - q) * (AlgebraElement::Y() * AlgebraElement::E()) + AlgebraElement::X());
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const GWAElement u = random_gwa(r.form3, rng, 3), w = random_gwa(r.form3, rng, 3);
    EXPECT_EQ(F(u * w), F(u) * F(w));
  }
}

TEST(Gwa, AmbiskewHomogeneousAndUnsolvable) {
  const auto D = QCAlgebra::make("K[T]", {"T"}, {false}, {{0}});
  const QCElement T = D->gen(0);
  const AmbiskewResult zero = ambiskew_to_gwa({D, {q * T}, {qi * T}, QCElement(D), D->constant(Scalar(3))});
  ASSERT_TRUE(zero.alpha.has_value());
  EXPECT_TRUE(zero.alpha->is_zero());
  EXPECT_EQ(zero.form3->a(), Scalar(3).inverse() * zero.form3->D()->gen(1));
  EXPECT_TRUE(zero.report.all_passed()) << zero.report.to_string();
  // rho = q, sigma(T) = qT, b = T: rho alpha - sigma(alpha) vanishes on T.
  const AmbiskewResult none = ambiskew_to_gwa({D, {q * T}, {qi * T}, T, D->constant(q)});
  EXPECT_FALSE(none.alpha.has_value());
  EXPECT_FALSE(none.form3);
  EXPECT_TRUE(none.form1);
}

TEST(Gwa, IsoECheck) {
  const Report r = iso_E_check(4, 200, 11);
  EXPECT_TRUE(r.all_passed()) << r.to_string();
  const GWAToA F = e_structure_map();
  EXPECT_EQ(F(GWAElement::v(F.data, 1) * GWAElement::v(F.data, -1)),
            (qi - q).inverse() * (qi * phi() - q * AlgebraElement::X()));
}

TEST(Gwa, Printing) {
  const auto g = small_gwa();
  const GWAElement x = GWAElement(g, g->D()->gen(0), -2) + GWAElement::v(g, 1);
  EXPECT_EQ(x.to_string(), "(H) * v_-2 + v_1");
  EXPECT_EQ(GWAElement(g).to_string(), "0");
}
