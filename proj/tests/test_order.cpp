#include <random>

#include <gtest/gtest.h>

#include "gaussorder/order.hpp"
#include "oracles.hpp"

namespace {

using namespace gaussorder;

TEST(ElementOrder, Examples) {
  const auto fp = make_params(2, 5);
  const OrderResult r1 = element_order(fp, build_element(fp, 1, 1, 1));
  EXPECT_EQ(r1.order, 15);
  EXPECT_EQ(r1.group_order, 15);
  EXPECT_EQ(r1.factorization_of_group_order.to_string(), "3 * 5");
  EXPECT_EQ(element_order(fp, gauss_period(fp)).order, 3);
}

TEST(ElementOrder, Errors) {
  const auto big = make_params(11, 1009);
  try {
    (void)element_order(big, build_element(big, 0, 1, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GuardExceeded);
  }
  const auto fp = make_params(2, 5);
  try {
    (void)element_order(fp, FieldElement::zero(fp));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroElement);
  }
}

TEST(ElementOrder, MatchesBruteForceWalk) {
  std::mt19937_64 rng(31);
  for (auto [p, r, samples] : {std::tuple{2, 5, 15}, {3, 5, 30}, {2, 11, 30}, {3, 7, 30}, {2, 13, 10}, {5, 7, 4}}) {
    const auto fp = make_params(p, r);
    const MultiplicativeGroup group(fp);
    const oracle::NaiveField naive{fp.p(), fp.r()};
    for (int i = 0; i < samples; ++i) {
      std::vector<Residue> c(fp.degree());
      for (auto& v : c) v = rng() % fp.p();
      const FieldElement x(fp, c);
      if (x.is_zero()) continue;
      EXPECT_EQ(group.element_order(x), naive.order(x.coeffs())) << format_element(x);
    }
  }
}

TEST(ElementOrder, MinimalityCertificate) {
  std::mt19937_64 rng(37);
  for (auto [p, r] : {std::pair{2, 19}, {5, 23}, {13, 19}, {11, 23}, {3, 17}}) {
    const auto fp = make_params(p, r);
    const MultiplicativeGroup group(fp);
    EXPECT_EQ(group.factors().value(), fp.group_order());
    for (int i = 0; i < 6; ++i) {
      std::vector<Residue> c(fp.degree());
      for (auto& v : c) v = rng() % fp.p();
      const FieldElement x(fp, c);
      if (x.is_zero()) continue;
      const Natural ord = group.element_order(x);
      EXPECT_EQ(fp.group_order() % ord, 0);
      EXPECT_TRUE(x.pow(ord).is_one());
      for (const auto& pp : factorize(ord)) EXPECT_FALSE(x.pow(ord / pp.prime).is_one());
    }
  }
}

TEST(FactorPPowerMinusOne, AgreesWithDirectFactorization) {
  for (auto [p, n] : {std::pair{2, 4}, {3, 18}, {13, 18}, {11, 22}, {7, 22}, {2, 96}}) {
    EXPECT_EQ(factor_p_power_minus_one(p, n, 128),
              factorize(boost::multiprecision::pow(Natural(p), static_cast<unsigned>(n)) - 1, 128));
  }
  EXPECT_THROW((void)factor_p_power_minus_one(2, 97, 96), Error);
}

TEST(SubgroupOrderPair, Examples) {
  const auto fp = make_params(2, 5);
  const auto period = gauss_period(fp);
  const auto prim = build_element(fp, 1, 1, 1);
  EXPECT_EQ(subgroup_order_pair(fp, period, prim), 15);
  EXPECT_EQ(subgroup_order_pair(fp, period, period), 3);
  EXPECT_EQ(subgroup_order_pair(fp, prim, FieldElement::one(fp)), 15);
}

TEST(DecomposeVW, SmallExample) {
  const auto fp = make_params(5, 7);
  const VW vw = decompose_vw(fp, 0, 2);
  const auto theta = FieldElement::theta(fp);
  const auto two = FieldElement::constant(fp, 2);
  const auto theta_inv = inv(theta);
  EXPECT_EQ(vw.v, theta_inv * (two * theta + FieldElement::one(fp)) * inv(theta + two));
  EXPECT_EQ(vw.w, theta_inv * (two * theta + FieldElement::one(fp)) * (theta + two));
  EXPECT_TRUE(vw_matches_powers(fp, 0, 2));

  const MultiplicativeGroup group(fp);
  EXPECT_EQ(group.order(), 15624);
  const Natural ps = fp.p_to_s();
  EXPECT_EQ((ps + 1) % group.element_order(vw.v), 0);
  EXPECT_EQ((ps - 1) % group.element_order(vw.w), 0);
}

TEST(DecomposeVW, ClosedFormsHoldForEveryE) {
  for (auto [p, r] : {std::pair{5, 7}, {3, 7}, {7, 11}, {2, 13}}) {
    const auto fp = make_params(p, r);
    for (std::int64_t e = -3; e < static_cast<std::int64_t>(r) + 2; ++e) {
      for (std::int64_t a = 1; a < p; ++a) {
        EXPECT_TRUE(vw_matches_powers(fp, e, a)) << p << " " << r << " e=" << e << " a=" << a;
        const VW vw = decompose_vw(fp, e, a);
        const auto t = FieldElement::theta(fp);
        const auto ca = FieldElement::constant(fp, a);
        const auto numer = ca * t + FieldElement::one(fp);
        EXPECT_EQ(vw.v * vw.w, FieldElement::monomial(fp, -2 * (e + 1)) * numer * numer);
      }
    }
  }
}

TEST(DecomposeVW, ZeroConstant) {
  EXPECT_THROW((void)decompose_vw(make_params(5, 7), 0, 0), Error);
}

TEST(VerifyZDecomposition, SmallExample) {
  const ZDecompositionReport rep = verify_z_decomposition(make_params(5, 7), 2);
  EXPECT_EQ(rep.branch, ZBranch::SquaredMobius);
  EXPECT_TRUE(rep.branch_condition);
  EXPECT_TRUE(rep.coprime());
  EXPECT_TRUE(rep.product_holds());
  EXPECT_TRUE(rep.bound_holds());
  EXPECT_EQ(rep.bound, 6);
  EXPECT_TRUE(rep.ok());
}

TEST(VerifyZDecomposition, BadInputs) {
  try {
    (void)verify_z_decomposition(make_params(2, 5), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadConstant);
  }
  EXPECT_THROW((void)verify_z_decomposition(make_params(3, 5), 2), Error);
}

TEST(VerifyZDecomposition, AllConstantsInMidSizeFields) {
  for (auto [p, r] : {std::pair{5, 17}, {7, 13}, {11, 13}, {13, 19}, {7, 23}}) {
    const auto fp = make_params(p, r);
    const MultiplicativeGroup group(fp);
    for (std::int64_t a = 2; a + 1 < p; ++a) {
      const auto rep = verify_z_decomposition(group, a);
      EXPECT_TRUE(rep.ok()) << p << " " << r << " a=" << a << " ord(z)=" << rep.order_z;
    }
  }
}

}  // namespace
