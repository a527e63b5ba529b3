#include <gtest/gtest.h>

#include <cmath>

#include "genshift/seqalg.hpp"
#include "test_support.hpp"

using namespace genshift;
using genshift::testing::cvec;

namespace {
const Complex I(0.0, 1.0);
}

TEST(PNorm, Examples) {
  const Vec x = cvec({3, 4, 0});
  EXPECT_NEAR(pnorm(x, PExponent::finite(2)), 5.0, 1e-12);
  EXPECT_NEAR(pnorm(x, PExponent::finite(1)), 7.0, 1e-12);
  EXPECT_DOUBLE_EQ(pnorm(cvec({1, -2, 2.0 * I}), PExponent::infinity()), 2.0);
}

TEST(PNorm, ZeroVectorAndEmpty) {
  EXPECT_EQ(pnorm(Vec::Zero(3), PExponent::finite(2.5)), 0.0);
  EXPECT_EQ(pnorm(Vec::Zero(3), PExponent::infinity()), 0.0);
  EXPECT_THROW(pnorm(Vec(0), PExponent::finite(1)), InvalidInput);
}

TEST(PNorm, NonIntegerExponentMatchesPowFormula) {
  std::mt19937_64 rng(7);
  for (double p : {1.25, 1.5, 2.75, 7.0}) {
    const Vec x = genshift::testing::random_vec(6, rng);
    double s = 0;
    for (Index i = 0; i < x.size(); ++i) s += std::pow(std::abs(x(i)), p);
    EXPECT_NEAR(pnorm(x, PExponent::finite(p)), std::pow(s, 1.0 / p), 1e-12);
  }
}

TEST(PExponent, RejectsBelowOne) {
  EXPECT_THROW(PExponent::finite(0.5), InvalidInput);
  EXPECT_THROW(PExponent::finite(std::nan("")), InvalidInput);
  EXPECT_THROW(PExponent::infinity().value(), InvalidInput);
  EXPECT_EQ(PExponent::finite(2), PExponent::finite(2.0));
  EXPECT_FALSE(PExponent::finite(2) == PExponent::infinity());
}

TEST(PointwiseAlgebra, Examples) {
  EXPECT_EQ(pointwise_mul(cvec({1, 2}), cvec({3, 4})), cvec({3, 8}));
  const Vec x = cvec({1.5, -I, 2});
  EXPECT_EQ(pointwise_mul(x, ones(3)), x);
  EXPECT_EQ(pointwise_mul(basis_vector(0, 2), basis_vector(1, 2)), Vec::Zero(2));
  EXPECT_EQ(add(cvec({1, 2}), cvec({3, 4})), cvec({4, 6}));
  EXPECT_EQ(scale(Complex(0), x), Vec::Zero(3));
  EXPECT_EQ(scale(I, cvec({1, 0})), cvec({I, 0}));
}

TEST(PointwiseAlgebra, LengthMismatch) {
  EXPECT_THROW(pointwise_mul(cvec({1, 2}), cvec({1, 2, 3})), DimensionError);
  EXPECT_THROW(add(cvec({1}), cvec({1, 2})), DimensionError);
}

TEST(Indicator, Examples) {
  EXPECT_EQ(indicator({1}, 3), cvec({0, 1, 0}));
  EXPECT_EQ(indicator(std::vector<Index>{}, 2), cvec({0, 0}));
  EXPECT_EQ(indicator({0, 1}, 3), cvec({1, 1, 0}));
  EXPECT_THROW(indicator({3}, 3), InvalidInput);
  EXPECT_THROW(indicator({-1}, 3), InvalidInput);
}

TEST(Coord, Examples) {
  EXPECT_EQ(coord(cvec({5, 6, 7}), 1), Complex(6));
  for (Index b = 0; b < 4; ++b)
    for (Index g = 0; g < 4; ++g) EXPECT_EQ(coord(basis_vector(b, 4), g), Complex(b == g ? 1 : 0));
  EXPECT_THROW(coord(cvec({1}), 1), InvalidInput);
}

TEST(ApproxEqual, CombinedTolerance) {
  EXPECT_TRUE(approx_equal(Complex(1e12), Complex(1e12 + 1.0)));
  EXPECT_FALSE(approx_equal(Complex(0.0), Complex(1e-8)));
  EXPECT_TRUE(approx_equal(Complex(0.0), Complex(5e-10)));
}

TEST(RequireFinite, RejectsNaN) {
  Vec v = cvec({1, 2});
  v(1) = Complex(std::nan(""), 0);
  EXPECT_THROW(require_finite(v), InvalidInput);
}

// Random-vector properties of the l^p norms.

class NormProperties : public ::testing::TestWithParam<double> {
 protected:
  PExponent p() const {
    return std::isinf(GetParam()) ? PExponent::infinity() : PExponent::finite(GetParam());
  }
};

TEST_P(NormProperties, Submultiplicative) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Index> len(1, 9);
  for (int i = 0; i < 2000; ++i) {
    const Index n = len(rng);
    const Vec x = genshift::testing::random_vec(n, rng, 3.0);
    const Vec y = genshift::testing::random_vec(n, rng, 3.0);
    EXPECT_LE(pnorm(pointwise_mul(x, y), p()), pnorm(x, p()) * pnorm(y, p()) + 1e-12);
  }
}

TEST_P(NormProperties, TriangleAndHomogeneity) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 1000; ++i) {
    const Vec x = genshift::testing::random_vec(5, rng);
    const Vec y = genshift::testing::random_vec(5, rng);
    const Complex c(std::ldexp(double(i % 7) - 3, -1), 0.25 * (i % 3));
    EXPECT_LE(pnorm(add(x, y), p()), pnorm(x, p()) + pnorm(y, p()) + 1e-12);
    EXPECT_NEAR(pnorm(scale(c, x), p()), std::abs(c) * pnorm(x, p()), 1e-12);
  }
}

TEST_P(NormProperties, SupNormIsSmallest) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 500; ++i) {
    const Vec x = genshift::testing::random_vec(6, rng, 4.0);
    EXPECT_LE(pnorm(x, PExponent::infinity()), pnorm(x, p()) + 1e-12);
  }
}

INSTANTIATE_TEST_SUITE_P(Exponents, NormProperties,
                         ::testing::Values(1.0, 1.5, 2.0, 3.0, INFINITY));
