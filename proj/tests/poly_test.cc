#include "armafisher/poly.h"

#include <gtest/gtest.h>

#include "armafisher/error.h"
#include "testing/expect.h"
#include "testing/families.h"

namespace armafisher {
namespace {

using testing::ExpectThrowsCode;
using testing::Rng;

std::vector<double> Coeffs(const Polynomial& p) {
  auto c = p.coefficients();
  return {c.begin(), c.end()};
}

TEST(MakePolynomial, Degrees) {
  EXPECT_EQ(MakePolynomial({1}).degree(), 0);
  EXPECT_EQ(MakePolynomial({1, 0.5}).degree(), 1);
}

TEST(MakePolynomial, RejectsBadInput) {
  ExpectThrowsCode([] { MakePolynomial({2, 0.5}); },
                   ErrorCode::kConstantTermNotOne);
  ExpectThrowsCode([] { MakePolynomial({}); }, ErrorCode::kEmptyCoefficients);
}

TEST(Reciprocal, ReversesCoefficients) {
  EXPECT_EQ(Reciprocal(MakePolynomial({1, 0.5})), (std::vector<double>{0.5, 1}));
  EXPECT_EQ(Reciprocal(MakePolynomial({1})), (std::vector<double>{1}));
  EXPECT_EQ(Reciprocal(MakePolynomial({1, -0.8, 0.15})),
            (std::vector<double>{0.15, -0.8, 1}));
}

TEST(Reciprocal, IsAnInvolution) {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial p = testing::RandomStablePolynomial(rng, 1 + trial % 6);
    std::vector<double> twice = Reciprocal(p);
    std::reverse(twice.begin(), twice.end());
    EXPECT_EQ(twice, Coeffs(p));
  }
}

TEST(Product, Examples) {
  const Polynomial g = Product(MakePolynomial({1, 0.5}), MakePolynomial({1, 0.3}));
  ASSERT_EQ(g.degree(), 2);
  EXPECT_DOUBLE_EQ(g[1], 0.8);
  EXPECT_DOUBLE_EQ(g[2], 0.15);
  EXPECT_EQ(Coeffs(Product(MakePolynomial({1}), MakePolynomial({1, 0.7}))),
            (std::vector<double>{1, 0.7}));
  EXPECT_EQ(Coeffs(Product(MakePolynomial({1, -0.5}), MakePolynomial({1, 0.5}))),
            (std::vector<double>{1, 0, -0.25}));
}

TEST(Product, MatchesPointwiseProduct) {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const Polynomial a = testing::RandomStablePolynomial(rng, 1 + trial % 5);
    const Polynomial c = testing::RandomStablePolynomial(rng, 1 + trial % 4);
    const Polynomial g = Product(a, c);
    for (int k = 0; k < 20; ++k) {
      const Complex z(testing::Uniform(rng, -2, 2), testing::Uniform(rng, -2, 2));
      const Complex expected = a.Evaluate(z) * c.Evaluate(z);
      EXPECT_LE(std::abs(g.Evaluate(z) - expected),
                1e-12 * std::max(1.0, std::abs(expected)));
    }
  }
}

TEST(HornerSequence, Examples) {
  auto h = HornerSequence(MakePolynomial({1, 0.5}), 2.0);
  ASSERT_EQ(h.size(), 1u);
  EXPECT_EQ(h[0], Complex(1.0));

  const Polynomial p = MakePolynomial({1, -0.8, 0.15});
  h = HornerSequence(p, 0.0);
  ASSERT_EQ(h.size(), 2u);
  EXPECT_EQ(h[1], Complex(-0.8));

  h = HornerSequence(p, 0.5);
  EXPECT_NEAR(std::abs(h[1] - Complex(-0.3)), 0.0, 1e-15);
  // One more step lands on p̂(0.5) = 0.
  EXPECT_NEAR(std::abs(0.5 * h[1] + p[2]), 0.0, 1e-15);
}

TEST(HornerSequence, ExtendedStepEvaluatesReciprocal) {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial p = testing::RandomStablePolynomial(rng, 1 + trial % 6);
    const Complex lambda(testing::Uniform(rng, -1, 1), testing::Uniform(rng, -1, 1));
    const auto h = HornerSequence(p, lambda);
    const Complex last = lambda * h.back() + p[p.degree()];
    EXPECT_LE(std::abs(last - p.EvaluateReciprocal(lambda)), 1e-13);
  }
}

TEST(RootsOfReciprocal, Examples) {
  RootSet r = RootsOfReciprocal(MakePolynomial({1, -0.5}));
  ASSERT_EQ(r.roots.size(), 1u);
  EXPECT_NEAR(std::abs(r.roots[0].value - 0.5), 0.0, 1e-12);

  r = RootsOfReciprocal(MakePolynomial({1, 0, -0.25}));
  ASSERT_EQ(r.roots.size(), 2u);
  std::vector<double> re{r.roots[0].value.real(), r.roots[1].value.real()};
  std::sort(re.begin(), re.end());
  EXPECT_NEAR(re[0], -0.5, 1e-12);
  EXPECT_NEAR(re[1], 0.5, 1e-12);

  r = RootsOfReciprocal(MakePolynomial({1, -1.0, 0.25}));
  ASSERT_EQ(r.roots.size(), 1u);
  EXPECT_EQ(r.roots[0].multiplicity, 2);
  EXPECT_NEAR(std::abs(r.roots[0].value - 0.5), 0.0, 1e-10);
}

TEST(RootsOfReciprocal, DegreeZeroIsEmpty) {
  EXPECT_TRUE(RootsOfReciprocal(MakePolynomial({1})).roots.empty());
}

TEST(RootsOfReciprocal, NoConvergenceWhenBudgetTooSmall) {
  RootFinderOptions opt;
  opt.max_iter = 1;
  ExpectThrowsCode(
      [&] { RootsOfReciprocal(MakePolynomial({1, 0.3, -0.2, 0.1, 0.05}), opt); },
      ErrorCode::kNoConvergence);
}

TEST(RootsOfReciprocal, ReconstructsCoefficients) {
  Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 6;
    const Polynomial p = testing::RandomStablePolynomial(rng, n);
    const RootSet r = RootsOfReciprocal(p);
    EXPECT_EQ(r.TotalMultiplicity(), n);
    std::vector<Complex> params;
    for (const Root& root : r.roots) {
      for (int k = 0; k < root.multiplicity; ++k) params.push_back(root.value);
    }
    const CoeffVector rebuilt = FromFactorParameters(params);
    for (int k = 0; k <= n; ++k) {
      EXPECT_LE(std::abs(rebuilt[k] - p[k]), 1e-8) << "trial " << trial;
    }
  }
}

TEST(RootsOfReciprocal, RepeatedRootsAreClustered) {
  const Polynomial p = testing::PolynomialFromRoots({0.4, 0.4, Complex(0.1, 0.5),
                                                     Complex(0.1, -0.5), -0.6});
  const RootSet r = RootsOfReciprocal(p);
  EXPECT_EQ(r.roots.size(), 4u);
  EXPECT_EQ(r.TotalMultiplicity(), 5);
}

TEST(CommonRoots, Examples) {
  auto common = CommonRoots(MakePolynomial({1, -0.5}), MakePolynomial({1, -0.5}));
  ASSERT_EQ(common.size(), 1u);
  EXPECT_NEAR(common[0].value.real(), 0.5, 1e-12);
  EXPECT_EQ(common[0].multiplicity, 1);

  common = CommonRoots(MakePolynomial({1, -0.8, 0.15}),
                       MakePolynomial({1, -0.3, -0.1}));
  ASSERT_EQ(common.size(), 1u);
  EXPECT_NEAR(std::abs(common[0].value - 0.5), 0.0, 1e-10);
  EXPECT_EQ(common[0].multiplicity, 1);

  EXPECT_TRUE(CommonRoots(MakePolynomial({1, -0.5}), MakePolynomial({1, 0.3})).empty());
}

TEST(CommonRoots, SharedDoubleRoot) {
  const Polynomial a = testing::PolynomialFromRoots({0.5, 0.5, -0.3});
  const Polynomial c = testing::PolynomialFromRoots({0.5, 0.5, 0.7});
  const auto common = CommonRoots(a, c);
  ASSERT_EQ(common.size(), 1u);
  EXPECT_EQ(common[0].multiplicity, 2);
}

TEST(DeflateFactor, RemovesPlantedFactor) {
  const CoeffVector p = ToComplex(MakePolynomial({1, -0.8, 0.15}));
  const Deflation d = DeflateFactor(p, 0.5);
  EXPECT_LE(d.residual, 1e-15);
  ASSERT_EQ(d.quotient.size(), 2u);
  EXPECT_NEAR(std::abs(d.quotient[1] - Complex(-0.3)), 0.0, 1e-15);
  EXPECT_GT(DeflateFactor(p, 0.9).residual, 1e-3);
}

}  // namespace
}  // namespace armafisher
