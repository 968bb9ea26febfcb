#include "armafisher/bezout.h"

#include <cmath>

#include <Eigen/SVD>
#include <gtest/gtest.h>

#include "armafisher/error.h"
#include "armafisher/structmat.h"
#include "testing/expect.h"
#include "testing/families.h"

namespace armafisher {
namespace {

using testing::ExpectThrowsCode;
using testing::Rng;

const Polynomial kA = MakePolynomial({1, -0.8, 0.15});
const Polynomial kB = MakePolynomial({1, -0.3, -0.1});

Matrix PlantedBezout() {
  Matrix m(2, 2);
  m << -0.5, 0.25, 0.25, -0.125;
  return m;
}

std::vector<Complex> FactorParameters(const Polynomial& p) {
  std::vector<Complex> out;
  for (const Root& r : RootsOfReciprocal(p).roots) {
    for (int k = 0; k < r.multiplicity; ++k) out.push_back(r.value);
  }
  return out;
}

TEST(BezoutMatrix, Examples) {
  const Matrix b1 =
      BezoutMatrix(MakePolynomial({1, 0.5}), MakePolynomial({1, 0.3}));
  ASSERT_EQ(b1.rows(), 1);
  EXPECT_NEAR(b1(0, 0), 0.2, 1e-15);
  EXPECT_TRUE(BezoutMatrix(kA, kA).isZero());
  EXPECT_LE((BezoutMatrix(kA, kB) - PlantedBezout()).norm(), 1e-15);
}

TEST(BezoutMatrix, RejectsBadDegrees) {
  ExpectThrowsCode([] { BezoutMatrix(kA, MakePolynomial({1, 0.5})); },
                   ErrorCode::kDegreeMismatch);
  ExpectThrowsCode([] { BezoutMatrix(MakePolynomial({1}), MakePolynomial({1})); },
                   ErrorCode::kBadDimension);
}

TEST(BezoutMatrix, SatisfiesDefiningIdentity) {
  Rng rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 6;
    const Polynomial a = testing::RandomStablePolynomial(rng, n);
    const Polynomial b = testing::RandomStablePolynomial(rng, n);
    const CMatrix bez = BezoutMatrix(a, b).cast<Complex>();
    for (int k = 0; k < 50; ++k) {
      const Complex z(testing::Uniform(rng, -1.5, 1.5), testing::Uniform(rng, -1.5, 1.5));
      const Complex w(testing::Uniform(rng, -1.5, 1.5), testing::Uniform(rng, -1.5, 1.5));
      const Complex lhs = testing::BezoutKernelValue(a, b, z, w);
      const Complex rhs = (z - w) * (UVector(n, z).transpose() * bez *
                                     UVector(n, w))(0, 0);
      const double scale = 1 + std::abs(a.Evaluate(z) * b.Evaluate(w)) +
                           std::abs(a.Evaluate(w) * b.Evaluate(z));
      EXPECT_LE(std::abs(lhs - rhs), 1e-10 * scale) << "n=" << n;
    }
  }
}

TEST(BezoutMatrix, SymmetricAndAntisymmetricInArguments) {
  Rng rng(22);
  for (int n = 1; n <= 6; ++n) {
    const Polynomial a = testing::RandomStablePolynomial(rng, n);
    const Polynomial b = testing::RandomStablePolynomial(rng, n);
    const Matrix ab = BezoutMatrix(a, b);
    EXPECT_LE((ab - ab.transpose()).norm(), 1e-14 * (1 + ab.norm()));
    EXPECT_LE((ab + BezoutMatrix(b, a)).norm(), 1e-14 * (1 + ab.norm()));
  }
}

TEST(BezoutMatrix, RankDropsByGcdDegree) {
  Rng rng(23);
  for (int trial = 0; trial < 45; ++trial) {
    const int n = 2 + trial % 4;
    const int d = std::min(trial % 3, n - 1);
    const testing::ModelPair pair = testing::PlantedPair(rng, n, n, d);
    EXPECT_EQ(NumericalRank(BezoutMatrix(pair.a, pair.c), 1e-8), n - d)
        << "n=" << n << " d=" << d;
  }
}

TEST(BezoutDecomposeOnce, PlantedExample) {
  const BezoutDecomposition dec = BezoutDecomposeOnce(kA, kB, 0.5, 0.5);
  ASSERT_EQ(dec.inner.rows(), 1);
  EXPECT_NEAR(std::abs(dec.inner(0, 0) - Complex(-0.5)), 0.0, 1e-15);
  EXPECT_LE((dec.reconstruction.real() - PlantedBezout()).norm(), 1e-14);
  EXPECT_LE(dec.reconstruction.imag().norm(), 1e-15);
  EXPECT_NEAR(std::abs(dec.a_alpha(0) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(dec.a_alpha(1) - Complex(-0.3)), 0.0, 1e-15);
}

TEST(BezoutDecomposeOnce, EqualArgumentsGiveZero) {
  const BezoutDecomposition dec = BezoutDecomposeOnce(kA, kA, 0.5, 0.3);
  EXPECT_LE(dec.reconstruction.norm(), 1e-15);
}

TEST(BezoutDecomposeOnce, DegreeOne) {
  const BezoutDecomposition dec = BezoutDecomposeOnce(
      MakePolynomial({1, 0.5}), MakePolynomial({1, 0.3}), -0.5, -0.3);
  EXPECT_EQ(dec.inner.rows(), 0);
  ASSERT_EQ(dec.reconstruction.rows(), 1);
  EXPECT_NEAR(std::abs(dec.reconstruction(0, 0) - 0.2), 0.0, 1e-15);
}

TEST(BezoutDecomposeOnce, RejectsNonFactor) {
  ExpectThrowsCode([] { BezoutDecomposeOnce(kA, kB, 0.4, 0.5); },
                   ErrorCode::kNotAFactor);
  ExpectThrowsCode([] { BezoutDecomposeOnce(kA, kB, 0.5, 0.3); },
                   ErrorCode::kNotAFactor);
}

TEST(BezoutExpansion, Examples) {
  const CMatrix one = BezoutExpansion(MakePolynomial({1, 0.5}),
                                      MakePolynomial({1, 0.3}), std::vector<Complex>{-0.5},
                                      std::vector<Complex>{-0.3});
  EXPECT_NEAR(std::abs(one(0, 0) - 0.2), 0.0, 1e-15);
  const std::vector<Complex> alphas = {0.5, 0.3};
  EXPECT_LE(BezoutExpansion(kA, kA, alphas, alphas).norm(), 1e-15);
  const CMatrix planted =
      BezoutExpansion(kA, kB, alphas, std::vector<Complex>{0.5, -0.2});
  EXPECT_LE((planted.real() - PlantedBezout()).norm(), 1e-14);
}

TEST(BezoutExpansion, RejectsWrongFactorLists) {
  const std::vector<Complex> wrong = {0.5, 0.31};
  const std::vector<Complex> right = {0.5, -0.2};
  ExpectThrowsCode([&] { BezoutExpansion(kA, kB, wrong, right); },
                   ErrorCode::kBadFactorization);
  const std::vector<Complex> short_list = {0.5};
  ExpectThrowsCode([&] { BezoutExpansion(kA, kB, short_list, right); },
                   ErrorCode::kBadFactorization);
}

TEST(BezoutExpansion, AgreesWithRecursionAndPeeling) {
  Rng rng(24);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 6;
    const Polynomial a = testing::RandomStablePolynomial(rng, n);
    const Polynomial b = testing::RandomStablePolynomial(rng, n);
    const std::vector<Complex> alphas = FactorParameters(a);
    const std::vector<Complex> betas = FactorParameters(b);
    const CMatrix direct = BezoutMatrix(a, b).cast<Complex>();
    const CMatrix expanded = BezoutExpansion(a, b, alphas, betas);
    const CMatrix peeled =
        BezoutDecomposeOnce(a, b, alphas[0], betas[0]).reconstruction;
    const double scale = 1 + direct.norm();
    EXPECT_LE((expanded - direct).norm(), 1e-10 * scale) << n;
    EXPECT_LE((peeled - direct).norm(), 1e-10 * scale) << n;
  }
}

TEST(BezoutCommonZeroFactor, PlantedExample) {
  const CommonZeroFactor f = BezoutCommonZeroFactor(kA, kB, 0.5);
  ASSERT_EQ(f.inner.rows(), 1);
  EXPECT_NEAR(std::abs(f.inner(0, 0) - Complex(-0.5)), 0.0, 1e-15);
  const CMatrix u = UPhiMatrix(2, 0.5);
  CMatrix padded = CMatrix::Zero(2, 2);
  padded.topLeftCorner(1, 1) = f.inner;
  EXPECT_LE((u * padded * u.transpose() - PlantedBezout().cast<Complex>()).norm(),
            1e-14);
}

TEST(BezoutCommonZeroFactor, SharedLinearFactor) {
  const Polynomial a = MakePolynomial({1, -0.4});
  const CommonZeroFactor f = BezoutCommonZeroFactor(a, a, 0.4);
  EXPECT_EQ(f.inner.rows(), 0);
  EXPECT_TRUE(BezoutMatrix(a, a).isZero());
}

TEST(BezoutCommonZeroFactor, RepeatedFactorDeflatesTwice) {
  // a = (1 - 0.5z)^2 (1 + 0.2z), b = (1 - 0.5z)^2 (1 - 0.7z).
  const Polynomial sq = MakePolynomial({1, -1.0, 0.25});
  const Polynomial a = Product(sq, MakePolynomial({1, 0.2}));
  const Polynomial b = Product(sq, MakePolynomial({1, -0.7}));
  const CommonZeroFactor first = BezoutCommonZeroFactor(a, b, 0.5);
  ASSERT_EQ(first.inner.rows(), 2);
  const CommonZeroFactor second = BezoutCommonZeroFactor(
      first.a_deflated, first.b_deflated, Complex(0.5));
  ASSERT_EQ(second.inner.rows(), 1);
  EXPECT_NEAR(std::abs(second.inner(0, 0) - Complex(0.2 + 0.7)), 0.0, 1e-14);
  ExpectThrowsCode(
      [&] {
        BezoutCommonZeroFactor(second.a_deflated, second.b_deflated,
                               Complex(0.5));
      },
      ErrorCode::kNotAFactor);
}

TEST(BezoutCommonZeroFactor, RejectsNonCommonZero) {
  ExpectThrowsCode([] { BezoutCommonZeroFactor(kA, kB, 0.3); },
                   ErrorCode::kNotAFactor);
}

TEST(BezoutKernelBasis, PlantedExample) {
  const KernelBasis kb = BezoutKernelBasis(kA, kB);
  ASSERT_EQ(kb.vectors.size(), 1u);
  ASSERT_EQ(kb.common_roots.size(), 1u);
  EXPECT_NEAR(std::abs(kb.common_roots[0].value - 0.5), 0.0, 1e-12);
  const CVector& v = kb.vectors[0];
  EXPECT_NEAR(std::abs(v(0) - 0.5), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(v(1) - 1.0), 0.0, 1e-12);
  EXPECT_LE((PlantedBezout().cast<Complex>() * v).norm(), 1e-12);
}

TEST(BezoutKernelBasis, NoCommonZeros) {
  const KernelBasis kb =
      BezoutKernelBasis(kA, MakePolynomial({1, 0.1, -0.2}));
  EXPECT_TRUE(kb.vectors.empty());
  EXPECT_TRUE(kb.common_roots.empty());
}

TEST(BezoutKernelBasis, EqualArgumentsSpanEverything) {
  const KernelBasis kb = BezoutKernelBasis(kA, kA);
  ASSERT_EQ(kb.vectors.size(), 2u);
  CMatrix stacked(2, 2);
  stacked << kb.vectors[0], kb.vectors[1];
  EXPECT_EQ(NumericalRank(stacked, 1e-8), 2);
}

TEST(BezoutKernelBasis, PlantedFamiliesWithMultiplicity) {
  Rng rng(25);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 4;
    const int d = 1 + trial % 2;
    testing::ModelPair pair = testing::PlantedPair(rng, n, n, d);
    if (trial % 3 == 0) {
      // Repeat the planted zeros so each appears with multiplicity two.
      const Polynomial f = testing::PolynomialFromRoots(pair.common);
      pair.a = Product(pair.a, f);
      pair.c = Product(pair.c, f);
    }
    const Matrix bez = BezoutMatrix(pair.a, pair.c);
    const KernelBasis kb = BezoutKernelBasis(pair.a, pair.c);
    const int expected = trial % 3 == 0 ? 2 * d : d;
    EXPECT_EQ(NumericalRank(bez, 1e-8), pair.a.degree() - expected);
    ASSERT_EQ(static_cast<int>(kb.vectors.size()), expected) << trial;
    int total = 0;
    for (const Root& r : kb.common_roots) total += r.multiplicity;
    EXPECT_EQ(total, expected);
    CMatrix stacked(bez.rows(), kb.vectors.size());
    for (size_t k = 0; k < kb.vectors.size(); ++k) {
      const CVector& v = kb.vectors[k];
      stacked.col(k) = v;
      EXPECT_LE((bez.cast<Complex>() * v).norm(), 1e-8 * bez.norm() * v.norm());
    }
    EXPECT_EQ(NumericalRank(stacked, 1e-8), expected);
    EXPECT_LE(kb.max_residual, 1e-8);
  }
}

}  // namespace
}  // namespace armafisher
