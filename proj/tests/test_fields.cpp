#include <gtest/gtest.h>

#include <random>

#include "quivermod/linalg.hpp"
#include "support.hpp"

using namespace quivermod;
using test::mat;

namespace {

const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);
const FieldSpec F5 = FieldSpec::prime(5);
const FieldSpec QQ = FieldSpec::rationals();

template <class S, class Rng>
Matrix<S> random(const FieldSpec& f, Index r, Index c, Rng& rng) {
  return random_matrix<S>(f, r, c, rng, 3, 0.3);
}

}  // namespace

TEST(FieldSpec, RejectsNonPrimes) {
  EXPECT_THROW(FieldSpec::prime(4), std::invalid_argument);
  EXPECT_THROW(FieldSpec::prime(1), std::invalid_argument);
  EXPECT_THROW(FieldSpec::prime(65537), std::invalid_argument);
  EXPECT_EQ(FieldSpec::prime(7).name(), "F7");
  EXPECT_EQ(QQ.name(), "Q");
  try {
    FieldSpec::prime(4);
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "characteristic must be prime");
  }
}

TEST(Fp, AxiomsHoldExhaustivelyOverF5AndF7) {
  for (std::uint32_t p : {5u, 7u}) {
    for (std::uint32_t a = 0; a < p; ++a) {
      const Fp x(a, p);
      if (a) EXPECT_EQ(x * x.reciprocal(), Fp(1, p));
      for (std::uint32_t b = 0; b < p; ++b) {
        const Fp y(b, p);
        EXPECT_EQ(x + y, y + x);
        EXPECT_EQ(x * y, y * x);
        for (std::uint32_t c = 0; c < p; ++c) {
          const Fp z(c, p);
          EXPECT_EQ((x + y) + z, x + (y + z));
          EXPECT_EQ((x * y) * z, x * (y * z));
          EXPECT_EQ(x * (y + z), x * y + x * z);
        }
      }
    }
  }
}

TEST(Fp, LiteralsAdoptTheModulus) {
  const Fp two(2, 3);
  EXPECT_EQ(two + Fp(1), Fp(0, 3));
  EXPECT_EQ((two * Fp(2)).modulus(), 3u);
  EXPECT_EQ(Fp(4), Fp(1, 3));
  EXPECT_THROW(Fp(1, 3) + Fp(1, 5), std::domain_error);
  EXPECT_THROW(Fp(0, 3).reciprocal(), std::domain_error);
  EXPECT_EQ(bind_scalar(Fp(-1), F5), Fp(4, 5));
}

TEST(Rational, AxiomsOnSampledTriples) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto x = random_scalar<Rational>(QQ, rng, 9);
    const auto y = random_scalar<Rational>(QQ, rng, 9);
    const auto z = random_scalar<Rational>(QQ, rng, 9);
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    if (!is_zero(x)) EXPECT_EQ(x * reciprocal(x), Rational(1));
  }
  EXPECT_THROW(reciprocal(Rational(0)), std::domain_error);
}

TEST(ParseScalar, IntegersAndFractions) {
  EXPECT_EQ(parse_scalar<Rational>(QQ, "-3/6"), Rational(-1) / 2);
  EXPECT_EQ(parse_scalar<Fp>(F5, "1/2"), Fp(3, 5));
  EXPECT_EQ(parse_scalar<Fp>(F5, "-1"), Fp(4, 5));
  EXPECT_THROW(parse_scalar<Fp>(F5, "x"), std::invalid_argument);
  EXPECT_THROW(parse_scalar<Fp>(F5, "1/5"), std::invalid_argument);
}

TEST(Rref, KnownCases) {
  const auto id = identity_matrix<Fp>(F3, 2);
  auto r = rref(id);
  EXPECT_TRUE(same_matrix(r.matrix, id));
  EXPECT_EQ(r.pivots, (std::vector<Index>{0, 1}));

  r = rref(zero_matrix<Fp>(2, 2));
  EXPECT_TRUE(is_zero_matrix(r.matrix));
  EXPECT_TRUE(r.pivots.empty());

  r = rref(mat<Fp>(F2, 2, 2, {1, 1, 1, 1}));
  EXPECT_TRUE(same_matrix(r.matrix, mat<Fp>(F2, 2, 2, {1, 1, 0, 0})));
  EXPECT_EQ(r.pivots, (std::vector<Index>{0}));
}

TEST(Rref, IdempotentAndPreservesRowSpace) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 100; ++t) {
    const auto m = random<Fp>(F3, 1 + t % 4, 1 + (t / 4) % 5, rng);
    const auto r = rref(m);
    EXPECT_TRUE(same_matrix(rref(r.matrix).matrix, r.matrix));
    // every original row reduces to zero against the echelon basis and vice versa
    const auto basis = row_space(m);
    EXPECT_TRUE(rows_in_span<Fp>(m, basis.matrix, basis.pivots));
    EXPECT_EQ(rank(basis.matrix), rank(m));
  }
  for (int t = 0; t < 50; ++t) {
    const auto m = random<Rational>(QQ, 3, 4, rng);
    const auto r = rref(m);
    EXPECT_TRUE(same_matrix(rref(r.matrix).matrix, r.matrix));
  }
}

TEST(Kernel, KnownCasesAndRankNullity) {
  EXPECT_EQ(kernel_basis(identity_matrix<Fp>(F3, 3)).rows(), 0);
  const auto k = kernel_basis(zero_matrix<Fp>(2, 3));
  EXPECT_EQ(k.rows(), 3);
  EXPECT_EQ(rank(k), 3);

  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    const auto m = random<Fp>(F3, 1 + t % 4, 1 + (t / 3) % 5, rng);
    const auto kb = kernel_basis(m);
    EXPECT_EQ(rank(m) + kb.rows(), m.cols());
    EXPECT_TRUE(is_zero_matrix(m * kb.transpose()));
    EXPECT_EQ(rank(kb), kb.rows());
    const auto lk = left_kernel_basis(m);
    EXPECT_TRUE(is_zero_matrix(lk * m));
    EXPECT_EQ(rank(m) + lk.rows(), m.rows());
  }
}

TEST(Solve, KnownCases) {
  const Vector<Fp> b = mat<Fp>(F5, 3, 1, {1, 2, 3});
  const auto x = solve(identity_matrix<Fp>(F5, 3), b);
  ASSERT_TRUE(x);
  EXPECT_TRUE(same_matrix(*x, b));
  EXPECT_FALSE(solve(zero_matrix<Fp>(3, 3), b));
  EXPECT_THROW(solve(zero_matrix<Fp>(2, 3), b), std::invalid_argument);

  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const auto a = random<Fp>(F5, 3, 4, rng);
    const Vector<Fp> x0 = random<Fp>(F5, 4, 1, rng);
    const Vector<Fp> rhs = a * x0;
    const auto sol = solve(a, rhs);
    ASSERT_TRUE(sol);
    EXPECT_TRUE(same_matrix(Matrix<Fp>(a * *sol), Matrix<Fp>(rhs)));
  }
}

TEST(Inverse, KnownCases) {
  EXPECT_TRUE(is_invertible(identity_matrix<Fp>(F2, 2)));
  EXPECT_FALSE(is_invertible(zero_matrix<Fp>(2, 2)));
  EXPECT_THROW(inverse(zero_matrix<Fp>(2, 2)), std::domain_error);
  const auto m = mat<Fp>(F2, 2, 2, {1, 1, 0, 1});
  EXPECT_TRUE(is_invertible(m));
  EXPECT_TRUE(same_matrix(inverse(m), m));
  EXPECT_TRUE(same_matrix(Matrix<Fp>(m * m), identity_matrix<Fp>(F2, 2)));

  std::mt19937_64 rng(4);
  for (int t = 0; t < 30; ++t) {
    const auto g = random_gauge<Rational>(QQ, DimVector{3}, rng).blocks[0];
    EXPECT_TRUE(same_matrix(Matrix<Rational>(g * inverse(g)), identity_matrix<Rational>(QQ, 3)));
  }
}

TEST(FormatMatrix, CanonicalText) {
  EXPECT_EQ(format_matrix(mat<Fp>(F3, 2, 2, {1, -1, 0, 4}), F3), "[[1,2],[0,1]]");
  EXPECT_EQ(format_matrix(zero_matrix<Fp>(0, 2), F3), "[]");
}
