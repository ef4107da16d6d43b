#include <gtest/gtest.h>

#include "error.hpp"
#include "mod2.hpp"
#include "support.hpp"

using namespace crosscap;
using crosscap::testing::random_vector;

TEST(Mod2Vector, InnerProductExamples) {
  EXPECT_TRUE(inner_product(Mod2Vector::from_bits({1, 1, 0}), Mod2Vector::from_bits({1, 0, 1})));
  const Mod2Vector v = Mod2Vector::from_bits({1, 1});
  EXPECT_FALSE(inner_product(v, v));
  for (int d = 1; d <= 6; ++d)
    for (int i = 1; i <= d; ++i)
      for (int j = 1; j <= d; ++j)
        EXPECT_EQ(inner_product(Mod2Vector::unit(d, i), Mod2Vector::unit(d, j)), i == j);
}

TEST(Mod2Vector, InnerProductRejectsMismatch) {
  try {
    inner_product(Mod2Vector(2), Mod2Vector(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
}

TEST(Mod2Vector, BilinearAndSelfPairingIsWeight) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    const int d = 1 + static_cast<int>(rng() % 130);
    const Mod2Vector u = random_vector(rng, d);
    const Mod2Vector w = random_vector(rng, d);
    const Mod2Vector v = random_vector(rng, d);
    EXPECT_EQ(inner_product(u + w, v), inner_product(u, v) != inner_product(w, v));
    EXPECT_EQ(inner_product(u, v), inner_product(v, u));
    EXPECT_EQ(inner_product(u, u), u.weight() % 2 == 1);
  }
}

TEST(Mod2Vector, IndexChecks) {
  Mod2Vector v(3);
  EXPECT_THROW(v.get(0), Error);
  EXPECT_THROW(v.set(4, true), Error);
  EXPECT_THROW(Mod2Vector(0), Error);
}

TEST(Mod2Matrix, OrthogonalityExamples) {
  for (int d = 1; d <= 9; ++d) EXPECT_TRUE(is_orthogonal(Mod2Matrix::identity(d)));
  EXPECT_TRUE(is_orthogonal(Mod2Matrix::from_rows({{0, 1}, {1, 0}})));
  const Mod2Matrix bad = Mod2Matrix::from_columns(
      {Mod2Vector::from_bits({1, 1, 0}), Mod2Vector::from_bits({0, 1, 0}), Mod2Vector::from_bits({0, 1, 1})});
  EXPECT_FALSE(is_orthogonal(bad));
}

TEST(TwistGenerator, RejectsBadSupports) {
  auto code = [](std::vector<int> s) {
    try {
      TwistGenerator g(std::move(s));
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InternalInvariant;
  };
  EXPECT_EQ(code({1}), ErrorCode::BadTwistSupport);
  EXPECT_EQ(code({1, 2, 3}), ErrorCode::BadTwistSupport);
  EXPECT_EQ(code({}), ErrorCode::BadTwistSupport);
  EXPECT_EQ(code({2, 1}), ErrorCode::BadTwistSupport);
  EXPECT_EQ(code({1, 1}), ErrorCode::BadTwistSupport);
  EXPECT_EQ(code({0, 1}), ErrorCode::IndexOutOfRange);
  EXPECT_THROW(twist_matrix(TwistGenerator({1, 4}), 3), Error);
}

TEST(TwistGenerator, MatrixExamples) {
  EXPECT_EQ(twist_matrix(TwistGenerator({1, 2}), 3), Mod2Matrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
  EXPECT_EQ(twist_matrix(TwistGenerator({1, 2, 3, 4}), 4),
            Mod2Matrix::from_rows({{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}}));
  const Mod2Matrix r = twist_matrix(TwistGenerator({1, 2}), 2);
  EXPECT_TRUE((r * r).is_identity());
}

TEST(TwistGenerator, EveryGeneratorIsAnOrthogonalInvolution) {
  for (int d = 1; d <= 8; ++d) {
    const auto gens = all_twist_generators(d);
    EXPECT_EQ(gens.size(), (std::size_t{1} << (d - 1)) - 1);
    for (const auto& g : gens) {
      const Mod2Matrix r = twist_matrix(g, d);
      EXPECT_TRUE((r * r).is_identity());
      EXPECT_TRUE(is_orthogonal(r));
      // I + gamma gamma^T
      const Mod2Vector gamma = g.gamma(d);
      for (int c = 1; c <= d; ++c) {
        Mod2Vector expect = Mod2Vector::unit(d, c);
        if (gamma.get(c)) expect += gamma;
        EXPECT_EQ(r.column(c), expect);
      }
    }
  }
}

TEST(Transvection, Examples) {
  EXPECT_EQ(apply_transvection(Mod2Vector::unit(2, 1), Mod2Vector::from_bits({1, 1})), Mod2Vector::unit(2, 2));
  EXPECT_EQ(apply_transvection(Mod2Vector::from_bits({1, 0, 1, 0}), Mod2Vector::from_bits({1, 1, 0, 0})),
            Mod2Vector::from_bits({0, 1, 1, 0}));
  for (int d = 2; d <= 8; ++d)
    for (const auto& g : all_twist_generators(d))
      EXPECT_EQ(apply_transvection(Mod2Vector::ones(d), g.gamma(d)), Mod2Vector::ones(d));
  EXPECT_THROW(apply_transvection(Mod2Vector(3), Mod2Vector(3)), Error);
  EXPECT_THROW(apply_transvection(Mod2Vector(3), Mod2Vector::from_bits({1, 0, 0})), Error);
}

TEST(Transvection, AgreesWithTwistMatrix) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 2000; ++t) {
    const int d = 2 + static_cast<int>(rng() % 15);
    Mod2Vector gamma = random_vector(rng, d);
    if (gamma.weight() % 2 == 1) gamma.flip(1);
    if (gamma.is_zero()) continue;
    const Mod2Vector v = random_vector(rng, d);
    EXPECT_EQ(apply_transvection(v, gamma), twist_matrix(TwistGenerator(gamma.support()), d) * v);
  }
}

TEST(CharacteristicVector, RandomTwistProductsFixOnes) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const int d = 2 + static_cast<int>(rng() % 15);
    Mod2Matrix m = Mod2Matrix::identity(d);
    for (int k = 0; k < 12; ++k) {
      Mod2Vector gamma = random_vector(rng, d);
      if (gamma.weight() % 2 == 1) gamma.flip(1);
      if (gamma.is_zero()) continue;
      m = m * twist_matrix(TwistGenerator(gamma.support()), d);
    }
    EXPECT_TRUE(is_orthogonal(m));
    EXPECT_EQ(m * Mod2Vector::ones(d), Mod2Vector::ones(d));
  }
}
