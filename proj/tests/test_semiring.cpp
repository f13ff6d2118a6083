#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "tropical/semiring.hpp"

using namespace tropical;

namespace {

constexpr int kCases = 1000;

Scalar random_scalar(std::mt19937_64& rng, Model m, bool allow_top) {
  std::uniform_int_distribution<int> kind(0, allow_top ? 9 : 8);
  std::uniform_int_distribution<long> num(m == Model::MaxPlus ? -6 : 1, 6);
  std::uniform_int_distribution<unsigned long> den(1, 4);
  int k = kind(rng);
  if (k == 0) return Scalar::zero(m);
  if (k == 9) return Scalar::top(m);
  return Scalar::finite(m, num(rng), den(rng));
}

}  // namespace

TEST(Semiring, MaxPlusProductIsSum) {
  const Model m = Model::MaxPlus;
  EXPECT_EQ(otimes(Scalar::finite(m, 2), Scalar::finite(m, 3)), Scalar::finite(m, 5));
}

TEST(Semiring, MaxTimesProductIsProduct) {
  const Model m = Model::MaxTimes;
  EXPECT_EQ(otimes(Scalar::finite(m, 2), Scalar::finite(m, 3)), Scalar::finite(m, 6));
}

TEST(Semiring, TopTimesFiniteIsTop) {
  const Model m = Model::MaxTimes;
  EXPECT_TRUE(otimes(Scalar::top(m), Scalar::finite(m, 5)).is_top());
}

TEST(Semiring, ZeroAbsorbsTop) {
  for (Model m : {Model::MaxPlus, Model::MaxTimes}) {
    EXPECT_TRUE(otimes(Scalar::zero(m), Scalar::top(m)).is_zero());
    EXPECT_TRUE(otimes(Scalar::top(m), Scalar::zero(m)).is_zero());
  }
}

TEST(Semiring, InverseSwapsExtremes) {
  const Model m = Model::MaxPlus;
  EXPECT_TRUE(inverse(Scalar::top(m)).is_zero());
  EXPECT_TRUE(inverse(Scalar::zero(m)).is_top());
  EXPECT_EQ(inverse(Scalar::finite(m, 3)), Scalar::finite(m, -3));
  EXPECT_EQ(inverse(Scalar::finite(Model::MaxTimes, 3)), Scalar::finite(Model::MaxTimes, 1, 3));
}

TEST(Semiring, OrderPutsZeroBelowFiniteBelowTop) {
  const Model m = Model::MaxPlus;
  EXPECT_LT(Scalar::zero(m), Scalar::finite(m, -100));
  EXPECT_LT(Scalar::finite(m, 100), Scalar::top(m));
}

TEST(Semiring, MixingModelsThrows) {
  EXPECT_THROW(oplus(Scalar::unit(Model::MaxPlus), Scalar::unit(Model::MaxTimes)), ModelMismatch);
  EXPECT_THROW(otimes(Scalar::unit(Model::MaxPlus), Scalar::unit(Model::MaxTimes)), ModelMismatch);
}

TEST(Semiring, MaxTimesFiniteMustBePositive) {
  EXPECT_THROW(Scalar::finite(Model::MaxTimes, 0), std::domain_error);
  EXPECT_THROW(Scalar::finite(Model::MaxTimes, -1), std::domain_error);
}

TEST(Semiring, ParseAndPrint) {
  const Model m = Model::MaxTimes;
  EXPECT_TRUE(parse_scalar(m, "zero").is_zero());
  EXPECT_TRUE(parse_scalar(m, "inf").is_top());
  EXPECT_EQ(parse_scalar(m, "2/4"), Scalar::finite(m, 1, 2));
  EXPECT_EQ(to_string(parse_scalar(m, "6/4")), "3/2");
  EXPECT_TRUE(parse_scalar(m, "0").is_zero());
  EXPECT_EQ(parse_scalar(Model::MaxPlus, "0"), Scalar::unit(Model::MaxPlus));
  EXPECT_EQ(parse_scalar(Model::MaxPlus, "-3/2"), Scalar::finite(Model::MaxPlus, -3, 2));
  EXPECT_THROW(parse_scalar(m, "-1"), ParseError);
  EXPECT_THROW(parse_scalar(m, "1/0"), ParseError);
  EXPECT_THROW(parse_scalar(m, "abc"), ParseError);
  EXPECT_THROW(parse_scalar(m, ""), ParseError);
  EXPECT_EQ(parse_model("max-plus"), Model::MaxPlus);
  EXPECT_THROW(parse_model("min-plus"), ParseError);
}

TEST(Semiring, PowerUsesInverseForNegativeExponents) {
  const Model m = Model::MaxTimes;
  EXPECT_EQ(power(Scalar::finite(m, 2), -3), Scalar::finite(m, 1, 8));
  EXPECT_EQ(power(Scalar::finite(Model::MaxPlus, 2), 3), Scalar::finite(Model::MaxPlus, 6));
}

TEST(SemiringProperties, AdditionIsAssociativeCommutativeIdempotent) {
  std::mt19937_64 rng(11);
  for (Model m : {Model::MaxPlus, Model::MaxTimes}) {
    for (int c = 0; c < kCases; ++c) {
      Scalar a = random_scalar(rng, m, true), b = random_scalar(rng, m, true), d = random_scalar(rng, m, true);
      ASSERT_EQ(oplus(oplus(a, b), d), oplus(a, oplus(b, d)));
      ASSERT_EQ(oplus(a, b), oplus(b, a));
      ASSERT_EQ(oplus(a, a), a);
    }
  }
}

TEST(SemiringProperties, DistributivityOnRmax) {
  std::mt19937_64 rng(12);
  for (Model m : {Model::MaxPlus, Model::MaxTimes}) {
    for (int c = 0; c < kCases; ++c) {
      Scalar a = random_scalar(rng, m, false), b = random_scalar(rng, m, false), d = random_scalar(rng, m, false);
      ASSERT_EQ(otimes(a, oplus(b, d)), oplus(otimes(a, b), otimes(a, d)));
      ASSERT_EQ(otimes(a, b), otimes(b, a));
    }
  }
}

TEST(SemiringProperties, InverseOfFiniteGivesUnit) {
  std::mt19937_64 rng(13);
  for (Model m : {Model::MaxPlus, Model::MaxTimes}) {
    for (int c = 0; c < kCases; ++c) {
      Scalar a = random_scalar(rng, m, true);
      if (!a.is_finite()) continue;
      ASSERT_TRUE(otimes(a, inverse(a)).is_unit());
      ASSERT_EQ(inverse(inverse(a)), a);
    }
  }
}

TEST(SemiringProperties, SumIsTheOrderJoin) {
  std::mt19937_64 rng(14);
  for (Model m : {Model::MaxPlus, Model::MaxTimes}) {
    for (int c = 0; c < kCases; ++c) {
      Scalar a = random_scalar(rng, m, true), b = random_scalar(rng, m, true);
      ASSERT_EQ(oplus(a, b) == b, a <= b);
    }
  }
}

TEST(SemiringProperties, TextRoundTrip) {
  std::mt19937_64 rng(15);
  for (Model m : {Model::MaxPlus, Model::MaxTimes}) {
    for (int c = 0; c < kCases; ++c) {
      Scalar a = random_scalar(rng, m, true);
      ASSERT_EQ(parse_scalar(m, to_string(a)), a);
    }
  }
}
