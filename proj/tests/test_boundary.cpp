#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "tropical/boundary.hpp"

using namespace tropical;
using tropical::testing::q;

namespace {

const Model M = Model::MaxTimes;

BoundarySet le(long n, unsigned long d = 1) { return BoundarySet::make(q(n, d), true); }
BoundarySet lt(long n, unsigned long d = 1) { return BoundarySet::make(q(n, d), false); }

std::vector<BoundarySet> catalog() {
  return {BoundarySet::only_zero(M), BoundarySet::everything(M), le(1, 2), lt(1, 2), le(1), lt(1), le(2), lt(2), le(3), lt(3)};
}

// Product values to test, and a finer mesh of candidate factors. The mesh
// is fine enough that every tested value inside a product has a factor on
// it for this catalog.
std::vector<Scalar> values() {
  std::vector<Scalar> out{Scalar::zero(M)};
  for (long n = 1; n < 16; ++n) out.push_back(q(n, 16));
  for (long n = 4; n <= 40; ++n) out.push_back(q(n, 4));
  return out;
}

std::vector<Scalar> mesh() {
  std::vector<Scalar> out;
  for (long n = 1; n <= 4 * 64; ++n) out.push_back(q(n, 64));
  for (long n = 17; n <= 32 * 4; ++n) out.push_back(q(n, 4));
  return out;
}

}  // namespace

TEST(Boundary, ConstructionRules) {
  EXPECT_THROW(BoundarySet::make(Scalar::zero(M), false), std::invalid_argument);
  EXPECT_FALSE(BoundarySet::make(Scalar::top(M), true).closed());
  EXPECT_TRUE(BoundarySet::only_zero(M).contains(Scalar::zero(M)));
  EXPECT_FALSE(BoundarySet::only_zero(M).contains(q(1, 100)));
  EXPECT_TRUE(BoundarySet::everything(M).contains(q(1000)));
  EXPECT_FALSE(BoundarySet::everything(M).contains(Scalar::top(M)));
  EXPECT_TRUE(le(1).contains(q(1)));
  EXPECT_FALSE(lt(1).contains(q(1)));
  EXPECT_TRUE(lt(1).upper_contains(q(1)));
  EXPECT_TRUE(le(1).upper_contains(Scalar::top(M)));
}

TEST(Boundary, DownsetProductExamples) {
  EXPECT_EQ(downset_product(le(1), le(1)), le(1));
  EXPECT_EQ(downset_product(BoundarySet::only_zero(M), BoundarySet::everything(M)), BoundarySet::only_zero(M));
  EXPECT_EQ(downset_product(le(2), lt(3)), lt(6));
}

TEST(Boundary, UpsetProductExamples) {
  UpSet inf_only(Scalar::top(M), false);
  UpSet u = upset_product(inf_only, le(1).upper());
  EXPECT_TRUE(u.only_infinity());
  EXPECT_FALSE(u.contains(q(100)));
  EXPECT_TRUE(u.contains(Scalar::top(M)));
}

TEST(Boundary, ProductsMatchPointwiseDefinition) {
  const auto vs = values();
  const auto xs = mesh();
  for (const auto& a : catalog()) {
    for (const auto& b : catalog()) {
      BoundarySet prod = downset_product(a, b);
      UpSet uprod = upset_product(a.upper(), b.upper());
      for (const auto& v : vs) {
        bool down = v.is_zero(), up = false;
        for (const auto& x : xs) {
          if (v.is_zero()) break;
          Scalar rest = residual(v, x);
          down = down || (a.contains(x) && b.contains(rest));
          up = up || (a.upper_contains(x) && b.upper_contains(rest));
        }
        EXPECT_EQ(prod.contains(v), down) << a.to_string() << " * " << b.to_string() << " at " << to_string(v);
        EXPECT_EQ(uprod.contains(v), up) << a.to_string() << " * " << b.to_string() << " at " << to_string(v);
      }
    }
  }
}

TEST(Boundary, IntersectionAndFactoring) {
  EXPECT_TRUE(intersects(le(2), lt(2).upper()));
  EXPECT_FALSE(intersects(lt(2), lt(2).upper()));
  EXPECT_FALSE(intersects(le(2), le(2).upper()));
  EXPECT_FALSE(intersects(BoundarySet::only_zero(M), lt(1).upper()));
  EXPECT_TRUE(intersects(BoundarySet::everything(M), le(100).upper()));

  for (const auto& a : catalog()) {
    for (const auto& b : catalog()) {
      for (const auto& c : catalog()) {
        for (const auto& d : catalog()) {
          BoundarySet down = downset_product(a, b);
          UpSet up = upset_product(c.upper(), d.upper());
          if (!intersects(down, up)) continue;
          Scalar v = common_finite(down, up);
          ASSERT_TRUE(v.is_finite());
          ASSERT_TRUE(down.contains(v));
          ASSERT_TRUE(up.contains(v));
          auto [x, y] = factor(v, a, b);
          ASSERT_TRUE(a.contains(x) && b.contains(y));
          ASSERT_EQ(otimes(x, y), v);
          auto [s, t] = factor(v, c.upper(), d.upper());
          ASSERT_TRUE(c.upper_contains(s) && d.upper_contains(t));
          ASSERT_EQ(otimes(s, t), v);
        }
      }
    }
  }
}

TEST(Boundary, PickBetweenPrefersIncludedEnds) {
  EXPECT_EQ(pick_between(q(1), true, q(2), false), q(1));
  EXPECT_EQ(pick_between(q(1), false, q(2), true), q(2));
  EXPECT_EQ(pick_between(q(1), false, q(2), false), q(3, 2));
  EXPECT_EQ(pick_between(Scalar::zero(M), false, q(2), false), q(1));
  EXPECT_EQ(pick_between(q(2), false, Scalar::top(M), false), q(4));
  EXPECT_THROW(pick_between(q(2), true, q(2), false), std::invalid_argument);
  const Model P = Model::MaxPlus;
  EXPECT_EQ(pick_between(Scalar::zero(P), false, Scalar::finite(P, 0), false), Scalar::finite(P, -1));
}
