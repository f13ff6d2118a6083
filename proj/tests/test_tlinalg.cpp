#include <gtest/gtest.h>

#include "oracle.hpp"
#include "tropical/generators.hpp"
#include "tropical/tlinalg.hpp"

using namespace tropical;
using tropical::testing::mp;
using tropical::testing::mt;
using tropical::testing::q;

TEST(Tlinalg, SupportAndUnitVector) {
  EXPECT_EQ(support(mt("[2,0,1]")), (IndexSet{0, 2}));
  EXPECT_EQ(Vec::unit_vector(Model::MaxPlus, 0, 2), mp("[0,zero]"));
  EXPECT_THROW(Vec::unit_vector(Model::MaxPlus, 2, 2), std::out_of_range);
}

TEST(Tlinalg, VectorsRejectTop) {
  EXPECT_THROW(mt("[inf,1]"), ParseError);
  Vec x = mt("[1,1]");
  EXPECT_THROW(x.set(0, Scalar::top(Model::MaxTimes)), std::domain_error);
}

TEST(Tlinalg, ConeMembershipExamples) {
  EXPECT_FALSE(cone_member_fg(mt("[2,1]"), {mt("[1,1]")}).member);
  auto r = cone_member_fg(mt("[1,1]"), {mt("[2,1]"), mt("[1,2]")});
  EXPECT_TRUE(r.member);
  ASSERT_EQ(r.coefficients.size(), 2u);
  EXPECT_EQ(r.coefficients[0], q(1, 2));
  EXPECT_EQ(r.coefficients[1], q(1, 2));
}

TEST(Tlinalg, ZeroIsInEveryCone) {
  EXPECT_TRUE(cone_member_fg(mt("[0,0]"), {}).member);
  EXPECT_TRUE(cone_member_fg(mt("[0,0]"), {mt("[1,2]")}).member);
}

TEST(Tlinalg, ConvexMembershipExamples) {
  PRDecomposition d{Model::MaxTimes, 2, {mt("[0,0]")}, {mt("[1,0]")}};
  EXPECT_TRUE(pr_member(mt("[3,0]"), d));
  PRDecomposition p{Model::MaxTimes, 2, {mt("[1,0]")}, {}};
  EXPECT_FALSE(pr_member(mt("[2,0]"), p));
  EXPECT_TRUE(pr_member(mt("[1,0]"), p));
}

TEST(Tlinalg, HomogenizeAndSection) {
  PRDecomposition d{Model::MaxTimes, 2, {mt("[1,2]")}, {mt("[3,1]")}};
  auto gens = homogenize(d);
  ASSERT_EQ(gens.size(), 2u);
  EXPECT_EQ(gens[0], mt("[1,2,1]"));
  EXPECT_EQ(gens[1], mt("[3,1,0]"));

  auto s = section_unity({mt("[4,2,2]")});
  EXPECT_FALSE(s.section_empty);
  ASSERT_EQ(s.decomposition.points.size(), 1u);
  EXPECT_EQ(s.decomposition.points[0], mt("[2,1]"));

  auto e = section_unity({mt("[1,2,0]")});
  EXPECT_TRUE(e.section_empty);
  ASSERT_EQ(e.decomposition.rays.size(), 1u);
  EXPECT_EQ(e.decomposition.rays[0], mt("[1,2]"));
}

TEST(Tlinalg, SegmentPointsIncludeEndsAndJoin) {
  Vec x = mt("[2,1]"), y = mt("[1,2]");
  auto one = segment_points(x, y, 1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], mt("[2,2]"));
  auto pts = segment_points(x, y, 7);
  ASSERT_EQ(pts.size(), 7u);
  EXPECT_EQ(pts[1], x);
  EXPECT_EQ(pts[2], y);
  EXPECT_EQ(segment_points(x, y, 7), pts);
  // Every point is a combination αx ⊕ βy with α ⊕ β = 1, so it lies in the
  // cone of x and y and below x ⊕ y.
  for (const auto& z : pts) EXPECT_TRUE(cone_member_fg(z, {x, y}).member);
}

TEST(Tlinalg, GatherChecksSupports) {
  PRDecomposition ok{Model::MaxTimes, 2, {mt("[1,0]")}, {mt("[1,1]")}};
  PRDecomposition bad{Model::MaxTimes, 2, {mt("[1,1]")}, {mt("[1,0]")}};
  EXPECT_NO_THROW(gather({ok}, GatherMode::SupportChecked));
  try {
    gather({ok, bad}, GatherMode::SupportChecked);
    FAIL() << "expected GatherError";
  } catch (const GatherError& e) {
    EXPECT_EQ(e.set_index, 1u);
    EXPECT_EQ(e.ray_index, 0u);
  }
  auto g = gather({ok, bad}, GatherMode::CallerAsserted);
  EXPECT_EQ(g.points.size(), 2u);
  EXPECT_EQ(g.rays.size(), 2u);
}

TEST(Tlinalg, GatherKeepsConeParts) {
  PRDecomposition cone{Model::MaxTimes, 2, {}, {mt("[0,1]")}};
  PRDecomposition pt{Model::MaxTimes, 2, {mt("[1,0]")}, {}};
  auto g = gather({cone, pt}, GatherMode::SupportChecked);
  EXPECT_TRUE(pr_member(mt("[0,5]"), g));
  EXPECT_TRUE(pr_member(mt("[1,5]"), g));
}

TEST(Tlinalg, LocalRecession) {
  PRDecomposition d{Model::MaxTimes, 2, {mt("[1,0]")}, {}};
  EXPECT_EQ(is_locally_recessive(mt("[0,1]"), mt("[1,0]"), d, {q(2)}), RecessionVerdict::No);
  PRDecomposition r{Model::MaxTimes, 2, {mt("[1,0]")}, {mt("[0,1]")}};
  EXPECT_EQ(is_locally_recessive(mt("[0,1]"), mt("[1,0]"), r, lambda_ladder(Model::MaxTimes, 4)),
            RecessionVerdict::SampledYes);
  EXPECT_THROW(is_locally_recessive(mt("[0,1]"), mt("[2,0]"), d, {q(2)}), std::invalid_argument);
}

TEST(TlinalgProperties, GeneratorsAreMembersAndClosedUnderJoin) {
  Rng rng = make_rng(21);
  for (int c = 0; c < 300; ++c) {
    std::vector<Vec> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(random_vec(rng, default_grid_values(Model::MaxTimes), 3));
    for (const auto& g : gens) ASSERT_TRUE(cone_member_fg(g, gens).member);
    Vec a = random_vec(rng, default_grid_values(Model::MaxTimes), 3);
    Vec b = random_vec(rng, default_grid_values(Model::MaxTimes), 3);
    if (cone_member_fg(a, gens).member && cone_member_fg(b, gens).member) {
      ASSERT_TRUE(cone_member_fg(oplus(a, b), gens).member);
    }
    Vec combo = oplus(scale(q(1, 2), gens[0]), scale(q(3), gens[2]));
    ASSERT_TRUE(cone_member_fg(combo, gens).member);
  }
}

TEST(TlinalgProperties, ScalingMovesBetweenSections) {
  // x ∈ C^1 iff αx ∈ C^α for the homogenized cone C of d.
  Rng rng = make_rng(22);
  for (int c = 0; c < 200; ++c) {
    PRDecomposition d = random_pr(rng, Model::MaxTimes, 2, 2, 1);
    auto gens = homogenize(d);
    Vec x = random_vec(rng, default_grid_values(Model::MaxTimes), 2);
    for (long k : {-2L, 1L, 3L}) {
      Scalar alpha = power(q(2), k);
      const bool at_one = cone_member_fg(append(x, Scalar::unit(Model::MaxTimes)), gens).member;
      const bool at_alpha = cone_member_fg(append(scale(alpha, x), alpha), gens).member;
      ASSERT_EQ(at_one, at_alpha);
    }
  }
}

TEST(TlinalgProperties, RecessiveRaysAreLocallyRecessive) {
  Rng rng = make_rng(23);
  for (int c = 0; c < 100; ++c) {
    PRDecomposition d = random_pr(rng, Model::MaxTimes, 3, 2, 2);
    for (const auto& p : d.points) {
      for (const auto& r : d.rays) {
        ASSERT_EQ(is_locally_recessive(r, p, d, lambda_ladder(Model::MaxTimes, 3)), RecessionVerdict::SampledYes);
      }
    }
  }
}

TEST(Tlinalg, DirectionOutsideEveryRaySupportIsNotRecessive) {
  PRDecomposition d{Model::MaxTimes, 3, {mt("[1,1,0]")}, {mt("[1,0,0]")}};
  EXPECT_EQ(is_locally_recessive(mt("[0,0,1]"), mt("[1,1,0]"), d, lambda_ladder(Model::MaxTimes, 2)),
            RecessionVerdict::No);
  EXPECT_EQ(is_locally_recessive(mt("[1,0,0]"), mt("[1,1,0]"), d, lambda_ladder(Model::MaxTimes, 2)),
            RecessionVerdict::SampledYes);
}
