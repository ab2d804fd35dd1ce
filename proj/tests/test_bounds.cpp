#include <gtest/gtest.h>

#include "vkarrow/bounds.hpp"

using namespace vkarrow;

TEST(Bounds, KDegree) {
  EXPECT_EQ(k_degree(ArrowMonomial(5)), 0u);
  EXPECT_EQ(k_degree(ArrowMonomial(0, {{1, 2}, {3, 1}})), 5u);
  EXPECT_EQ(virtual_crossing_lower_bound(parse_poly("A^-2 + K1 - A^4*K1")), 1u);
  EXPECT_EQ(virtual_crossing_lower_bound(parse_poly("A^-7 - A^-3 - A^5")), 0u);
}

TEST(Bounds, GenusForCurves) {
  EXPECT_EQ(genus_for_curves(0), 0u);
  EXPECT_EQ(genus_for_curves(1), 1u);
  EXPECT_EQ(genus_for_curves(2), 2u);
  EXPECT_EQ(genus_for_curves(3), 2u);
  EXPECT_EQ(genus_for_curves(4), 3u);
  EXPECT_EQ(genus_for_curves(6), 3u);
  EXPECT_EQ(genus_for_curves(7), 4u);
}

TEST(Bounds, GenusRules) {
  const auto p = parse_poly("A^2 + K1^3 - K1*K2*K3");
  EXPECT_EQ(genus_lower_bound(p), 2u);
  EXPECT_EQ(genus_lower_bound(parse_poly("K1*K2*K3")), 2u);
  EXPECT_EQ(genus_lower_bound(parse_poly("K1^3")), 1u);
  EXPECT_EQ(genus_lower_bound(parse_poly("K1^3"), GenusRule::Multiplicity), 2u);
  EXPECT_EQ(genus_lower_bound(parse_poly("K1^2*K2^2"), GenusRule::Multiplicity), 3u);
  EXPECT_EQ(genus_lower_bound(parse_poly("1")), 0u);
}

TEST(Bounds, Report) {
  const auto r = compute_bounds(parse_poly("A^-2 + K1 - K1*K2 + K3 - A^4*K1*K2"));
  EXPECT_EQ(r.max_k_degree, 3u);
  EXPECT_EQ(r.v_lower, 3u);
  EXPECT_EQ(r.curve_count, 2u);
  EXPECT_EQ(r.genus_lower, 2u);
  EXPECT_EQ(r.degree_witnesses.size(), 3u);
  EXPECT_EQ(r.genus_witnesses.size(), 2u);

  const auto classical = compute_bounds(parse_poly("A^-7 - A^-3 - A^5"));
  EXPECT_EQ(classical.v_lower, 0u);
  EXPECT_EQ(classical.genus_lower, 0u);
  EXPECT_TRUE(classical.degree_witnesses.empty());
}
