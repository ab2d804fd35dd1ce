#include <gtest/gtest.h>

#include "vkarrow/state_sum.hpp"

using namespace vkarrow;

TEST(Calibration, ThirtyTwoCandidates) {
  const auto c = Convention::candidates();
  EXPECT_EQ(c.size(), 32u);
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) EXPECT_FALSE(c[i] == c[j]);
  }
}

TEST(Calibration, EmbeddedFixturesPinShippedConvention) {
  const auto fixtures = embedded_calibration_fixtures();
  ASSERT_EQ(fixtures.size(), 3u);
  EXPECT_EQ(calibrate_convention(fixtures), Convention::calibrated());
}

TEST(Calibration, TrefoilAloneIsAmbiguous) {
  const auto fixtures = embedded_calibration_fixtures();
  const std::vector<CalibrationFixture> trefoil{fixtures.front()};
  EXPECT_GT(calibration_survivors(trefoil).size(), 1u);
  try {
    calibrate_convention(trefoil);
    FAIL() << "expected CalibrationError";
  } catch (const CalibrationError& e) {
    EXPECT_GT(e.survivors(), 1u);
  }
}

TEST(Calibration, MixedClassicalKnotFixesCusps) {
  // A wrong cusp rule leaves stray K terms on a classical knot with both
  // crossing signs; the virtual fixture then agrees with the survivor.
  const auto fixtures = embedded_calibration_fixtures();
  const std::vector<CalibrationFixture> classical{fixtures[0], fixtures[1]};
  const auto survivors = calibration_survivors(classical);
  ASSERT_EQ(survivors.size(), 1u);
  EXPECT_EQ(survivors.front(), Convention::calibrated());
}

TEST(Calibration, PrintedFourNineRowHasNoSurvivor) {
  // At A = 1, K = 1 every diagram evaluates to (-1)^writhe; the printed
  // row evaluates to 0, so no code and no convention can produce it.
  const auto fixtures = embedded_calibration_fixtures();
  const auto row = parse_poly("A^-4 + A^-2*K1 - A^2*K1 - A^4");
  LaurentA at_k1 = specialize_k_one(row);
  Coefficient at_a1 = 0;
  for (const auto& [e, c] : at_k1.terms()) at_a1 += c;
  EXPECT_EQ(at_a1, 0);
  const std::vector<CalibrationFixture> lit{
      fixtures.front(), {parse_gauss("O1-O2-U1-O3-U2-O4-U3-U4-"), row}};
  EXPECT_TRUE(calibration_survivors(lit).empty());
  EXPECT_THROW(calibrate_convention(lit), CalibrationError);
}

TEST(Calibration, BracketOracleIsConventionFree) {
  for (const auto& conv : Convention::candidates()) {
    ExpandOptions opts;
    opts.convention = conv;
    const auto code = parse_gauss("O1-U2+O3+U1-O2+U3+");
    if (conv.oriented_at_positive == SmoothingLetter::A &&
        conv.oriented_at_negative == SmoothingLetter::B) {
      EXPECT_EQ(specialize_k_one(expand(code, opts)), bracket_oracle(code));
    }
  }
}
