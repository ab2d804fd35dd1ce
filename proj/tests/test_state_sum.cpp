#include <bit>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "vkarrow/state_sum.hpp"

using namespace vkarrow;

namespace {

std::string arrow(std::string_view code) { return to_string(expand(parse_gauss(code))); }

}  // namespace

TEST(StateSum, KnownValues) {
  EXPECT_EQ(arrow(""), "1");
  EXPECT_EQ(arrow("O1+U1+"), "-A^3");
  EXPECT_EQ(arrow("U1+O1+"), "-A^3");
  EXPECT_EQ(arrow("O1-U1-"), "-A^-3");
  EXPECT_EQ(arrow("O1+U2+O3+U1+O2+U3+"), "A^-7 - A^-3 - A^5");
  EXPECT_EQ(arrow("O1-O2-U1-U2-"), "A^-2 + K1 - A^4*K1");
  EXPECT_EQ(arrow("O1-U2+O3+U1-O2+U3+"), "-A^-5 + A^-5*K1^2 - A^3*K1^2");
  EXPECT_EQ(arrow("O1+U2-O4-U1+O3+U4-O2-U3+"), "A^-8 - A^-4 + 1 - A^4 + A^8");
}

TEST(StateSum, ReduceLoop) {
  EXPECT_EQ(reduce_loop({}), 0u);
  EXPECT_EQ(reduce_loop({1, -1}), 0u);
  EXPECT_EQ(reduce_loop({1, 1}), 1u);
  EXPECT_EQ(reduce_loop({-1, -1, -1, -1}), 2u);
  EXPECT_EQ(reduce_loop({1, -1, -1, -1}), 1u);
  EXPECT_THROW(reduce_loop({1}), std::invalid_argument);
}

TEST(StateSum, ReduceLoopMatchesRewriter) {
  for (std::size_t len = 0; len <= 10; len += 2) {
    for (const auto& w : testkit::all_words(len)) {
      std::vector<std::size_t> finals;
      testkit::rewrite_all(w, finals);
      const CuspWord word(w.begin(), w.end());
      for (auto f : finals) ASSERT_EQ(reduce_loop(word), f / 2);
    }
  }
}

TEST(StateSum, TraceProperties) {
  std::mt19937_64 rng(31);
  const auto conv = Convention::calibrated();
  for (int i = 0; i < 100; ++i) {
    const auto code = testkit::random_code(1 + rng() % 5, rng);
    const auto n = code.crossing_count();
    for (std::uint64_t mask = 0; mask < (1u << n); ++mask) {
      const auto loops = trace_state(code, {mask}, conv);
      std::size_t cusps = 0;
      for (const auto& l : loops) {
        EXPECT_EQ(l.cusp_word.size() % 2, 0u);
        cusps += l.cusp_word.size();
      }
      std::size_t disoriented = 0;
      for (std::size_t c = 0; c < n; ++c) {
        // crossing c in first-appearance order
        std::size_t seen = 0;
        for (std::size_t pos = 0; pos < code.length(); ++pos) {
          if (code.partner(pos) < pos) continue;
          if (seen++ != c) continue;
          const bool b = (mask >> c) & 1u;
          const auto letter = b ? SmoothingLetter::B : SmoothingLetter::A;
          if (letter != conv.oriented_letter(code[pos].sign)) ++disoriented;
        }
      }
      EXPECT_EQ(cusps, 2 * disoriented);
    }
  }
}

TEST(StateSum, AllOrientedStateHasNoCusps) {
  const auto code = parse_gauss("O1+U2-O3+U1+O2-U3+");
  // positive crossings orient at A (bit clear), negative at B (bit set)
  const auto loops = trace_state(code, {0b010});
  for (const auto& l : loops) EXPECT_TRUE(l.cusp_word.empty());
}

TEST(StateSum, VisitsEveryState) {
  std::mt19937_64 rng(32);
  for (unsigned n = 0; n <= 8; ++n) {
    ExpandStats stats;
    expand(testkit::random_code(n, rng), {}, &stats);
    EXPECT_EQ(stats.states_visited, std::uint64_t{1} << n);
  }
}

TEST(StateSum, RangesPartitionTheSum) {
  std::mt19937_64 rng(33);
  const auto code = testkit::random_code(7, rng);
  ArrowPolynomial sum;
  for (std::uint64_t first = 0; first < 128; first += 20) {
    sum += expand_range(code, first, first + 20);
  }
  EXPECT_EQ(sum, expand(code));
}

TEST(StateSum, RotationAndRelabelInvariant) {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 50; ++i) {
    const auto code = testkit::random_code(1 + rng() % 5, rng);
    const auto p = expand(code);
    for (std::size_t s = 0; s < code.length(); ++s) EXPECT_EQ(expand(rotate(code, s)), p);
    EXPECT_EQ(expand(parse_gauss(canonical_string(code))), p);
  }
}

TEST(StateSum, ThreadCountDeterminism) {
  std::mt19937_64 rng(35);
  const auto code = testkit::random_code(13, rng);
  const auto ref = to_string(expand(code));
  for (unsigned t : {2u, 3u, 4u, 8u, 0u}) {
    ExpandOptions opts;
    opts.threads = t;
    ExpandStats stats;
    EXPECT_EQ(to_string(expand(code, opts, &stats)), ref) << t;
    EXPECT_EQ(stats.states_visited, std::uint64_t{1} << 13);
  }
}

TEST(StateSum, OracleAgreesOnRandomCodes) {
  std::mt19937_64 rng(36);
  for (int i = 0; i < 300; ++i) {
    const auto code = testkit::random_code_upto(6, rng);
    EXPECT_EQ(specialize_k_one(expand(code)), bracket_oracle(code)) << to_string(code);
  }
}

TEST(StateSum, RejectsHugeCodes) {
  std::mt19937_64 rng(37);
  EXPECT_THROW(expand(testkit::random_code(kMaxCrossings + 1, rng)), std::invalid_argument);
}
