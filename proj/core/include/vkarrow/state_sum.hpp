#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "vkarrow/gauss_code.hpp"
#include "vkarrow/polynomial.hpp"

namespace vkarrow {

enum class SmoothingLetter : std::uint8_t { A, B };

/// The two reconnection bands of a disoriented smoothing: the sink joins
/// the two incoming arcs, the source joins the two outgoing arcs.
enum class Band : std::uint8_t { Sink, Source };

/// Which smoothing is orientation-preserving, and the cusp sign assigned to
/// each transit through a disoriented smoothing.
///
/// A band can be entered from the arc of either pass; entering from the
/// under pass always yields the negated sign of entering from the over pass,
/// so the rule is fixed by four entries. The global negation of every cusp
/// sign leaves all loop indices unchanged; conventions are kept in the gauge
/// where a sink at a positive crossing entered from the over pass is +1.
struct Convention {
  SmoothingLetter oriented_at_positive = SmoothingLetter::A;
  SmoothingLetter oriented_at_negative = SmoothingLetter::B;
  // [0 = positive crossing, 1 = negative][band]
  std::array<std::array<std::int8_t, 2>, 2> over_entry_sign{{{1, -1}, {-1, 1}}};

  SmoothingLetter oriented_letter(Sign s) const noexcept {
    return s == Sign::Positive ? oriented_at_positive : oriented_at_negative;
  }

  int cusp_sign(Sign s, Band band, bool entered_from_over) const noexcept {
    const int v = over_entry_sign[s == Sign::Positive ? 0 : 1][band == Band::Sink ? 0 : 1];
    return entered_from_over ? v : -v;
  }

  /// The convention shipped with the engine (fixed by calibration).
  static Convention calibrated() noexcept { return Convention{}; }

  /// Every gauge-fixed candidate: 4 oriented-letter maps x 8 sign patterns.
  static std::vector<Convention> candidates();

  friend bool operator==(const Convention&, const Convention&) = default;
};

std::string to_string(const Convention& conv);

/// Bit i set selects the B-smoothing at crossing i (crossings numbered in
/// order of first appearance in the code).
struct SmoothingChoice {
  std::uint64_t mask = 0;
};

/// Cyclic word of cusp signs (+1/-1) along one state loop.
using CuspWord = std::vector<std::int8_t>;

struct StateLoop {
  CuspWord cusp_word;
};

/// Largest crossing count the engine accepts (masks are 64-bit).
inline constexpr std::size_t kMaxCrossings = 40;

/// Loop decomposition of one state. Each arc of the diagram is traversed
/// exactly once; a loop is recorded in one direction only.
std::vector<StateLoop> trace_state(const GaussCode& code, SmoothingChoice choice,
                                   const Convention& conv = Convention::calibrated());

/// Loop index n of a cyclic cusp word: |sum of signs| / 2. Throws
/// std::invalid_argument for odd-length words.
unsigned reduce_loop(const CuspWord& word);

struct ExpandOptions {
  /// Worker count; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 1;
  Convention convention = Convention::calibrated();
};

struct ExpandStats {
  std::uint64_t states_visited = 0;
  unsigned workers = 0;
};

/// The arrow polynomial <K>_A: sum over all 2^n states of
/// A^(alpha - beta) d^(|S| - 1) prod K_(loop index).
ArrowPolynomial expand(const GaussCode& code, const ExpandOptions& options = {},
                       ExpandStats* stats = nullptr);

/// Partial sum over masks [first, last); expand() is the sum of partials
/// over any partition of [0, 2^n).
ArrowPolynomial expand_range(const GaussCode& code, std::uint64_t first,
                             std::uint64_t last,
                             const Convention& conv = Convention::calibrated());

/// Unoriented Kauffman bracket by loop counting only (no cusp tracking),
/// using a union-find over arc ends. Kept separate from expand() as an
/// independent check of specialize_k_one(expand(code)).
LaurentA bracket_oracle(const GaussCode& code);

struct CalibrationFixture {
  GaussCode code;
  ArrowPolynomial expected;
};

class CalibrationError : public std::runtime_error {
public:
  CalibrationError(const std::string& what, std::size_t survivors)
      : std::runtime_error(what), survivors_(survivors) {}
  std::size_t survivors() const noexcept { return survivors_; }

private:
  std::size_t survivors_;
};

/// Candidates from Convention::candidates() whose expand() matches every
/// fixture, in candidate order.
std::vector<Convention> calibration_survivors(std::span<const CalibrationFixture> fixtures);

/// The unique surviving candidate; throws CalibrationError otherwise.
Convention calibrate_convention(std::span<const CalibrationFixture> fixtures);

/// Fixtures that pin the shipped convention: a positive trefoil and a
/// mixed-sign classical knot (targets from bracket_oracle), plus the
/// virtualized trefoil with its published arrow polynomial.
std::vector<CalibrationFixture> embedded_calibration_fixtures();

}  // namespace vkarrow
