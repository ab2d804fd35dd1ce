#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vkarrow {

enum class Strand : std::uint8_t { Over, Under };

enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }
constexpr Sign operator-(Sign s) noexcept {
  return s == Sign::Positive ? Sign::Negative : Sign::Positive;
}
constexpr Strand opposite(Strand s) noexcept {
  return s == Strand::Over ? Strand::Under : Strand::Over;
}

/// One passage of the knot through a classical crossing.
struct GaussPass {
  unsigned crossing = 0;
  Strand strand = Strand::Over;
  Sign sign = Sign::Positive;

  friend bool operator==(const GaussPass&, const GaussPass&) = default;
};

enum class GaussErrorKind {
  MalformedToken,
  WrongPassCount,
  RepeatedStrand,
  InconsistentSign,
  MultiComponent,
};

class GaussCodeError : public std::runtime_error {
public:
  GaussCodeError(GaussErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  GaussErrorKind kind() const noexcept { return kind_; }

private:
  GaussErrorKind kind_;
};

/// A validated signed Gauss code of a one-component virtual knot diagram.
///
/// The pass sequence is cyclic; position i is followed by i+1 (mod length).
/// Every crossing label occurs exactly twice, once Over and once Under, with
/// one sign. Labels are kept as given; `canonical_string` relabels them.
/// Virtual crossings carry no data here: the invariants computed downstream
/// depend only on this sequence.
class GaussCode {
public:
  GaussCode() = default;

  /// Validates and wraps `passes`; throws GaussCodeError.
  explicit GaussCode(std::vector<GaussPass> passes);

  std::span<const GaussPass> passes() const noexcept { return passes_; }
  std::size_t length() const noexcept { return passes_.size(); }
  std::size_t crossing_count() const noexcept { return passes_.size() / 2; }
  bool empty() const noexcept { return passes_.empty(); }

  const GaussPass& operator[](std::size_t i) const { return passes_[i]; }

  /// Position of the other pass through the same crossing.
  std::size_t partner(std::size_t position) const { return partner_[position]; }

  /// Largest crossing label in use (0 for the unknot).
  unsigned max_label() const noexcept;

  friend bool operator==(const GaussCode& a, const GaussCode& b) {
    return a.passes_ == b.passes_;
  }

private:
  std::vector<GaussPass> passes_;
  std::vector<std::size_t> partner_;
};

/// Parses `O<k><s>` / `U<k><s>` tokens, optionally separated by single
/// spaces. Leading/trailing whitespace is ignored; empty text is the unknot.
GaussCode parse_gauss(std::string_view text);

/// Prints the passes with their labels as stored.
std::string to_string(const GaussCode& code);

/// Prints with labels renumbered 1..n in order of first appearance.
std::string canonical_string(const GaussCode& code);

int writhe(const GaussCode& code);

/// Negates every sign and swaps Over/Under on every pass.
GaussCode mirror(const GaussCode& code);

/// Reverses the traversal order; signs and strands are kept.
GaussCode reverse(const GaussCode& code);

/// Cyclic rotation so that position `shift` becomes position 0.
GaussCode rotate(const GaussCode& code, std::size_t shift);

/// Order of the two passes of an inserted kink.
enum class KinkChirality { OverFirst, UnderFirst };

/// Inserts a Reidemeister I kink with a fresh label before `position`.
GaussCode insert_r1(const GaussCode& code, std::size_t position, Sign kink_sign,
                    KinkChirality chirality);

enum class R2Variant { OverFirst, UnderFirst };

/// Inserts a Reidemeister II pair with fresh labels i < j.
///
/// OverFirst puts (O i, O j) before `pos_a` and (U j, U i) before `pos_b`;
/// UnderFirst swaps the strand roles. Crossing i gets `first_sign`, j the
/// opposite sign. When pos_a == pos_b the second pair follows the first.
GaussCode insert_r2(const GaussCode& code, std::size_t pos_a, std::size_t pos_b,
                    R2Variant variant, Sign first_sign = Sign::Positive);

enum class MoveKind { R1, R2, R3, Mirror, Reverse };

struct MovePair {
  GaussCode before;
  GaussCode after;
  MoveKind move = MoveKind::R3;
};

/// Hand-checked Reidemeister III pairs. Each pair is the closure of two
/// (virtual) braid words that differ by one braid relation
/// s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1} (or a mixed-sign variant).
std::vector<MovePair> r3_fixture_pairs();

}  // namespace vkarrow
