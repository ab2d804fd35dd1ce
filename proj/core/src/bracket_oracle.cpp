#include <map>
#include <numeric>

#include "vkarrow/state_sum.hpp"

namespace vkarrow {

namespace {

class DisjointSets {
public:
  explicit DisjointSets(std::size_t n) : parent_(n) { reset(); }

  void reset() {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    components_ = parent_.size();
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent_[a] = b;
      --components_;
    }
  }

  std::size_t components() const noexcept { return components_; }

private:
  std::vector<std::size_t> parent_;
  std::size_t components_ = 0;
};

// The four arc ends meeting at one crossing.
struct CrossingEnds {
  std::size_t over_in, over_out, under_in, under_out;
  Sign sign;
};

}  // namespace

LaurentA bracket_oracle(const GaussCode& code) {
  const std::size_t length = code.length();
  if (length == 0) return LaurentA::one();

  // Arc k leaves position k and enters position k+1, so at position p the
  // incoming arc is p-1 and the outgoing arc is p.
  std::map<unsigned, CrossingEnds> by_label;
  for (std::size_t p = 0; p < length; ++p) {
    const auto& pass = code[p];
    auto& ends = by_label[pass.crossing];
    const std::size_t in = (p + length - 1) % length;
    if (pass.strand == Strand::Over) {
      ends.over_in = in;
      ends.over_out = p;
    } else {
      ends.under_in = in;
      ends.under_out = p;
    }
    ends.sign = pass.sign;
  }
  std::vector<CrossingEnds> crossings;
  for (const auto& [label, ends] : by_label) crossings.push_back(ends);
  const std::size_t n = crossings.size();
  if (n >= 63) throw std::invalid_argument("bracket_oracle: too many crossings");

  // Loops are unions of arcs; the A-smoothing of a positive crossing joins
  // over-in to under-out (and under-in to over-out), the B-smoothing joins
  // the two incoming ends and the two outgoing ends. A negative crossing is
  // the mirror picture, so its A and B smoothings trade places.
  std::map<std::pair<int, std::size_t>, Coefficient> tally;  // (alpha-beta, loops)
  DisjointSets sets(length);
  for (std::uint64_t state = 0; state < (std::uint64_t{1} << n); ++state) {
    sets.reset();
    int alpha_minus_beta = 0;
    for (std::size_t c = 0; c < n; ++c) {
      const bool a_smoothing = ((state >> c) & 1u) == 0;
      alpha_minus_beta += a_smoothing ? 1 : -1;
      const auto& e = crossings[c];
      const bool joins_in_to_out = a_smoothing == (e.sign == Sign::Positive);
      if (joins_in_to_out) {
        sets.unite(e.over_in, e.under_out);
        sets.unite(e.under_in, e.over_out);
      } else {
        sets.unite(e.over_in, e.under_in);
        sets.unite(e.over_out, e.under_out);
      }
    }
    ++tally[{alpha_minus_beta, sets.components()}];
  }

  const LaurentA d = LaurentA::loop_value();
  LaurentA out;
  for (const auto& [key, count] : tally) {
    const auto [exp, loops] = key;
    out += LaurentA::monomial(exp, count) * d.pow(static_cast<unsigned>(loops - 1));
  }
  return out;
}

}  // namespace vkarrow
