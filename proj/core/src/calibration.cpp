#include "vkarrow/state_sum.hpp"

namespace vkarrow {

std::vector<Convention> calibration_survivors(std::span<const CalibrationFixture> fixtures) {
  std::vector<Convention> survivors;
  for (const auto& candidate : Convention::candidates()) {
    ExpandOptions opts;
    opts.convention = candidate;
    bool ok = true;
    for (const auto& f : fixtures) {
      if (expand(f.code, opts) != f.expected) {
        ok = false;
        break;
      }
    }
    if (ok) survivors.push_back(candidate);
  }
  return survivors;
}

Convention calibrate_convention(std::span<const CalibrationFixture> fixtures) {
  if (fixtures.empty()) throw std::invalid_argument("calibrate_convention: no fixtures");
  auto survivors = calibration_survivors(fixtures);
  if (survivors.size() != 1) {
    throw CalibrationError(std::to_string(survivors.size()) +
                               " conventions match the calibration fixtures (expected 1)",
                           survivors.size());
  }
  return survivors.front();
}

std::vector<CalibrationFixture> embedded_calibration_fixtures() {
  // Positive trefoil, closure of s1^3.
  const auto trefoil = parse_gauss("O1+U2+O3+U1+O2+U3+");
  // Classical knot with mixed signs: closure of s1^3 s2 s1^-1 s2.
  const auto mixed = parse_gauss("O1+U2+O3+O4+U6+U1+O2+U3+U5-O6+U4+O5-");
  // Virtualized trefoil: the trefoil code with one crossing sign reversed.
  const auto virtualized = parse_gauss("O1-U2+O3+U1-O2+U3+");
  return {
      {trefoil, ArrowPolynomial::from_laurent(bracket_oracle(trefoil))},
      {mixed, ArrowPolynomial::from_laurent(bracket_oracle(mixed))},
      {virtualized, parse_poly("-A^-5 + A^-5*K1^2 - A^3*K1^2")},
  };
}

}  // namespace vkarrow
