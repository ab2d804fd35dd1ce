#include "vkarrow/bounds.hpp"

#include <algorithm>

namespace vkarrow {

unsigned k_degree(const ArrowMonomial& m) {
  unsigned d = 0;
  for (const auto& [index, power] : m.k_powers()) d += index * power;
  return d;
}

unsigned curve_count(const ArrowMonomial& m, GenusRule rule) {
  if (rule == GenusRule::DistinctIndices) {
    return static_cast<unsigned>(m.k_powers().size());
  }
  unsigned total = 0;
  for (const auto& kp : m.k_powers()) total += kp.second;
  return total;
}

unsigned virtual_crossing_lower_bound(const ArrowPolynomial& p) {
  unsigned best = 0;
  for (const auto& [m, c] : p.terms()) best = std::max(best, k_degree(m));
  return best;
}

unsigned genus_for_curves(unsigned curves) {
  if (curves <= 1) return curves;
  // 3g - 3 >= curves  <=>  g >= (curves + 3) / 3
  return std::max(2u, (curves + 3 + 2) / 3);
}

unsigned genus_lower_bound(const ArrowPolynomial& p, GenusRule rule) {
  unsigned curves = 0;
  for (const auto& [m, c] : p.terms()) curves = std::max(curves, curve_count(m, rule));
  return genus_for_curves(curves);
}

BoundsReport compute_bounds(const ArrowPolynomial& p, GenusRule rule) {
  BoundsReport r;
  for (const auto& [m, c] : p.terms()) {
    r.max_k_degree = std::max(r.max_k_degree, k_degree(m));
    r.curve_count = std::max(r.curve_count, curve_count(m, rule));
  }
  r.v_lower = r.max_k_degree;
  r.genus_lower = genus_for_curves(r.curve_count);
  if (r.max_k_degree > 0) {
    for (const auto& [m, c] : p.terms()) {
      if (k_degree(m) == r.max_k_degree) r.degree_witnesses.push_back(m);
      if (curve_count(m, rule) == r.curve_count) r.genus_witnesses.push_back(m);
    }
  }
  return r;
}

}  // namespace vkarrow
