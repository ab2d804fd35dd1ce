#pragma once

#include <vector>

#include "vkarrow/polynomial.hpp"

namespace vkarrow {

/// How many essential curve classes a summand witnesses.
enum class GenusRule {
  /// Distinct K-indices in the summand (K1^3 counts once).
  DistinctIndices,
  /// K-factors with multiplicity (K1^3 counts three times).
  Multiplicity,
};

struct BoundsReport {
  unsigned max_k_degree = 0;
  unsigned v_lower = 0;
  unsigned genus_lower = 0;
  unsigned curve_count = 0;
  std::vector<ArrowMonomial> degree_witnesses;
  std::vector<ArrowMonomial> genus_witnesses;
};

/// sum of index * power over the K-part; 0 for a pure A-power.
unsigned k_degree(const ArrowMonomial& m);

unsigned curve_count(const ArrowMonomial& m, GenusRule rule = GenusRule::DistinctIndices);

/// Maximum k-degree over the polynomial's summands.
unsigned virtual_crossing_lower_bound(const ArrowPolynomial& p);

/// Smallest genus admitting `curves` disjoint essential curve classes:
/// 0 curves -> 0, 1 -> 1, otherwise the least g >= 2 with 3g - 3 >= curves.
unsigned genus_for_curves(unsigned curves);

unsigned genus_lower_bound(const ArrowPolynomial& p,
                           GenusRule rule = GenusRule::DistinctIndices);

BoundsReport compute_bounds(const ArrowPolynomial& p,
                            GenusRule rule = GenusRule::DistinctIndices);

}  // namespace vkarrow
