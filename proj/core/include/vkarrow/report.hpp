#pragma once

#include <string>

#include "vkarrow/bounds.hpp"
#include "vkarrow/gauss_code.hpp"
#include "vkarrow/polynomial.hpp"
#include "vkarrow/state_sum.hpp"

namespace vkarrow {

/// Everything computed for one knot diagram.
struct InvariantReport {
  std::string name;
  std::string gauss_code;  // canonical form
  int writhe = 0;
  ArrowPolynomial arrow_polynomial;
  ArrowPolynomial normalized_polynomial;
  LaurentA bracket;
  BoundsReport bounds;
};

struct ReportOptions {
  unsigned threads = 1;
  GenusRule genus_rule = GenusRule::DistinctIndices;
};

InvariantReport full_report(const GaussCode& code, const ReportOptions& options = {},
                            std::string name = {});

}  // namespace vkarrow
