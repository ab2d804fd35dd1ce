#include "vkarrow/report.hpp"

namespace vkarrow {

InvariantReport full_report(const GaussCode& code, const ReportOptions& options,
                            std::string name) {
  InvariantReport r;
  r.name = std::move(name);
  r.gauss_code = canonical_string(code);
  r.writhe = writhe(code);
  ExpandOptions expand_options;
  expand_options.threads = options.threads;
  r.arrow_polynomial = expand(code, expand_options);
  r.normalized_polynomial = normalize_writhe(r.arrow_polynomial, r.writhe);
  r.bracket = specialize_k_one(r.arrow_polynomial);
  // Bounds come from <K>_A; normalization only shifts A-exponents.
  r.bounds = compute_bounds(r.arrow_polynomial, options.genus_rule);
  return r;
}

}  // namespace vkarrow
