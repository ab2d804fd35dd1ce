#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <string_view>

#include "vkarrow/bounds.hpp"
#include "vkarrow/report.hpp"
#include "vkarrow/state_sum.hpp"

namespace vkarrow::cli {

enum class OutputFormat { Text, Csv, Json, Latex };

enum ExitCode : int {
  kSuccess = 0,
  kMismatch = 1,
  kInputError = 2,
};

struct Options {
  OutputFormat format = OutputFormat::Text;
  /// Which polynomial fills the single polynomial column of latex rows.
  bool normalized = false;
  bool bounds_only = false;
  /// Worker count for batch/verify; 0 = hardware concurrency.
  unsigned threads = 1;
  GenusRule genus_rule = GenusRule::DistinctIndices;
};

bool parse_format(std::string_view text, OutputFormat& out);

/// Polynomial in the tables' LaTeX notation, e.g. "-2A^{-2}K_1 + A^{4}".
std::string latex_polynomial(const ArrowPolynomial& p);

/// Streams reports in one format, emitting headers/footers once.
class ReportWriter {
public:
  ReportWriter(std::ostream& out, const Options& options);
  ~ReportWriter();
  ReportWriter(const ReportWriter&) = delete;
  ReportWriter& operator=(const ReportWriter&) = delete;

  void write(const InvariantReport& report);
  void finish();

private:
  void begin();

  std::ostream& out_;
  Options options_;
  bool begun_ = false;
  bool finished_ = false;
  std::size_t written_ = 0;
};

int cmd_compute(std::string_view gauss_code, const Options& options, std::ostream& out,
                std::ostream& err);

int cmd_batch(std::istream& table, const Options& options, std::ostream& out,
              std::ostream& err);

int cmd_verify(std::istream& table, std::istream& fixtures,
               const std::set<std::string>& allow_list, const Options& options,
               std::ostream& out, std::ostream& err);

/// Calibration regression plus oracle spot checks against `shipped`.
int cmd_selfcheck(const Convention& shipped, std::ostream& out);

}  // namespace vkarrow::cli
