#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "commands.hpp"
#include "vkarrow/knot_table.hpp"

using namespace vkarrow;
using namespace vkarrow::cli;

namespace {

std::string data_path(const std::string& name) { return std::string(VKARROW_DATA_DIR) + "/" + name; }

std::string run_batch(const Options& opts, const std::string& table, int* rc = nullptr) {
  std::istringstream in(table);
  std::ostringstream out, err;
  const int r = cmd_batch(in, opts, out, err);
  if (rc) *rc = r;
  return out.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  return parts;
}

const char* kSmallTable =
    "tref\tO1+U2+O3+U1+O2+U3+\n"
    "vt\tO1-U2+O3+U1-O2+U3+\n"
    "v2\tO1-O2-U1-U2-\n";

}  // namespace

TEST(Cli, ParseFormat) {
  OutputFormat f{};
  EXPECT_TRUE(parse_format("latex", f));
  EXPECT_EQ(f, OutputFormat::Latex);
  EXPECT_FALSE(parse_format("yaml", f));
}

TEST(Cli, LatexPolynomial) {
  EXPECT_EQ(latex_polynomial(parse_poly("-2*A^-2*K1 + A^4 + 1")), "-2A^{-2}K_{1} + 1 + A^{4}");
  EXPECT_EQ(latex_polynomial(parse_poly("K1^2*A")), "AK_{1}^{2}");
  EXPECT_EQ(latex_polynomial(ArrowPolynomial{}), "0");
}

TEST(Cli, ComputeText) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_compute("O1-U2+O3+U1-O2+U3+", {}, out, err), kSuccess);
  EXPECT_NE(out.str().find("normalized_polynomial: A^-8 - A^-8*K1^2 + K1^2\n"), std::string::npos);
  EXPECT_NE(out.str().find("v_lower: 2\n"), std::string::npos);
}

TEST(Cli, ComputeRejectsBadCode) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_compute("O1+U2+", {}, out, err), kInputError);
  EXPECT_TRUE(out.str().empty());
  EXPECT_FALSE(err.str().empty());
}

TEST(Cli, BatchReportsBadLinesAndContinues) {
  int rc = 0;
  const auto out = run_batch({}, std::string(kSmallTable) + "broken\tO1+\n", &rc);
  EXPECT_EQ(rc, kInputError);
  EXPECT_NE(out.find("name: v2"), std::string::npos);
}

TEST(Cli, BatchParallelMatchesSerial) {
  std::ifstream in(data_path("knots4.tsv"));
  std::stringstream table;
  table << in.rdbuf();
  Options serial;
  serial.format = OutputFormat::Csv;
  Options parallel = serial;
  parallel.threads = 4;
  EXPECT_EQ(run_batch(serial, table.str()), run_batch(parallel, table.str()));
}

TEST(Cli, FormatsAgree) {
  Options text;
  Options csv;
  csv.format = OutputFormat::Csv;
  Options json;
  json.format = OutputFormat::Json;
  Options latex;
  latex.format = OutputFormat::Latex;

  const auto csv_lines = split(run_batch(csv, kSmallTable), '\n');
  const auto json_lines = split(run_batch(json, kSmallTable), '\n');
  const auto latex_lines = split(run_batch(latex, kSmallTable), '\n');
  const auto text_out = run_batch(text, kSmallTable);

  ASSERT_EQ(csv_lines.size(), 4u);
  ASSERT_EQ(json_lines.size(), 3u);
  ASSERT_EQ(latex_lines.size(), 6u);
  EXPECT_EQ(csv_lines[0],
            "name,gauss_code,writhe,arrow_polynomial,normalized_polynomial,bracket,max_k_degree,"
            "v_lower,genus_lower");
  EXPECT_EQ(latex_lines.back(), "\\end{tabular}");

  for (std::size_t i = 0; i < 3; ++i) {
    const auto cells = split(csv_lines[i + 1], ',');
    ASSERT_EQ(cells.size(), 9u);
    const auto j = nlohmann::json::parse(json_lines[i]);
    EXPECT_EQ(j["name"], cells[0]);
    EXPECT_EQ(j["gauss_code"], cells[1]);
    EXPECT_EQ(j["writhe"].get<int>(), std::stoi(cells[2]));
    EXPECT_EQ(j["arrow_polynomial"], cells[3]);
    EXPECT_EQ(j["normalized_polynomial"], cells[4]);
    EXPECT_EQ(j["bracket"], cells[5]);
    EXPECT_EQ(j["v_lower"].get<unsigned>(), std::stoul(cells[7]));
    EXPECT_EQ(j["genus_lower"].get<unsigned>(), std::stoul(cells[8]));
    EXPECT_NE(text_out.find("arrow_polynomial: " + cells[3] + "\n"), std::string::npos);

    const auto row = latex_lines[i + 2];
    const auto expect = cells[0] + " & $" + latex_polynomial(parse_poly(cells[3])) + "$ & " +
                        cells[7] + " & " + cells[8] + " \\\\ \\hline";
    EXPECT_EQ(row, expect);
  }
}

TEST(Cli, LatexNormalizedColumn) {
  Options latex;
  latex.format = OutputFormat::Latex;
  latex.normalized = true;
  const auto out = run_batch(latex, "vt\tO1-U2+O3+U1-O2+U3+\n");
  EXPECT_NE(out.find("Normalized"), std::string::npos);
  EXPECT_NE(out.find("$A^{-8} - A^{-8}K_{1}^{2} + K_{1}^{2}$"), std::string::npos);
}

TEST(Cli, BoundsOnly) {
  Options json;
  json.format = OutputFormat::Json;
  json.bounds_only = true;
  const auto j = nlohmann::json::parse(run_batch(json, "v2\tO1-O2-U1-U2-\n"));
  EXPECT_EQ(j.size(), 4u);
  EXPECT_EQ(j["v_lower"], 1);
  EXPECT_EQ(j["genus_lower"], 1);
}

TEST(Cli, VerifyExitCodes) {
  const std::set<std::string> allow{"4.09", "4.42", "4.45", "4.62", "4.97"};
  auto run = [&](const std::set<std::string>& allow_list, std::string* text) {
    std::ifstream table(data_path("knots4.tsv"));
    std::ifstream fixtures(data_path("table_fixtures.tsv"));
    std::ostringstream out, err;
    Options opts;
    opts.threads = 2;
    const int rc = cmd_verify(table, fixtures, allow_list, opts, out, err);
    if (text) *text = out.str();
    return rc;
  };
  std::string text;
  EXPECT_EQ(run(allow, &text), kSuccess);
  EXPECT_NE(text.find("ERRATUM\t4.42\tv\texpected=2\tcomputed=3\tallowed"), std::string::npos);
  EXPECT_NE(text.find("ERRATUM\t4.45\tg\texpected=1\tcomputed=2\tallowed"), std::string::npos);
  EXPECT_NE(text.find("ERRATUM\t4.97\tg\texpected=1\tcomputed=2\tallowed"), std::string::npos);
  EXPECT_EQ(run({}, nullptr), kMismatch);
}

TEST(Cli, VerifyReportsMissing) {
  std::istringstream table("a\tO1+U1+\n");
  std::istringstream fixtures("a\t-A^3\t0\t0\nb\t1\t0\t0\n");
  std::ostringstream out, err;
  EXPECT_EQ(cmd_verify(table, fixtures, {}, {}, out, err), kMismatch);
  EXPECT_NE(out.str().find("MISSING\tb"), std::string::npos);
}

TEST(Cli, Selfcheck) {
  std::ostringstream out;
  EXPECT_EQ(cmd_selfcheck(Convention::calibrated(), out), kSuccess) << out.str();
  Convention wrong = Convention::calibrated();
  wrong.over_entry_sign[0][1] = 1;
  std::ostringstream out2;
  EXPECT_EQ(cmd_selfcheck(wrong, out2), kMismatch);
}
