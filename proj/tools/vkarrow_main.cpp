#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "commands.hpp"
#include "vkarrow/knot_table.hpp"

using namespace vkarrow;
using namespace vkarrow::cli;

namespace {

bool open_input(const std::string& path, std::ifstream& in) {
  in.open(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << '\n';
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arrow polynomial and virtual-knot bounds from Gauss codes"};
  app.require_subcommand(1);

  Options options;
  std::string format = "text";
  bool raw = false;
  std::string genus_rule = "distinct";
  std::string allow_list_path;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text, csv, json or latex")
        ->check(CLI::IsMember({"text", "csv", "json", "latex"}));
    auto* norm = sub->add_flag("--normalized", options.normalized,
                               "latex: print the writhe-normalized polynomial");
    sub->add_flag("--raw", raw, "latex: print the unnormalized polynomial (default)")
        ->excludes(norm);
    sub->add_flag("--bounds-only", options.bounds_only, "only print v(K) and g(K) bounds");
    sub->add_option("--threads", options.threads, "worker threads, 0 = all cores");
    sub->add_option("--genus-rule", genus_rule, "distinct or multiplicity")
        ->check(CLI::IsMember({"distinct", "multiplicity"}));
  };

  std::string code;
  auto* compute = app.add_subcommand("compute", "invariants of one Gauss code");
  compute->add_option("code", code, "Gauss code, e.g. O1+U2+O3+U1+O2+U3+")->required();
  add_common(compute);

  std::string table_path;
  auto* batch = app.add_subcommand("batch", "invariants of every knot in a table");
  batch->add_option("table", table_path, "TSV file: name<TAB>gauss_code")->required();
  add_common(batch);

  std::string fixtures_path;
  auto* verify = app.add_subcommand("verify", "compare computed invariants with a fixture table");
  verify->add_option("table", table_path, "knot table")->required();
  verify->add_option("fixtures", fixtures_path, "TSV file: name<TAB>polynomial<TAB>v<TAB>g")
      ->required();
  verify->add_option("--allow-list", allow_list_path, "names whose mismatches are tolerated");
  add_common(verify);

  app.add_subcommand("selfcheck", "recalibrate the cusp convention and run oracle checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Error& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kSuccess : kInputError;
  }

  parse_format(format, options.format);
  if (raw) options.normalized = false;
  options.genus_rule =
      genus_rule == "multiplicity" ? GenusRule::Multiplicity : GenusRule::DistinctIndices;

  try {
    if (*compute) return cmd_compute(code, options, std::cout, std::cerr);
    if (*batch) {
      std::ifstream in;
      if (!open_input(table_path, in)) return kInputError;
      return cmd_batch(in, options, std::cout, std::cerr);
    }
    if (*verify) {
      std::ifstream table, fixtures;
      if (!open_input(table_path, table) || !open_input(fixtures_path, fixtures)) {
        return kInputError;
      }
      std::set<std::string> allow;
      if (!allow_list_path.empty()) {
        std::ifstream al;
        if (!open_input(allow_list_path, al)) return kInputError;
        allow = read_allow_list(al);
      }
      return cmd_verify(table, fixtures, allow, options, std::cout, std::cerr);
    }
    return cmd_selfcheck(Convention::calibrated(), std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}
