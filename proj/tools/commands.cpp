#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <ostream>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "vkarrow/knot_table.hpp"

namespace vkarrow::cli {

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string latex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '_' || c == '&' || c == '%' || c == '#' || c == '$') out += '\\';
    out += c;
  }
  return out;
}

std::vector<InvariantReport> compute_all(const std::vector<KnotRecord>& knots,
                                         const Options& options) {
  std::vector<InvariantReport> reports(knots.size());
  ReportOptions ro;
  ro.genus_rule = options.genus_rule;

  unsigned workers = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(std::max<std::size_t>(knots.size(), 1)));
  if (workers == 1) {
    for (std::size_t i = 0; i < knots.size(); ++i) {
      reports[i] = full_report(knots[i].code, ro, knots[i].name);
    }
    return reports;
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = next++; i < knots.size(); i = next++) {
            reports[i] = full_report(knots[i].code, ro, knots[i].name);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return reports;
}

void report_line_errors(const std::vector<LineError>& errors, std::ostream& err) {
  for (const auto& e : errors) err << "line " << e.line << ": " << e.message << '\n';
}

}  // namespace

bool parse_format(std::string_view text, OutputFormat& out) {
  static const std::map<std::string_view, OutputFormat> kFormats = {
      {"text", OutputFormat::Text},
      {"csv", OutputFormat::Csv},
      {"json", OutputFormat::Json},
      {"latex", OutputFormat::Latex},
  };
  auto it = kFormats.find(text);
  if (it == kFormats.end()) return false;
  out = it->second;
  return true;
}

std::string latex_polynomial(const ArrowPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    std::string body;
    if (m.a_exp() == 1) {
      body = "A";
    } else if (m.a_exp() != 0) {
      body = "A^{" + std::to_string(m.a_exp()) + "}";
    }
    for (const auto& [index, power] : m.k_powers()) {
      body += "K_{" + std::to_string(index) + "}";
      if (power != 1) body += "^{" + std::to_string(power) + "}";
    }
    const auto mag = c < 0 ? -static_cast<unsigned long long>(c) : static_cast<unsigned long long>(c);
    std::string term = (mag != 1 || body.empty()) ? std::to_string(mag) + body : body;
    if (first) {
      out = (c < 0 ? "-" : "") + term;
      first = false;
    } else {
      out += (c < 0 ? " - " : " + ") + term;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// ReportWriter

ReportWriter::ReportWriter(std::ostream& out, const Options& options)
    : out_(out), options_(options) {}

ReportWriter::~ReportWriter() {
  if (!finished_) {
    try {
      finish();
    } catch (...) {
    }
  }
}

void ReportWriter::begin() {
  if (begun_) return;
  begun_ = true;
  switch (options_.format) {
    case OutputFormat::Csv:
      if (options_.bounds_only) {
        out_ << "name,max_k_degree,v_lower,genus_lower\n";
      } else {
        out_ << "name,gauss_code,writhe,arrow_polynomial,normalized_polynomial,bracket,"
                "max_k_degree,v_lower,genus_lower\n";
      }
      break;
    case OutputFormat::Latex:
      if (options_.bounds_only) {
        out_ << "\\begin{tabular}{l|l|l}\nKnot & v(K) & g(K) \\\\ \\hline\n";
      } else {
        out_ << "\\begin{tabular}{l|p{3 in}|l|l}\nKnot & "
             << (options_.normalized ? "Normalized Arrow Polynomial" : "Arrow Polynomial")
             << " & v(K) & g(K) \\\\ \\hline\n";
      }
      break;
    case OutputFormat::Text:
    case OutputFormat::Json:
      break;
  }
}

void ReportWriter::write(const InvariantReport& r) {
  begin();
  const auto& b = r.bounds;
  switch (options_.format) {
    case OutputFormat::Text:
      if (written_ > 0 && !options_.bounds_only) out_ << '\n';
      if (options_.bounds_only) {
        out_ << r.name << "\tv_lower=" << b.v_lower << "\tgenus_lower=" << b.genus_lower
             << "\tmax_k_degree=" << b.max_k_degree << '\n';
        break;
      }
      out_ << "name: " << r.name << '\n'
           << "gauss_code: " << r.gauss_code << '\n'
           << "writhe: " << r.writhe << '\n'
           << "arrow_polynomial: " << to_string(r.arrow_polynomial) << '\n'
           << "normalized_polynomial: " << to_string(r.normalized_polynomial) << '\n'
           << "bracket: " << to_string(r.bracket) << '\n'
           << "max_k_degree: " << b.max_k_degree << '\n'
           << "v_lower: " << b.v_lower << '\n'
           << "genus_lower: " << b.genus_lower << '\n';
      break;
    case OutputFormat::Csv:
      out_ << csv_escape(r.name) << ',';
      if (!options_.bounds_only) {
        out_ << r.gauss_code << ',' << r.writhe << ',' << to_string(r.arrow_polynomial) << ','
             << to_string(r.normalized_polynomial) << ',' << to_string(r.bracket) << ',';
      }
      out_ << b.max_k_degree << ',' << b.v_lower << ',' << b.genus_lower << '\n';
      break;
    case OutputFormat::Json: {
      nlohmann::ordered_json j;
      j["name"] = r.name;
      if (!options_.bounds_only) {
        j["gauss_code"] = r.gauss_code;
        j["writhe"] = r.writhe;
        j["arrow_polynomial"] = to_string(r.arrow_polynomial);
        j["normalized_polynomial"] = to_string(r.normalized_polynomial);
        j["bracket"] = to_string(r.bracket);
      }
      j["max_k_degree"] = b.max_k_degree;
      j["v_lower"] = b.v_lower;
      j["genus_lower"] = b.genus_lower;
      out_ << j.dump() << '\n';
      break;
    }
    case OutputFormat::Latex:
      out_ << latex_escape(r.name) << " & ";
      if (!options_.bounds_only) {
        const auto& p = options_.normalized ? r.normalized_polynomial : r.arrow_polynomial;
        out_ << "$" << latex_polynomial(p) << "$ & ";
      }
      out_ << b.v_lower << " & " << b.genus_lower << " \\\\ \\hline\n";
      break;
  }
  ++written_;
}

void ReportWriter::finish() {
  if (finished_) return;
  finished_ = true;
  if (begun_ && options_.format == OutputFormat::Latex) out_ << "\\end{tabular}\n";
  out_.flush();
}

// ---------------------------------------------------------------------------
// Commands

int cmd_compute(std::string_view gauss_code, const Options& options, std::ostream& out,
                std::ostream& err) {
  GaussCode code;
  try {
    code = parse_gauss(gauss_code);
  } catch (const GaussCodeError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  ReportOptions ro;
  ro.threads = options.threads;
  ro.genus_rule = options.genus_rule;
  ReportWriter writer(out, options);
  writer.write(full_report(code, ro, std::string(gauss_code)));
  writer.finish();
  return kSuccess;
}

int cmd_batch(std::istream& table, const Options& options, std::ostream& out,
              std::ostream& err) {
  const auto read = read_knot_table(table);
  report_line_errors(read.errors, err);
  const auto reports = compute_all(read.records, options);
  if (!reports.empty()) {
    ReportWriter writer(out, options);
    for (const auto& r : reports) writer.write(r);
    writer.finish();
  }
  return read.errors.empty() ? kSuccess : kInputError;
}

int cmd_verify(std::istream& table, std::istream& fixtures,
               const std::set<std::string>& allow_list, const Options& options,
               std::ostream& out, std::ostream& err) {
  const auto knots = read_knot_table(table);
  const auto expected = read_fixtures(fixtures);
  report_line_errors(knots.errors, err);
  report_line_errors(expected.errors, err);

  std::map<std::string, const InvariantReport*> by_name;
  const auto reports = compute_all(knots.records, options);
  for (const auto& r : reports) by_name.emplace(r.name, &r);

  std::size_t errata = 0;
  std::size_t allowed = 0;
  std::size_t missing = 0;
  std::set<std::string> checked;
  for (const auto& f : expected.records) {
    const auto it = by_name.find(f.name);
    if (it == by_name.end()) {
      out << "MISSING\t" << f.name << "\tno knot-table entry\n";
      ++missing;
      continue;
    }
    checked.insert(f.name);
    const auto& r = *it->second;
    const bool allow = allow_list.contains(f.name);
    auto entry = [&](std::string_view field, const std::string& want, const std::string& got) {
      if (want == got) return;
      out << "ERRATUM\t" << f.name << '\t' << field << "\texpected=" << want
          << "\tcomputed=" << got << (allow ? "\tallowed" : "") << '\n';
      ++(allow ? allowed : errata);
    };
    entry("polynomial", to_string(f.polynomial), to_string(r.arrow_polynomial));
    entry("v", std::to_string(f.v), std::to_string(r.bounds.v_lower));
    entry("g", std::to_string(f.g), std::to_string(r.bounds.genus_lower));
  }
  for (const auto& r : reports) {
    if (!checked.contains(r.name)) out << "UNCHECKED\t" << r.name << "\tno fixture\n";
  }
  out << "verified " << checked.size() << " knots: " << errata << " errata, " << allowed
      << " allowed, " << missing << " missing\n";

  if (!knots.errors.empty() || !expected.errors.empty()) return kInputError;
  return errata == 0 && missing == 0 ? kSuccess : kMismatch;
}

int cmd_selfcheck(const Convention& shipped, std::ostream& out) {
  int failures = 0;
  auto check = [&](bool ok, const std::string& what) {
    out << (ok ? "ok    " : "FAIL  ") << what << '\n';
    if (!ok) ++failures;
  };

  const auto fixtures = embedded_calibration_fixtures();
  const auto survivors = calibration_survivors(fixtures);
  check(survivors.size() == 1, "calibration leaves exactly one convention (" +
                                   std::to_string(survivors.size()) + " found)");
  check(survivors.size() == 1 && survivors.front() == shipped,
        "shipped convention matches calibration: " + to_string(shipped));

  ExpandOptions opts;
  opts.convention = shipped;
  for (const auto& f : fixtures) {
    check(expand(f.code, opts) == f.expected, "fixture " + to_string(f.code));
  }

  std::vector<GaussCode> samples;
  for (const auto& f : fixtures) samples.push_back(f.code);
  for (const auto& pair : r3_fixture_pairs()) {
    samples.push_back(pair.before);
    samples.push_back(pair.after);
  }
  bool oracle_ok = true;
  for (const auto& code : samples) {
    oracle_ok = oracle_ok && specialize_k_one(expand(code, opts)) == bracket_oracle(code);
  }
  check(oracle_ok, "bracket oracle agrees on " + std::to_string(samples.size()) + " codes");

  bool r3_ok = true;
  for (const auto& pair : r3_fixture_pairs()) {
    r3_ok = r3_ok && expand(pair.before, opts) == expand(pair.after, opts);
  }
  check(r3_ok, "Reidemeister III fixture pairs agree");

  const auto base = fixtures.back().code;
  const auto kinked = insert_r1(base, 2, Sign::Negative, KinkChirality::UnderFirst);
  check(expand(kinked, opts) == normalize_writhe(expand(base, opts), 1),
        "Reidemeister I kink scales by (-A^3)^-1");

  out << (failures == 0 ? "selfcheck passed\n" : "selfcheck FAILED\n");
  return failures == 0 ? kSuccess : kMismatch;
}

}  // namespace vkarrow::cli
