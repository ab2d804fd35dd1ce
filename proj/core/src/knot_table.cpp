#include "vkarrow/knot_table.hpp"

#include <charconv>

namespace vkarrow {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}

// Calls fn(line_number, line) for every non-comment, non-blank line.
template <class Fn>
void for_each_record(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    fn(number, line);
  }
}

bool parse_unsigned(const std::string& s, unsigned& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size() && !s.empty();
}

}  // namespace

TableRead<KnotRecord> read_knot_table(std::istream& in) {
  TableRead<KnotRecord> out;
  for_each_record(in, [&](std::size_t number, const std::string& line) {
    const auto fields = split_tabs(line);
    if (fields.size() != 2 || fields[0].empty()) {
      out.errors.push_back({number, "expected name<TAB>gauss_code"});
      return;
    }
    try {
      out.records.push_back({fields[0], parse_gauss(fields[1]), number});
    } catch (const GaussCodeError& e) {
      out.errors.push_back({number, fields[0] + ": " + e.what()});
    }
  });
  return out;
}

TableRead<FixtureRecord> read_fixtures(std::istream& in) {
  TableRead<FixtureRecord> out;
  for_each_record(in, [&](std::size_t number, const std::string& line) {
    const auto fields = split_tabs(line);
    if (fields.size() != 4 || fields[0].empty()) {
      out.errors.push_back({number, "expected name<TAB>polynomial<TAB>v<TAB>g"});
      return;
    }
    FixtureRecord r;
    r.name = fields[0];
    r.line = number;
    try {
      r.polynomial = parse_poly(fields[1]);
    } catch (const PolynomialParseError& e) {
      out.errors.push_back({number, r.name + ": " + e.what()});
      return;
    }
    if (!parse_unsigned(fields[2], r.v) || !parse_unsigned(fields[3], r.g)) {
      out.errors.push_back({number, r.name + ": v and g must be non-negative integers"});
      return;
    }
    out.records.push_back(std::move(r));
  });
  return out;
}

std::set<std::string> read_allow_list(std::istream& in) {
  std::set<std::string> names;
  for_each_record(in, [&](std::size_t, const std::string& line) {
    const auto begin = line.find_first_not_of(" \t");
    const auto end = line.find_first_of(" \t", begin);
    names.insert(line.substr(begin, end - begin));
  });
  return names;
}

}  // namespace vkarrow
