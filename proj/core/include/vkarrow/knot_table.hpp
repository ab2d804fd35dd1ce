#pragma once

#include <cstddef>
#include <istream>
#include <set>
#include <string>
#include <vector>

#include "vkarrow/gauss_code.hpp"
#include "vkarrow/polynomial.hpp"

namespace vkarrow {

// Text formats: UTF-8, one record per line, fields separated by a single
// TAB, lines starting with '#' and blank lines ignored.
//
//   knot table:  name<TAB>gauss_code
//   fixtures:    name<TAB>polynomial<TAB>v<TAB>g
//   allow-list:  name

struct LineError {
  std::size_t line = 0;
  std::string message;
};

struct KnotRecord {
  std::string name;
  GaussCode code;
  std::size_t line = 0;
};

struct FixtureRecord {
  std::string name;
  ArrowPolynomial polynomial;
  unsigned v = 0;
  unsigned g = 0;
  std::size_t line = 0;
};

template <class Record>
struct TableRead {
  std::vector<Record> records;
  std::vector<LineError> errors;
};

TableRead<KnotRecord> read_knot_table(std::istream& in);
TableRead<FixtureRecord> read_fixtures(std::istream& in);
std::set<std::string> read_allow_list(std::istream& in);

}  // namespace vkarrow
