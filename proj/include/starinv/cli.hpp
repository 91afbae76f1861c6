#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "starinv/matrix.hpp"

namespace starinv::cli {

// A matrix as it appears on the wire. Entries are row-major strings:
// integers and fractions for "rational", residue digits for "gf:<p>".
struct MatrixDocument {
  std::string field;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::string> entries;

  bool operator==(const MatrixDocument&) const = default;
};

using AnyMatrix = std::variant<RationalMatrix, PrimeMatrix>;

// Parses one YAML or JSON mapping. `default_field` fills a missing "field"
// key. Errors are Errc::parse_error with "<source>:<line>:<column>: ...".
MatrixDocument parse_document(std::string_view text, std::string_view source,
                              std::string_view default_field = "rational");

// Validates field tag, shape and every entry.
AnyMatrix to_matrix(const MatrixDocument& doc, std::string_view source = "<document>");
MatrixDocument to_document(const AnyMatrix& m);

// Canonical single-line JSON: keys field, rows, cols, entries in that order.
std::string serialize(const MatrixDocument& doc);

// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

enum ExitStatus : int { exit_ok = 0, exit_negative = 1, exit_input_error = 2 };

// Runs the command line in-process. The report goes to `out` (or the
// --output file); usage errors go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        std::istream& in);

}  // namespace starinv::cli
