#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "zlift/arith.hpp"
#include "zlift/matrix.hpp"

namespace zlift {

// Matrix text format: first line "rows cols", then one whitespace-separated
// row of decimal integers per line.
IntMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const IntMatrix& m);

// Sparse stream format: one line per row, entries as col:value pairs
// separated by whitespace (an empty line is a zero row), terminated by a
// line "." for finite streams.  Reading accepts end-of-input in place of the
// terminator.
std::vector<SparseRow> read_sparse_rows(std::istream& in);
void write_sparse_rows(std::ostream& out, std::span<const SparseRow> rows);

// Stream over the rows parsed from `in` (files are always finite).
std::unique_ptr<RowStream> open_stream(std::istream& in);

// Named procedural streams for the CLI and tests:
//   identity          rows e_i
//   banded            rows e_i + q * e_{i+1}
//   blocked           rows p * e_0 + e_{i+1}; column 0 never gets a pivot,
//                     so nothing ever stabilizes (timeout demo)
// Throws ParseError for unknown names.
std::unique_ptr<RowStream> make_fixture_stream(std::string_view name, const Modulus& mod);

}  // namespace zlift
