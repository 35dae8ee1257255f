#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace sigdoc::csv {

using Row = std::vector<std::string>;

/// Quotes a field only when it contains a comma, quote, CR or LF.
std::string escape(std::string_view field);

/// Joins fields with commas and terminates the row with '\n'.
std::string format_row(const Row& fields);

/// Reads RFC 4180 CSV (quoted fields may span lines). Accepts LF or CRLF
/// row ends. Throws std::runtime_error on an unterminated quoted field.
std::vector<Row> parse(std::string_view text);

}  // namespace sigdoc::csv
