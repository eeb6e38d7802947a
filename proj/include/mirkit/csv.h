#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mirkit::csv {

// A parsed CSV document: the header row plus every non-blank data record.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// RFC-4180-style parser: quoted fields with "" escapes, embedded commas
// and newlines, LF or CRLF line endings. Records that consist of a single
// empty field (blank lines) are dropped entirely; they are not data rows.
// Throws IngestError when the document has no header row.
Table parse(std::string_view text);

// Quotes a field iff it contains a comma, quote, CR or LF.
std::string escape_field(std::string_view field);

// Joins fields into one CSV record (no trailing newline).
std::string join_row(const std::vector<std::string>& fields);

}  // namespace mirkit::csv
