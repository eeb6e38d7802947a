#include "mirkit/csv.h"

#include "mirkit/errors.h"

namespace mirkit::csv {

namespace {

bool is_blank_record(const std::vector<std::string>& fields) {
  return fields.size() == 1 && fields[0].empty();
}

}  // namespace

Table parse(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> fields;
  std::string field;
  bool in_quotes = false;

  size_t i = 0;
  const size_t n = text.size();
  auto end_field = [&] {
    fields.push_back(std::move(field));
    field.clear();
  };
  auto end_record = [&] {
    end_field();
    if (!is_blank_record(fields)) records.push_back(std::move(fields));
    fields.clear();
  };

  while (i < n) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < n && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field += c;
      }
      ++i;
      continue;
    }
    switch (c) {
      case '"':
        if (field.empty()) {
          in_quotes = true;
        } else {
          field += c;  // stray quote mid-field, kept literally
        }
        ++i;
        break;
      case ',':
        end_field();
        ++i;
        break;
      case '\r':
        if (i + 1 < n && text[i + 1] == '\n') ++i;
        end_record();
        ++i;
        break;
      case '\n':
        end_record();
        ++i;
        break;
      default:
        field += c;
        ++i;
        break;
    }
  }
  // Final record when the document does not end with a newline.
  if (!field.empty() || !fields.empty()) end_record();

  if (records.empty()) throw IngestError("missing header row");

  Table table;
  table.header = std::move(records.front());
  table.rows.assign(std::make_move_iterator(records.begin() + 1),
                    std::make_move_iterator(records.end()));
  return table;
}

std::string escape_field(std::string_view field) {
  const bool needs_quotes =
      field.find_first_of(",\"\r\n") != std::string_view::npos;
  if (!needs_quotes) return std::string(field);
  std::string out;
  out.reserve(field.size() + 2);
  out += '"';
  for (const char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string join_row(const std::vector<std::string>& fields) {
  std::string out;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += ',';
    out += escape_field(fields[i]);
  }
  return out;
}

}  // namespace mirkit::csv
