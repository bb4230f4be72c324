#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "addtrans/dirichlet.hpp"
#include "addtrans/value.hpp"

namespace addtrans {

/// Rows of an (n, value) table plus an optional provenance note. The
/// emitters below are canonical: parsing an emitted document and
/// re-emitting it reproduces the exact bytes.
struct TableDoc {
  std::vector<std::pair<std::uint64_t, Value>> rows;
  std::string provenance;  // empty = none
};

TableDoc table_doc(const ValueTable& table);
TableDoc table_doc(const ValueTable& table, std::uint64_t lo,
                   std::uint64_t hi);

/// Header "n,value", one "n,<exact value>" row per line, LF endings.
std::string to_csv(const TableDoc& doc);
std::optional<TableDoc> parse_csv(std::string_view text);

/// The pieces of the CSV format, for callers that stream rows instead of
/// materializing a document. to_csv is exactly csv_header() followed by
/// csv_row() per row.
std::string csv_header();
std::string csv_row(std::uint64_t n, const Value& v);

/// {"columns":["n","value"],"provenance":...,"rows":[[n,"value"],...]},
/// two-space indent, trailing newline. "provenance" is present only when
/// non-empty.
std::string to_json(const TableDoc& doc);
std::optional<TableDoc> parse_json(std::string_view text);

/// Right-aligned n column, one row per line. Human output; no header.
std::string to_text(const TableDoc& doc);

}  // namespace addtrans
