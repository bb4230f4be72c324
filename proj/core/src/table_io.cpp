#include "addtrans/table_io.hpp"

#include <algorithm>

#include <json.hpp>

#include "addtrans/errors.hpp"

namespace addtrans {

using nlohmann::json;

TableDoc table_doc(const ValueTable& table) {
  return table_doc(table, 1, table.bound);
}

TableDoc table_doc(const ValueTable& table, std::uint64_t lo,
                   std::uint64_t hi) {
  if (lo < 1 || hi > table.bound || lo > hi) {
    throw RangeError("table_doc: range outside [1, bound]");
  }
  TableDoc doc;
  doc.provenance = table.provenance;
  doc.rows.reserve(hi - lo + 1);
  for (std::uint64_t n = lo; n <= hi; ++n) {
    doc.rows.emplace_back(n, table.values[n]);
  }
  return doc;
}

std::string csv_header() { return "n,value\n"; }

std::string csv_row(std::uint64_t n, const Value& v) {
  std::string out = std::to_string(n);
  out += ',';
  out += v.str();
  out += '\n';
  return out;
}

std::string to_csv(const TableDoc& doc) {
  std::string out = csv_header();
  for (const auto& [n, v] : doc.rows) {
    out += csv_row(n, v);
  }
  return out;
}

std::optional<TableDoc> parse_csv(std::string_view text) {
  TableDoc doc;
  std::size_t pos = 0;
  bool header = true;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) return std::nullopt;  // missing LF
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (header) {
      if (line != "n,value") return std::nullopt;
      header = false;
      continue;
    }
    const std::size_t comma = line.find(',');
    if (comma == std::string_view::npos) return std::nullopt;
    const std::string_view n_part = line.substr(0, comma);
    if (n_part.empty() ||
        n_part.find_first_not_of("0123456789") != std::string_view::npos) {
      return std::nullopt;
    }
    auto v = Value::parse(line.substr(comma + 1));
    if (!v) return std::nullopt;
    doc.rows.emplace_back(std::stoull(std::string(n_part)), *v);
  }
  if (header) return std::nullopt;  // empty input
  return doc;
}

std::string to_json(const TableDoc& doc) {
  json j;
  j["columns"] = json::array({"n", "value"});
  if (!doc.provenance.empty()) j["provenance"] = doc.provenance;
  json rows = json::array();
  for (const auto& [n, v] : doc.rows) {
    rows.push_back(json::array({n, v.str()}));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::optional<TableDoc> parse_json(std::string_view text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  if (!j.contains("columns") || j["columns"] != json::array({"n", "value"})) {
    return std::nullopt;
  }
  if (!j.contains("rows") || !j["rows"].is_array()) return std::nullopt;
  TableDoc doc;
  if (j.contains("provenance")) {
    if (!j["provenance"].is_string()) return std::nullopt;
    doc.provenance = j["provenance"].get<std::string>();
  }
  for (const auto& row : j["rows"]) {
    if (!row.is_array() || row.size() != 2 || !row[0].is_number_unsigned() ||
        !row[1].is_string()) {
      return std::nullopt;
    }
    auto v = Value::parse(row[1].get<std::string>());
    if (!v) return std::nullopt;
    doc.rows.emplace_back(row[0].get<std::uint64_t>(), *v);
  }
  return doc;
}

std::string to_text(const TableDoc& doc) {
  std::size_t width = 1;
  for (const auto& [n, v] : doc.rows) {
    width = std::max(width, std::to_string(n).size());
  }
  std::string out;
  for (const auto& [n, v] : doc.rows) {
    std::string ns = std::to_string(n);
    out.append(width - ns.size(), ' ');
    out += ns;
    out += "  ";
    out += v.str();
    out += '\n';
  }
  return out;
}

}  // namespace addtrans
