#include "addtrans/report_io.hpp"

#include <algorithm>
#include <array>

#include <json.hpp>

namespace addtrans {

using nlohmann::json;

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ",";
    out += p;
  }
  return out;
}

std::string counterexample_text(const CheckCounterexample& ce) {
  std::string out;
  if (ce.m) {
    out = "(m,n)=(" + ce.m->get_str() + "," + ce.n.get_str() + ")";
  } else {
    out = "n=" + ce.n.get_str();
  }
  out += " lhs=" + ce.lhs.str() + " rhs=" + ce.rhs.str();
  return out;
}

}  // namespace

std::string reports_to_json(const std::vector<IdentityReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) {
    json j;
    j["id"] = r.id;
    j["function"] = join(r.functions);
    j["range"] = r.range;
    j["status"] = std::string(to_string(r.status));
    j["checked"] = r.checked;
    if (r.skipped > 0) j["skipped"] = r.skipped;
    if (r.counterexample) {
      json ce;
      ce["n"] = r.counterexample->n.get_str();
      if (r.counterexample->m) ce["m"] = r.counterexample->m->get_str();
      ce["lhs"] = r.counterexample->lhs.str();
      ce["rhs"] = r.counterexample->rhs.str();
      j["counterexample"] = std::move(ce);
    }
    if (!r.asserted) j["erratum_candidate"] = true;
    if (!r.note.empty()) j["note"] = r.note;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::string reports_to_text(const std::vector<IdentityReport>& reports) {
  static constexpr std::array<const char*, 5> kHeaders = {
      "ID", "FUNCTION", "RANGE", "STATUS", "DETAIL"};
  std::vector<std::array<std::string, 5>> rows;
  rows.reserve(reports.size());
  std::uint64_t failures = 0;
  for (const auto& r : reports) {
    std::string status(to_string(r.status));
    if (r.status == CheckStatus::Counterexample && !r.asserted) {
      status += " (erratum-candidate)";
    } else if (r.status == CheckStatus::Counterexample) {
      ++failures;
    }
    std::string detail;
    if (r.counterexample) detail = counterexample_text(*r.counterexample);
    if (!r.note.empty()) {
      if (!detail.empty()) detail += "; ";
      detail += r.note;
    }
    if (detail.empty()) detail = "-";
    rows.push_back({r.id, join(r.functions), r.range, status, detail});
  }

  std::array<std::size_t, 5> width{};
  for (std::size_t c = 0; c < 5; ++c) width[c] = std::string(kHeaders[c]).size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < 5; ++c) width[c] = std::max(width[c], row[c].size());
  }

  auto emit_row = [&](const std::array<std::string, 5>& row) {
    std::string line;
    for (std::size_t c = 0; c < 5; ++c) {
      line += row[c];
      if (c + 1 < 5) line.append(width[c] - row[c].size() + 2, ' ');
    }
    line += '\n';
    return line;
  };

  std::string out = emit_row({kHeaders[0], kHeaders[1], kHeaders[2],
                              kHeaders[3], kHeaders[4]});
  for (const auto& row : rows) out += emit_row(row);
  out += std::to_string(reports.size()) + " check(s), " +
         std::to_string(failures) + " asserted failure(s)\n";
  return out;
}

}  // namespace addtrans
