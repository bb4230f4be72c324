#include "app.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "addtrans/dirichlet.hpp"
#include "addtrans/errors.hpp"
#include "addtrans/factorization.hpp"
#include "addtrans/identities.hpp"
#include "addtrans/report_io.hpp"
#include "addtrans/table_io.hpp"
#include "resolve.hpp"

namespace addtrans::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

constexpr std::uint64_t kTableRangeCap = 10'000'000;
constexpr std::uint64_t kDefaultVerifyBound = 10'000;

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kExitUsage;
}

int emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return std::cout ? kExitOk : kExitIo;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) {
    std::cerr << "error: cannot open " << out_path << " for writing\n";
    return kExitIo;
  }
  os << content;
  os.flush();
  if (!os) {
    std::cerr << "error: failed writing " << out_path << "\n";
    return kExitIo;
  }
  return kExitOk;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> parse_range(
    const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) return std::nullopt;
  const std::string lo_part = text.substr(0, dots);
  const std::string hi_part = text.substr(dots + 2);
  if (lo_part.empty() || hi_part.empty()) return std::nullopt;
  if (lo_part.find_first_not_of("0123456789") != std::string::npos ||
      hi_part.find_first_not_of("0123456789") != std::string::npos) {
    return std::nullopt;
  }
  try {
    return std::make_pair(std::stoull(lo_part), std::stoull(hi_part));
  } catch (...) {
    return std::nullopt;
  }
}

struct EvalArgs {
  std::string f_spec;
  std::string n_text;
  std::string format = "text";
  std::string out;
};

int cmd_eval(const EvalArgs& args) {
  auto f = resolve_fn(args.f_spec);
  if (!f) return usage_error("unknown function spec: " + args.f_spec);
  if (args.n_text.empty() ||
      args.n_text.find_first_not_of("0123456789") != std::string::npos) {
    return usage_error("--n must be a positive integer");
  }
  const Integer n(args.n_text, 10);
  if (n < 1) return usage_error("--n must be >= 1");
  const Value v = (*f)(factorize(n));
  if (args.format == "json") {
    nlohmann::json j;
    j["f"] = args.f_spec;
    j["n"] = args.n_text;
    j["value"] = v.str();
    return emit(j.dump(2) + "\n", args.out);
  }
  return emit(v.str() + "\n", args.out);
}

struct TableArgs {
  std::string f_spec;
  std::string g_spec;  // convolve only
  std::string range_text;
  std::string format = "text";
  std::string out;
};

int emit_table(const TableDoc& doc, const std::string& format,
               const std::string& out) {
  if (format == "csv") return emit(to_csv(doc), out);
  if (format == "json") return emit(to_json(doc), out);
  return emit(to_text(doc), out);
}

int cmd_table(const TableArgs& args) {
  auto f = resolve_fn(args.f_spec);
  if (!f) return usage_error("unknown function spec: " + args.f_spec);
  auto range = parse_range(args.range_text);
  if (!range || range->first < 1 || range->first > range->second) {
    return usage_error("--range must be lo..hi with 1 <= lo <= hi");
  }
  if (range->second > kTableRangeCap) {
    return usage_error("--range upper bound exceeds the sieve cap " +
                       std::to_string(kTableRangeCap));
  }
  const auto [lo, hi] = *range;
  const SpfTable spf(std::max<std::uint64_t>(hi, 2));

  if (args.format == "json") {
    // JSON needs the whole document; csv/text stream row by row so large
    // ranges never hold the table in memory.
    TableDoc doc;
    doc.provenance = args.f_spec + " on [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "]";
    doc.rows.reserve(hi - lo + 1);
    for (std::uint64_t n = lo; n <= hi; ++n) {
      doc.rows.emplace_back(n, (*f)(spf.factorize(n)));
    }
    return emit(to_json(doc), args.out);
  }

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!args.out.empty()) {
    file.open(args.out, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open " << args.out << " for writing\n";
      return kExitIo;
    }
    os = &file;
  }
  const bool csv = args.format == "csv";
  const std::size_t width = std::to_string(hi).size();
  if (csv) *os << csv_header();
  for (std::uint64_t n = lo; n <= hi; ++n) {
    const Value v = (*f)(spf.factorize(n));
    if (csv) {
      *os << csv_row(n, v);
    } else {
      const std::string ns = std::to_string(n);
      *os << std::string(width - ns.size(), ' ') << ns << "  " << v.str()
          << "\n";
    }
  }
  os->flush();
  if (!*os) {
    std::cerr << "error: failed writing table output\n";
    return kExitIo;
  }
  return kExitOk;
}

int cmd_convolve(const TableArgs& args) {
  auto f = resolve_fn(args.f_spec);
  if (!f) return usage_error("unknown function spec: " + args.f_spec);
  auto g = resolve_fn(args.g_spec);
  if (!g) return usage_error("unknown function spec: " + args.g_spec);
  auto range = parse_range(args.range_text);
  if (!range || range->first < 1 || range->first > range->second) {
    return usage_error("--range must be lo..hi with 1 <= lo <= hi");
  }
  if (range->second > kTableRangeCap) {
    return usage_error("--range upper bound exceeds the sieve cap " +
                       std::to_string(kTableRangeCap));
  }
  const ValueTable table = convolve_table(*f, *g, range->second);
  return emit_table(table_doc(table, range->first, range->second),
                    args.format, args.out);
}

struct VerifyArgs {
  std::vector<std::string> ids;
  std::vector<std::string> f_specs;
  std::uint64_t n_max = kDefaultVerifyBound;
  std::string format = "text";
  std::string out;
};

int cmd_verify(const VerifyArgs& args) {
  for (const auto& id : args.ids) {
    if (!find_identity(id)) return usage_error("unknown identity id: " + id);
  }
  std::vector<ArithFn> fns;
  fns.reserve(args.f_specs.size());
  for (const auto& spec : args.f_specs) {
    auto f = resolve_fn(spec);
    if (!f) return usage_error("unknown function spec: " + spec);
    fns.push_back(std::move(*f));
  }
  const auto reports = run_suite(args.ids, fns, args.n_max);
  const std::string content = args.format == "json"
                                  ? reports_to_json(reports)
                                  : reports_to_text(reports);
  const int rc = emit(content, args.out);
  if (rc != kExitOk) return rc;
  return suite_passed(reports) ? kExitOk : kExitIdentityFailure;
}

int cmd_list(const std::string& format, const std::string& out) {
  if (format == "json") {
    nlohmann::json j;
    nlohmann::json fns = nlohmann::json::array();
    for (const auto& f : catalog()) {
      fns.push_back({{"name", f.name()},
                     {"class", std::string(to_string(f.fn_class()))}});
    }
    nlohmann::json ids = nlohmann::json::array();
    for (const auto& spec : identity_registry()) {
      ids.push_back({{"id", spec.id},
                     {"applicability", spec.applicability},
                     {"asserted", spec.asserted}});
    }
    j["functions"] = std::move(fns);
    j["identities"] = std::move(ids);
    j["constructors"] =
        nlohmann::json::array({"phi_of:<f>", "idmul:<f>", "companion:<f>",
                               "complete:<f>"});
    return emit(j.dump(2) + "\n", out);
  }
  std::string text = "functions:\n";
  for (const auto& f : catalog()) {
    text += "  " + f.name() + "  (" + std::string(to_string(f.fn_class())) +
            ")\n";
  }
  text +=
      "constructors: phi_of:<f>  idmul:<f>  companion:<f>  complete:<f>\n";
  text += "identities:\n";
  for (const auto& spec : identity_registry()) {
    text += "  " + spec.id + (spec.asserted ? "" : "  [erratum-candidate]") +
            "  -- " + spec.applicability + "\n";
  }
  return emit(text, out);
}

}  // namespace

int run_app(int argc, const char* const* argv) {
  CLI::App app{
      "addtrans: exact evaluation of arithmetic functions, their additive "
      "transform, Dirichlet convolution, and identity verification"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate f(n) exactly");
  eval_cmd->add_option("--f", eval_args.f_spec, "function spec")->required();
  eval_cmd->add_option("--n", eval_args.n_text, "argument (positive integer)")
      ->required();
  eval_cmd->add_option("--format", eval_args.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  eval_cmd->add_option("--out", eval_args.out, "write to file");

  TableArgs table_args;
  auto* table_cmd =
      app.add_subcommand("table", "tabulate f(n) over a range");
  table_cmd->add_option("--f", table_args.f_spec, "function spec")->required();
  table_cmd->add_option("--range", table_args.range_text, "lo..hi")
      ->required();
  table_cmd->add_option("--format", table_args.format, "text|csv|json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  table_cmd->add_option("--out", table_args.out, "write to file");

  TableArgs conv_args;
  auto* conv_cmd = app.add_subcommand(
      "convolve", "tabulate the Dirichlet convolution (f*g)(n) over a range");
  conv_cmd->add_option("--f", conv_args.f_spec, "left function spec")
      ->required();
  conv_cmd->add_option("--g", conv_args.g_spec, "right function spec")
      ->required();
  conv_cmd->add_option("--range", conv_args.range_text, "lo..hi")->required();
  conv_cmd->add_option("--format", conv_args.format, "text|csv|json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  conv_cmd->add_option("--out", conv_args.out, "write to file");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand(
      "verify", "check named identities against the divisor-sum oracle");
  verify_cmd->add_option("--id", verify_args.ids,
                         "identity id (repeatable; see 'list')");
  verify_cmd->add_option("--f", verify_args.f_specs,
                         "function spec (repeatable)");
  verify_cmd->add_option("--N", verify_args.n_max, "range bound (default " +
                                                       std::to_string(
                                                           kDefaultVerifyBound) +
                                                       ")");
  verify_cmd->add_option("--format", verify_args.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_option("--out", verify_args.out, "write to file");

  std::string list_format = "text";
  std::string list_out;
  auto* list_cmd =
      app.add_subcommand("list", "list catalog functions and identity ids");
  list_cmd->add_option("--format", list_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  list_cmd->add_option("--out", list_out, "write to file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (eval_cmd->parsed()) return cmd_eval(eval_args);
    if (table_cmd->parsed()) return cmd_table(table_args);
    if (conv_cmd->parsed()) return cmd_convolve(conv_args);
    if (verify_cmd->parsed()) return cmd_verify(verify_args);
    if (list_cmd->parsed()) return cmd_list(list_format, list_out);
  } catch (const RangeError& e) {
    return usage_error(e.what());
  } catch (const DomainError& e) {
    return usage_error(e.what());
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}

}  // namespace addtrans::cli
