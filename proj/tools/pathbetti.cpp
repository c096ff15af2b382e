// Command-line front end: Betti tables, pd/reg and verification sweeps for
// path ideals of lines and cycles.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pathbetti/document.hpp"
#include "pathbetti/formulas.hpp"
#include "pathbetti/homology.hpp"
#include "pathbetti/verify.hpp"

using namespace pathbetti;

namespace {

constexpr int kExitMismatch = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInfeasible = 65;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::pair<int, int> parse_range(const std::string& text) {
  try {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("bad range '" + text + "' (expected A..B or A)");
  }
}

PathFamily family_from(const std::string& kind_text, int n, int t) {
  const auto kind = parse_graph_kind(kind_text);
  if (!kind) throw UsageError("kind must be 'line' or 'cycle'");
  PathFamily family{*kind, n, t};
  try {
    family.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return family;
}

Caps caps_from_env() {
  try {
    return Caps::from_env();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

struct TableArgs {
  std::string kind;
  int n = 0;
  int t = 0;
  std::string method = "formula";
  std::string format = "text";
};

int run_table(const TableArgs& args) {
  const PathFamily family = family_from(args.kind, args.n, args.t);
  const Caps caps = caps_from_env();
  BettiTable table;
  if (args.method == "formula") {
    table = betti_table(family);
  } else if (args.method == "eligible") {
    table = BettiTable::from_grid(family, eligible_grid(family, caps), Provenance::eligible_oracle,
                                  family.n - 1);
    table.set(0, 0, 1);
  } else {
    table = BettiTable::from_grid(family, hochster_grid(family, caps).grid,
                                  Provenance::hochster_oracle, family.n);
  }
  if (args.format == "json")
    std::cout << table_to_json(table, pd_reg_from_table(table));
  else if (args.format == "csv")
    std::cout << table_to_csv(table);
  else
    std::cout << table_to_text(table);
  return 0;
}

struct PdRegArgs {
  std::string kind;
  int n = 0;
  int t = 0;
  std::string source = "table";
};

int run_pdreg(const PdRegArgs& args) {
  const PathFamily family = family_from(args.kind, args.n, args.t);
  PdReg result;
  if (args.source == "closed") {
    if (family.kind != GraphKind::line)
      throw UsageError("closed-form pd/reg is only available for lines; use --source table");
    result = {pd_line(family.n, family.t), reg_line(family.n, family.t)};
  } else {
    result = pd_reg_from_table(betti_table(family));
  }
  std::cout << "pd=" << result.pd << " reg=" << result.reg << '\n';
  return 0;
}

struct VerifyArgs {
  std::string config_path;
  std::string kinds = "line,cycle";
  std::string t_range = "2..4";
  int n_min = 2;
  int n_max = 12;
  std::string oracles = "eligible,hochster";
  std::string format = "text";
  std::string fault;
  bool serial = false;
  int max_facets = -1;
  long long max_faces = -1;
};

// Keys mirror the flag names; explicit flags win over the file.
void apply_config_file(VerifyArgs& args, const CLI::App& cmd) {
  std::ifstream in(args.config_path);
  if (!in) throw UsageError("cannot read config " + args.config_path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad config: ") + e.what());
  }
  auto given = [&](const char* flag) { return cmd.count(flag) > 0; };
  auto list_or_string = [](const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    std::string joined;
    for (const auto& item : v) joined += (joined.empty() ? "" : ",") + item.get<std::string>();
    return joined;
  };
  try {
    if (doc.contains("kinds") && !given("--kinds")) args.kinds = list_or_string(doc["kinds"]);
    if (doc.contains("oracles") && !given("--oracles")) args.oracles = list_or_string(doc["oracles"]);
    if (doc.contains("t") && !given("--t"))
      args.t_range = doc["t"].is_string() ? doc["t"].get<std::string>()
                                          : std::to_string(doc["t"].get<int>());
    if (doc.contains("n-min") && !given("--n-min")) args.n_min = doc["n-min"].get<int>();
    if (doc.contains("n-max") && !given("--n-max")) args.n_max = doc["n-max"].get<int>();
    if (doc.contains("format") && !given("--format")) args.format = doc["format"].get<std::string>();
    if (doc.contains("max-facets") && !given("--max-facets"))
      args.max_facets = doc["max-facets"].get<int>();
    if (doc.contains("max-faces") && !given("--max-faces"))
      args.max_faces = doc["max-faces"].get<long long>();
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("bad config value: ") + e.what());
  }
}

int run_verify(VerifyArgs args, const CLI::App& cmd) {
  if (!args.config_path.empty()) apply_config_file(args, cmd);

  SweepConfig config;
  config.kinds.clear();
  for (const auto& k : split_list(args.kinds)) {
    const auto kind = parse_graph_kind(k);
    if (!kind) throw UsageError("unknown kind '" + k + "'");
    config.kinds.push_back(*kind);
  }
  std::tie(config.t_min, config.t_max) = parse_range(args.t_range);
  if (config.t_min < 2) throw UsageError("t must be at least 2");
  config.n_min = args.n_min;
  config.n_max = args.n_max;
  config.oracles = {false, false};
  for (const auto& o : split_list(args.oracles)) {
    if (o == "eligible")
      config.oracles.eligible = true;
    else if (o == "hochster")
      config.oracles.hochster = true;
    else
      throw UsageError("unknown oracle '" + o + "'");
  }
  config.caps = caps_from_env();
  if (args.max_facets >= 0) config.caps.max_facets = args.max_facets;
  if (args.max_faces >= 0) config.caps.max_faces = static_cast<std::size_t>(args.max_faces);

  FormulaFn formula = betti;
  if (args.fault == "drop-line-second-summand")
    formula = faults::drop_line_second_summand;
  else if (!args.fault.empty())
    throw UsageError("unknown fault '" + args.fault + "'");

  const VerificationReport report =
      run_sweep(config, formula, args.serial ? Execution::serial : Execution::parallel);
  std::cout << (args.format == "json" ? report_to_json(report) : report_to_text(report));

  if (!report.all_pass()) {
    const InstanceReport* first = report.first_failure();
    std::cerr << "verification failed: " << first->family.name();
    if (first->mismatch && first->mismatch->i >= 0)
      std::cerr << " at (i,j)=(" << first->mismatch->i << ',' << first->mismatch->j << ")";
    std::cerr << '\n';
    return kExitMismatch;
  }
  if (report.checked() == 0) {
    std::cerr << "no instance was checked (" << report.skipped() << " skipped)\n";
    return kExitInfeasible;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded Betti numbers of path ideals of lines and cycles"};
  app.require_subcommand(1);

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "Print the Betti table");
  table->add_option("kind", table_args.kind, "line or cycle")->required();
  table->add_option("--n", table_args.n, "number of vertices")->required();
  table->add_option("--t", table_args.t, "path length parameter")->required();
  table->add_option("--method", table_args.method, "formula, eligible or hochster")
      ->check(CLI::IsMember({"formula", "eligible", "hochster"}));
  table->add_option("--format", table_args.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  PdRegArgs pdreg_args;
  auto* pdreg = app.add_subcommand("pdreg", "Print projective dimension and regularity");
  pdreg->add_option("kind", pdreg_args.kind, "line or cycle")->required();
  pdreg->add_option("--n", pdreg_args.n, "number of vertices")->required();
  pdreg->add_option("--t", pdreg_args.t, "path length parameter")->required();
  pdreg->add_option("--source", pdreg_args.source, "closed (lines only) or table")
      ->check(CLI::IsMember({"closed", "table"}));

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check the closed forms against brute-force oracles");
  verify->add_option("--config", verify_args.config_path, "JSON file with flag-named keys");
  verify->add_option("--kinds", verify_args.kinds, "comma list of line, cycle");
  verify->add_option("--t", verify_args.t_range, "range A..B of t");
  verify->add_option("--n-min", verify_args.n_min, "smallest n");
  verify->add_option("--n-max", verify_args.n_max, "largest n");
  verify->add_option("--oracles", verify_args.oracles, "comma list of eligible, hochster");
  verify->add_option("--format", verify_args.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--max-facets", verify_args.max_facets, "enumeration cap");
  verify->add_option("--max-faces", verify_args.max_faces, "face cap for homology");
  verify->add_option("--inject-fault", verify_args.fault,
                     "check the verifier itself: drop-line-second-summand");
  verify->add_flag("--serial", verify_args.serial, "use the serial reference kernels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*table) return run_table(table_args);
    if (*pdreg) return run_pdreg(pdreg_args);
    if (*verify) return run_verify(verify_args, *verify);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
