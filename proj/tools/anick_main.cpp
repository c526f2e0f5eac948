// anick: command-line front end for Anick resolutions and Hochschild cohomology.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "anick/anick.hpp"
#include "anick/json_io.hpp"

namespace {

using namespace anick;

enum Exit { kOk = 0, kUsage = 1, kFailed = 2, kComputation = 3 };

struct RunConfig {
  std::string presentation_path;
  int max_n = 10;
  std::size_t step_budget = kDefaultStepBudget;
  std::size_t depth_budget = 0;
};

std::size_t env_budget(const char* name, std::size_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  unsigned long long x = std::strtoull(v, &end, 10);
  if (*end != '\0' || x == 0) throw CLI::ValidationError(std::string(name) + " must be a positive integer");
  return static_cast<std::size_t>(x);
}

Presentation make_presentation(const RunConfig& cfg) {
  if (cfg.presentation_path.empty()) return g23::presentation(cfg.step_budget);
  return load_presentation(cfg.presentation_path, cfg.step_budget);
}

int run_chains(const RunConfig& cfg, int n, bool json) {
  auto p = make_presentation(cfg);
  auto chains = enumerate_chains(n, ObstructionSet(p));
  if (json) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : chains) out.push_back(to_json(c));
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& c : chains) std::cout << render(c) << "\n";
  }
  return kOk;
}

int run_diff(const RunConfig& cfg, int n, const std::string& chain_text, bool json,
             const std::string& dot_path, const std::string& source) {
  auto p = make_presentation(cfg);
  MorseComplex mc(p, cfg.depth_budget);
  std::vector<ChainElement> chains;
  if (!chain_text.empty()) {
    auto c = chain_factorization(parse_word(chain_text, p.alphabet()), mc.obstructions());
    if (n >= 0 && c.degree != n)
      throw DegreeMismatch("'" + chain_text + "' is a " + std::to_string(c.degree) + "-chain, not a " +
                           std::to_string(n) + "-chain");
    chains.push_back(c);
  } else {
    chains = enumerate_chains(n, mc.obstructions());
  }
  ExploredGraph graph;
  if (!dot_path.empty()) mc.set_trace(&graph);
  nlohmann::json out = nlohmann::json::array();
  if (source == "closed" && !g23::is_g23(p))
    throw Error("closed-form differentials are only available for the built-in G_3^2 presentation");
  for (const auto& c : chains) {
    DifferentialRow row;
    if (source == "closed")
      row = c.degree == 0 ? g23::closed_form_table(0).at(c.word) : g23::closed_form_differential(c.word, c.degree);
    else
      row = mc.differential(c);
    if (json)
      out.push_back(to_json(row));
    else
      std::cout << "d_" << c.degree + 1 << "[" << render_word(c.word) << "] = " << render(row) << "\n";
  }
  if (json) std::cout << out.dump(2) << "\n";
  if (!dot_path.empty()) {
    std::ofstream f(dot_path);
    if (!f) throw Error("cannot write '" + dot_path + "'");
    write_dot(f, graph);
  }
  return kOk;
}

int run_confluence(const RunConfig& cfg, bool json) {
  auto p = make_presentation(cfg);
  auto report = check_confluence(p);
  if (json) {
    std::cout << to_json(report, p).dump(2) << "\n";
  } else {
    std::cout << report.checks.size() << " compositions checked\n";
    for (const auto& f : report.failures()) {
      std::cout << "FAIL " << to_string(f.composition.kind) << " "
                << render_word(p.rules()[f.composition.rule_a].lhs) << " / "
                << render_word(p.rules()[f.composition.rule_b].lhs) << " witness "
                << render_word(f.composition.witness) << ": " << render(f.via_a) << " vs "
                << render(f.via_b) << "\n";
    }
    std::cout << (report.confluent() ? "confluent" : "not confluent") << "\n";
  }
  return report.confluent() ? kOk : kFailed;
}

int run_verify(const RunConfig& cfg) {
  auto p = make_presentation(cfg);
  if (!g23::is_g23(p)) throw Error("verify compares against the G_3^2 closed forms; use the built-in presentation");
  bool all = true;
  bool confluent = check_confluence(p).confluent();
  all = all && confluent;
  std::cout << "confluence: " << (confluent ? "pass" : "FAIL") << "\n";
  MorseComplex mc(p, cfg.depth_budget);
  std::cout << " n  chains  count  closed  d.d=0  critical\n";
  std::optional<DifferentialTable> lower;
  for (int n = 0; n <= cfg.max_n; ++n) {
    auto chains = enumerate_chains(n, mc.obstructions());
    bool count_ok = n == 0 ? chains.size() == 3 : chains.size() == static_cast<std::size_t>(2 * n + 3);
    bool critical_ok = true;
    for (const auto& c : chains) critical_ok = critical_ok && mc.classify(BarVertex{c.factors}).critical();
    DifferentialTable upper = mc.table(n);
    bool closed_ok = upper == g23::closed_form_table(n);
    bool compose_ok = !lower || compose_vanishes(upper, *lower, mc.normal_forms());
    bool ok = count_ok && closed_ok && compose_ok && critical_ok;
    all = all && ok;
    std::cout << std::setw(2) << n << std::setw(8) << chains.size() << std::setw(7)
              << (count_ok ? "ok" : "FAIL") << std::setw(8) << (closed_ok ? "ok" : "FAIL") << std::setw(7)
              << (n == 0 ? "-" : compose_ok ? "ok" : "FAIL") << std::setw(10)
              << (critical_ok ? "ok" : "FAIL") << "\n";
    lower = std::move(upper);
  }
  auto audit = mc.audit();
  std::cout << "matching: " << audit.vertices << " vertices, " << audit.matched_pairs << " pairs, "
            << audit.critical << " critical, " << audit.violations.size() << " violations\n";
  for (const auto& v : audit.violations) std::cout << "  " << v << "\n";
  all = all && audit.ok();
  std::cout << (all ? "verify: pass" : "verify: FAIL") << "\n";
  return all ? kOk : kFailed;
}

void print_report_text(const CohomologyReport& r, const std::string& source_label) {
  std::cout << "bimodule " << r.bimodule.name << " (" << r.signs << "), source " << source_label << "\n";
  std::cout << "  n  chains  rank_in  rank_out  dim\n";
  for (const auto& d : r.degrees)
    std::cout << std::setw(3) << d.n << std::setw(8) << d.chains << std::setw(9) << d.rank_in
              << std::setw(10) << d.rank_out << std::setw(5) << d.dim << "\n";
}

int run_cohomology(const RunConfig& cfg, const std::string& bimodule, const std::string& source,
                   const std::string& format) {
  auto p = make_presentation(cfg);
  std::vector<OneDimBimodule> targets;
  if (bimodule == "all")
    targets = preset_bimodules();
  else
    targets.push_back(parse_bimodule(bimodule, p.alphabet()));

  std::unique_ptr<Differentials> morse, closed;
  if (source != "closed") morse = std::make_unique<Differentials>(p, DifferentialSource::morse, cfg.depth_budget);
  if (source != "morse") closed = std::make_unique<Differentials>(p, DifferentialSource::closed_form);

  int status = kOk;
  nlohmann::json out = nlohmann::json::array();
  if (format == "csv") std::cout << "bimodule,signs,source,n,chains,rank_in,rank_out,dim\n";
  for (const auto& w : targets) {
    CohomologyReport r = report(w, cfg.max_n, morse ? *morse : *closed);
    std::string label = to_string(r.source);
    if (morse && closed) {
      CohomologyReport other = report(w, cfg.max_n, *closed);
      label = "both";
      bool same = other.degrees.size() == r.degrees.size();
      for (std::size_t i = 0; same && i < r.degrees.size(); ++i)
        same = r.degrees[i].dim == other.degrees[i].dim && r.degrees[i].rank_in == other.degrees[i].rank_in &&
               r.degrees[i].rank_out == other.degrees[i].rank_out;
      if (!same) {
        std::cerr << "cohomology: morse and closed-form sources disagree for " << w.name << "\n";
        status = kFailed;
      }
    }
    if (format == "json") {
      auto j = to_json(r);
      j["source"] = label;
      out.push_back(j);
    } else if (format == "csv") {
      for (const auto& d : r.degrees)
        std::cout << r.bimodule.name << "," << r.signs << "," << label << "," << d.n << "," << d.chains << ","
                  << d.rank_in << "," << d.rank_out << "," << d.dim << "\n";
    } else {
      print_report_text(r, label);
    }
  }
  if (format == "json") std::cout << (bimodule == "all" ? out : out[0]).dump(2) << "\n";
  return status;
}

int run_presets() {
  Alphabet abc("abc");
  for (const auto& w : preset_bimodules()) std::cout << w.name << " " << w.signs(abc) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Anick resolutions via algebraic Morse theory, and Hochschild cohomology"};
  app.require_subcommand(1);

  RunConfig cfg;
  try {
    cfg.step_budget = env_budget("ANICK_STEP_BUDGET", cfg.step_budget);
    cfg.depth_budget = env_budget("ANICK_DEPTH_BUDGET", cfg.depth_budget);
  } catch (const CLI::Error& e) {
    std::cerr << "anick: " << e.what() << "\n";
    return kUsage;
  }
  app.add_option("--presentation", cfg.presentation_path, "Presentation JSON file (default: built-in G_3^2)")
      ->check(CLI::ExistingFile);
  app.add_option("--step-budget", cfg.step_budget, "Rewriting steps per normal form")->check(CLI::PositiveNumber);
  app.add_option("--depth-budget", cfg.depth_budget, "Reversed edges per Morse path (default 10n)")
      ->check(CLI::PositiveNumber);

  int n = 1;
  bool json = false;
  std::string chain, dot, source = "morse", bimodule, format = "text";

  auto* chains_cmd = app.add_subcommand("chains", "List the n-chains with their factorizations");
  chains_cmd->add_option("--n", n, "Chain degree")->required()->check(CLI::NonNegativeNumber);
  chains_cmd->add_flag("--json", json, "JSON output");

  auto* diff_cmd = app.add_subcommand("diff", "Anick differentials of n-chains");
  diff_cmd->add_option("--n", n, "Chain degree")->check(CLI::NonNegativeNumber);
  diff_cmd->add_option("--chain", chain, "A single chain, e.g. bca^2");
  diff_cmd->add_flag("--json", json, "JSON output");
  diff_cmd->add_option("--dot", dot, "Write the explored matched graph as Graphviz DOT");
  diff_cmd->add_option("--source", source, "morse or closed")->check(CLI::IsMember({"morse", "closed"}));

  auto* verify_cmd = app.add_subcommand("verify", "Compare Morse differentials with the G_3^2 closed forms");
  verify_cmd->add_option("--max-n", cfg.max_n, "Highest chain degree")->check(CLI::PositiveNumber);

  auto* confluence_cmd = app.add_subcommand("confluence", "Check confluence of the rewriting system");
  confluence_cmd->add_flag("--json", json, "JSON report");

  auto* coh_cmd = app.add_subcommand("cohomology", "Hochschild cohomology dimensions");
  coh_cmd->add_option("--bimodule", bimodule, "Preset W1..W8, a sign pair like ++-/+-+, or 'all'")->required();
  coh_cmd->add_option("--max-n", cfg.max_n, "Highest degree")->check(CLI::PositiveNumber);
  coh_cmd->add_option("--source", source, "morse, closed or both")
      ->check(CLI::IsMember({"morse", "closed", "both"}));
  auto* coh_json = coh_cmd->add_flag("--json", "JSON output");
  auto* coh_csv = coh_cmd->add_flag("--csv", "CSV output");
  coh_json->excludes(coh_csv);

  app.add_subcommand("presets", "List the preset sign bimodules");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  std::string op = app.get_subcommands().front()->get_name();
  try {
    if (op == "chains") return run_chains(cfg, n, json);
    if (op == "diff") {
      if (chain.empty() && diff_cmd->count("--n") == 0) {
        std::cerr << "anick diff: one of --n or --chain is required\n";
        return kUsage;
      }
      return run_diff(cfg, diff_cmd->count("--n") ? n : -1, chain, json, dot, source);
    }
    if (op == "verify") return run_verify(cfg);
    if (op == "confluence") return run_confluence(cfg, json);
    if (op == "cohomology") {
      if (*coh_json) format = "json";
      if (*coh_csv) format = "csv";
      return run_cohomology(cfg, bimodule, source, format);
    }
    if (op == "presets") return run_presets();
  } catch (const ParseError& e) {
    std::cerr << "anick " << op << ": " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "anick " << op << ": " << e.what() << "\n";
    return kComputation;
  }
  return kUsage;
}
