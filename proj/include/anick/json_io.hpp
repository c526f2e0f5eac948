#pragma once

// JSON schemas: presentation files and cohomology reports (nlohmann/json).

#include <fstream>
#include <string>

#include <json.hpp>

#include "anick/confluence.hpp"
#include "anick/hochschild.hpp"

namespace anick {

/// {"generators": ["a","b","c"],
///  "rules": [{"lhs": "aa", "rhs": [{"word": "", "coef": "1"}]}, ...]}
/// Words may use exponent notation; coefficients are "p" or "p/q" strings.
inline Presentation presentation_from_json(const nlohmann::json& j,
                                           std::size_t step_budget = kDefaultStepBudget) {
  try {
    Alphabet alphabet;
    int rank = static_cast<int>(j.at("generators").size());
    for (const auto& g : j.at("generators")) {
      auto s = g.get<std::string>();
      if (s.size() != 1) throw InvalidPresentation("generator '" + s + "' must be a single letter");
      alphabet.add(Generator{s[0], rank--});
    }
    std::vector<RewriteRule> rules;
    for (const auto& r : j.at("rules")) {
      RewriteRule rule{parse_word(r.at("lhs").get<std::string>(), alphabet), {}};
      for (const auto& t : r.at("rhs")) {
        const auto& coef = t.at("coef");
        Scalar c = coef.is_number_integer() ? Scalar(coef.get<long>())
                                            : parse_scalar(coef.get<std::string>());
        rule.rhs.add(parse_word(t.at("word").get<std::string>(), alphabet), c);
      }
      rules.push_back(std::move(rule));
    }
    return Presentation(std::move(alphabet), std::move(rules), step_budget);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidPresentation(std::string("malformed presentation JSON: ") + e.what());
  }
}

inline Presentation load_presentation(const std::string& path,
                                      std::size_t step_budget = kDefaultStepBudget) {
  std::ifstream in(path);
  if (!in) throw InvalidPresentation("cannot open presentation file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidPresentation("'" + path + "': " + e.what());
  }
  return presentation_from_json(j, step_budget);
}

inline nlohmann::json to_json(const Presentation& p) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : p.alphabet().generators()) gens.push_back(std::string(1, g.symbol));
  nlohmann::json rules = nlohmann::json::array();
  for (const auto& r : p.rules()) {
    nlohmann::json rhs = nlohmann::json::array();
    for (const auto& [w, c] : r.rhs) rhs.push_back({{"word", w.letters()}, {"coef", to_string(c)}});
    rules.push_back({{"lhs", r.lhs.letters()}, {"rhs", rhs}});
  }
  return {{"generators", gens}, {"rules", rules}};
}

inline nlohmann::json to_json(const NCPolynomial& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [w, c] : p) out.push_back({{"word", w.letters()}, {"coef", to_string(c)}});
  return out;
}

inline nlohmann::json to_json(const ChainElement& c) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : c.factors) factors.push_back(f.letters());
  return {{"word", c.word.letters()}, {"degree", c.degree}, {"factors", factors}};
}

inline nlohmann::json to_json(const DifferentialRow& row) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [target, coef] : row.entries)
    for (const auto& [k, c] : coef)
      terms.push_back(
          {{"left", k.first.letters()}, {"target", target.letters()}, {"right", k.second.letters()},
           {"coef", to_string(c)}});
  return {{"source", row.source.word.letters()}, {"degree", row.source.degree}, {"terms", terms}};
}

inline nlohmann::json to_json(const ConfluenceReport& r, const Presentation& p) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"rule_a", render_word(p.rules()[c.composition.rule_a].lhs)},
                      {"rule_b", render_word(p.rules()[c.composition.rule_b].lhs)},
                      {"kind", to_string(c.composition.kind)},
                      {"witness", c.composition.witness.letters()},
                      {"offset", c.composition.offset},
                      {"via_a", to_json(c.via_a)},
                      {"via_b", to_json(c.via_b)},
                      {"resolves", c.resolves()}});
  }
  return {{"confluent", r.confluent()}, {"compositions", checks}};
}

/// {"bimodule": "W5", "signs": "++-/++-", "source": "morse",
///  "rows": [{"n": 2, "chains": 5, "rank_in": 1, "rank_out": 3, "dim": 1}, ...]}
inline nlohmann::json to_json(const CohomologyReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& d : r.degrees)
    rows.push_back({{"n", d.n}, {"chains", d.chains}, {"rank_in", d.rank_in}, {"rank_out", d.rank_out},
                    {"dim", d.dim}});
  return {{"bimodule", r.bimodule.name}, {"signs", r.signs}, {"source", to_string(r.source)}, {"rows", rows}};
}

}  // namespace anick
