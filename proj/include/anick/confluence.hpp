#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "anick/rewriting.hpp"

namespace anick {

enum class CompositionKind { overlap, inclusion };

inline const char* to_string(CompositionKind k) {
  return k == CompositionKind::overlap ? "overlap" : "inclusion";
}

/// An ambiguity between two rules. ruleA matches witness at 0, ruleB at offset.
struct Composition {
  std::size_t rule_a;
  std::size_t rule_b;
  CompositionKind kind;
  Word witness;
  std::size_t offset;

  friend bool operator==(const Composition&, const Composition&) = default;
};

/// Every overlap and inclusion between ordered rule pairs (self-pairs included),
/// sorted by (rule_a, rule_b, offset).
inline std::vector<Composition> find_compositions(const Presentation& p) {
  std::vector<Composition> out;
  const auto& rules = p.rules();
  for (std::size_t a = 0; a < rules.size(); ++a) {
    const Word& u = rules[a].lhs;
    for (std::size_t b = 0; b < rules.size(); ++b) {
      const Word& v = rules[b].lhs;
      // Inclusion: v inside u. Impossible for a reduced system unless a == b.
      if (a != b)
        for (std::size_t off = 0; off + v.size() <= u.size(); ++off)
          if (u.occurs_at(v, off)) out.push_back({a, b, CompositionKind::inclusion, u, off});
      // Overlap: a proper suffix of u equals a proper prefix of v.
      for (std::size_t off = 1; off < u.size(); ++off) {
        std::size_t len = u.size() - off;
        if (len >= v.size()) continue;
        if (u.letters().compare(off, len, v.letters(), 0, len) == 0)
          out.push_back({a, b, CompositionKind::overlap, u + v.substr(len), off});
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Composition& x, const Composition& y) {
    if (x.rule_a != y.rule_a) return x.rule_a < y.rule_a;
    if (x.rule_b != y.rule_b) return x.rule_b < y.rule_b;
    return x.offset < y.offset;
  });
  return out;
}

struct CompositionCheck {
  Composition composition;
  NCPolynomial via_a;
  NCPolynomial via_b;

  bool resolves() const { return via_a == via_b; }
};

struct ConfluenceReport {
  std::vector<CompositionCheck> checks;

  bool confluent() const {
    for (const auto& c : checks)
      if (!c.resolves()) return false;
    return true;
  }

  std::vector<CompositionCheck> failures() const {
    std::vector<CompositionCheck> out;
    for (const auto& c : checks)
      if (!c.resolves()) out.push_back(c);
    return out;
  }
};

/// Resolves each composition by applying ruleA first and ruleB first, then
/// reducing both results to normal form.
inline ConfluenceReport check_confluence(const Presentation& p) {
  ConfluenceReport report;
  for (const auto& comp : find_compositions(p)) {
    try {
      auto via_a = normal_form(apply_rule(comp.witness, {0, comp.rule_a}, p), p);
      auto via_b = normal_form(apply_rule(comp.witness, {comp.offset, comp.rule_b}, p), p);
      report.checks.push_back({comp, std::move(via_a), std::move(via_b)});
    } catch (const StepBudgetExceeded& e) {
      throw StepBudgetExceeded(std::string(e.what()) + " while resolving witness '" +
                               render_word(comp.witness) + "'");
    }
  }
  return report;
}

}  // namespace anick
