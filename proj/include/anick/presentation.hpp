#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "anick/polynomial.hpp"
#include "anick/word.hpp"

namespace anick {

/// Monic rule lhs -> rhs.
struct RewriteRule {
  Word lhs;
  NCPolynomial rhs;
};

inline constexpr std::size_t kDefaultStepBudget = 10'000;

/// Alphabet plus a reduced rewriting system. Validated on construction.
class Presentation {
 public:
  Presentation() = default;

  Presentation(Alphabet alphabet, std::vector<RewriteRule> rules,
               std::size_t step_budget = kDefaultStepBudget)
      : alphabet_(std::move(alphabet)), rules_(std::move(rules)), step_budget_(step_budget) {
    validate();
  }

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  std::size_t step_budget() const { return step_budget_; }

  Presentation with_step_budget(std::size_t budget) const {
    Presentation p = *this;
    p.step_budget_ = budget;
    p.validate();
    return p;
  }

  /// Left-hand sides, in rule order.
  std::vector<Word> obstructions() const {
    std::vector<Word> out;
    out.reserve(rules_.size());
    for (const auto& r : rules_) out.push_back(r.lhs);
    return out;
  }

 private:
  void check_word(const Word& w, const std::string& where) const {
    for (char ch : w.letters())
      if (!alphabet_.contains(ch))
        throw InvalidPresentation("symbol '" + std::string(1, ch) + "' in " + where +
                                  " is not in the alphabet");
  }

  void validate() const {
    if (step_budget_ == 0) throw InvalidPresentation("step budget must be positive");
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      const auto& r = rules_[i];
      const std::string name = "rule " + std::to_string(i) + " (" + render_word(r.lhs) + ")";
      if (r.lhs.empty()) throw InvalidPresentation(name + ": empty left-hand side");
      check_word(r.lhs, name);
      for (const auto& [w, c] : r.rhs) {
        check_word(w, name);
        if (w.contains(r.lhs))
          throw InvalidPresentation(name + ": left-hand side occurs in its right-hand side");
      }
      for (std::size_t j = 0; j < rules_.size(); ++j) {
        if (i != j && rules_[j].lhs.contains(r.lhs))
          throw InvalidPresentation(name + ": left-hand side is a subword of rule " +
                                    std::to_string(j) + " (system is not reduced)");
      }
    }
  }

  Alphabet alphabet_;
  std::vector<RewriteRule> rules_;
  std::size_t step_budget_ = kDefaultStepBudget;
};

}  // namespace anick
