#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "anick/presentation.hpp"

namespace anick {

/// An occurrence of a rule's left-hand side inside a word.
struct Redex {
  std::size_t position;
  std::size_t rule;

  friend bool operator==(const Redex&, const Redex&) = default;
};

/// All redexes of w, ordered by position, then by decreasing lhs length.
inline std::vector<Redex> find_redexes(const Word& w, const Presentation& p) {
  std::vector<Redex> out;
  const auto& rules = p.rules();
  for (std::size_t pos = 0; pos < w.size(); ++pos)
    for (std::size_t r = 0; r < rules.size(); ++r)
      if (w.occurs_at(rules[r].lhs, pos)) out.push_back({pos, r});
  std::stable_sort(out.begin(), out.end(), [&](const Redex& x, const Redex& y) {
    if (x.position != y.position) return x.position < y.position;
    return rules[x.rule].lhs.size() > rules[y.rule].lhs.size();
  });
  return out;
}

inline bool is_reduced(const Word& w, const Presentation& p) {
  for (const auto& r : p.rules())
    if (w.contains(r.lhs)) return false;
  return true;
}

/// Replaces the redex in w by the rule's right-hand side.
inline NCPolynomial apply_rule(const Word& w, const Redex& at, const Presentation& p) {
  const auto& rule = p.rules()[at.rule];
  Word prefix = w.substr(0, at.position);
  Word suffix = w.substr(at.position + rule.lhs.size());
  NCPolynomial out;
  for (const auto& [rw, c] : rule.rhs) out.add(prefix + rw + suffix, c);
  return out;
}

namespace strategy {

/// Leftmost position; among rules matching there, the longest lhs.
struct Leftmost {
  std::optional<Redex> operator()(const Word& w, const Presentation& p) const {
    const auto& rules = p.rules();
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      std::optional<Redex> best;
      for (std::size_t r = 0; r < rules.size(); ++r)
        if (w.occurs_at(rules[r].lhs, pos) &&
            (!best || rules[r].lhs.size() > rules[best->rule].lhs.size()))
          best = Redex{pos, r};
      if (best) return best;
    }
    return std::nullopt;
  }
};

struct Rightmost {
  std::optional<Redex> operator()(const Word& w, const Presentation& p) const {
    auto all = find_redexes(w, p);
    if (all.empty()) return std::nullopt;
    std::size_t last = all.back().position;
    auto it = std::find_if(all.begin(), all.end(), [&](const Redex& r) { return r.position == last; });
    return *it;
  }
};

/// Uniformly random redex. Holds a reference to the caller's engine.
template <class Engine>
struct Random {
  Engine& engine;

  std::optional<Redex> operator()(const Word& w, const Presentation& p) const {
    auto all = find_redexes(w, p);
    if (all.empty()) return std::nullopt;
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    return all[pick(engine)];
  }
};

}  // namespace strategy

/// Normal form of a polynomial under the given redex-selection strategy.
/// Throws StepBudgetExceeded after p.step_budget() single rewrites.
template <class Strategy>
NCPolynomial normal_form(const NCPolynomial& input, const Presentation& p, Strategy&& choose) {
  NCPolynomial result;
  std::vector<std::pair<Word, Scalar>> pending(input.begin(), input.end());
  std::size_t steps = 0;
  while (!pending.empty()) {
    auto [w, c] = std::move(pending.back());
    pending.pop_back();
    auto redex = choose(w, p);
    if (!redex) {
      result.add(w, c);
      continue;
    }
    if (++steps > p.step_budget())
      throw StepBudgetExceeded("normal form exceeded " + std::to_string(p.step_budget()) +
                               " rewriting steps (current word '" + render_word(w) + "')");
    for (const auto& [rw, rc] : apply_rule(w, *redex, p)) pending.emplace_back(rw, rc * c);
  }
  return result;
}

inline NCPolynomial normal_form(const NCPolynomial& input, const Presentation& p) {
  return normal_form(input, p, strategy::Leftmost{});
}

inline NCPolynomial normal_form(const Word& w, const Presentation& p) {
  return normal_form(NCPolynomial(w), p, strategy::Leftmost{});
}

template <class Strategy>
NCPolynomial normal_form(const Word& w, const Presentation& p, Strategy&& choose) {
  return normal_form(NCPolynomial(w), p, std::forward<Strategy>(choose));
}

/// Product in the quotient algebra; both operands are expected in normal form.
inline NCPolynomial poly_multiply(const NCPolynomial& lhs, const NCPolynomial& rhs,
                                  const Presentation& p) {
  NCPolynomial out;
  for (const auto& [u, a] : lhs)
    for (const auto& [v, b] : rhs) out += normal_form(NCPolynomial(u + v, a * b), p);
  return out;
}

}  // namespace anick
