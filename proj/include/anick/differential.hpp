#pragma once

#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>

#include "anick/chains.hpp"
#include "anick/rewriting.hpp"

namespace anick {

/// Memoized normal forms of single words for one presentation.
class NormalFormCache {
 public:
  explicit NormalFormCache(const Presentation& p) : p_(&p) {}

  const NCPolynomial& operator()(const Word& w) {
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(w, normal_form(w, *p_)).first->second;
  }

  const Presentation& presentation() const { return *p_; }

 private:
  const Presentation* p_;
  std::unordered_map<Word, NCPolynomial> cache_;
};

/// Element of Lambda (x) Lambda^op: sum of coef * left (x) right, with left
/// acting on the left of a generator and right on the right.
class BimoduleCoefficient {
 public:
  using Key = std::pair<Word, Word>;
  using Terms = std::map<Key, Scalar>;

  BimoduleCoefficient() = default;
  BimoduleCoefficient(Word left, Word right, Scalar c) { add(std::move(left), std::move(right), c); }

  static BimoduleCoefficient unit() { return BimoduleCoefficient(Word{}, Word{}, 1); }

  void add(Word left, Word right, const Scalar& c) {
    if (anick::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(Key{std::move(left), std::move(right)}, c);
    if (!inserted) {
      it->second += c;
      if (anick::is_zero(it->second)) terms_.erase(it);
    }
  }

  BimoduleCoefficient& operator+=(const BimoduleCoefficient& rhs) {
    for (const auto& [k, c] : rhs.terms_) add(k.first, k.second, c);
    return *this;
  }

  BimoduleCoefficient& operator*=(const Scalar& c) {
    if (anick::is_zero(c)) terms_.clear();
    for (auto& [k, coef] : terms_) coef *= c;
    return *this;
  }

  /// The scalar value if this is c * (1 (x) 1), otherwise nullopt.
  std::optional<Scalar> as_scalar() const {
    if (terms_.size() != 1) return std::nullopt;
    const auto& [k, c] = *terms_.begin();
    if (!k.first.empty() || !k.second.empty()) return std::nullopt;
    return c;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  friend bool operator==(const BimoduleCoefficient&, const BimoduleCoefficient&) = default;

 private:
  Terms terms_;
};

/// (outer then inner): sum of c*c' * nf(L L') (x) nf(R' R).
inline BimoduleCoefficient compose(const BimoduleCoefficient& outer, const BimoduleCoefficient& inner,
                                   NormalFormCache& nf) {
  BimoduleCoefficient out;
  for (const auto& [ok, oc] : outer) {
    for (const auto& [ik, ic] : inner) {
      const NCPolynomial& left = nf(ok.first + ik.first);
      const NCPolynomial& right = nf(ik.second + ok.second);
      Scalar c = oc * ic;
      for (const auto& [lw, lc] : left)
        for (const auto& [rw, rc] : right) out.add(lw, rw, c * lc * rc);
    }
  }
  return out;
}

/// One row of an Anick differential: d(source) = sum over target chains of
/// coefficient * [target]. Targets are keyed by chain word.
struct DifferentialRow {
  ChainElement source;
  std::map<Word, BimoduleCoefficient> entries;

  void add(const Word& target, const BimoduleCoefficient& c) {
    auto& slot = entries[target];
    slot += c;
    if (slot.is_zero()) entries.erase(target);
  }

  friend bool operator==(const DifferentialRow& a, const DifferentialRow& b) {
    return a.source.word == b.source.word && a.entries == b.entries;
  }
};

/// "b[c]a - 2ac[b]" in a canonical term order (target, then left, then right).
inline std::string render(const DifferentialRow& row) {
  std::string out;
  for (const auto& [target, coef] : row.entries) {
    for (const auto& [k, c] : coef) {
      Scalar mag = abs(c);
      if (out.empty()) {
        if (sgn(c) < 0) out += "-";
      } else {
        out += sgn(c) < 0 ? " - " : " + ";
      }
      if (mag != 1) out += to_string(mag);
      out += render_word(k.first) + "[" + render_word(target) + "]" + render_word(k.second);
    }
  }
  return out.empty() ? "0" : out;
}

/// Rows of one differential, keyed by source chain word.
using DifferentialTable = std::map<Word, DifferentialRow>;

/// Composite d(d(c)) for one row, given the next-lower differential table.
inline std::map<Word, BimoduleCoefficient> compose_rows(const DifferentialRow& upper,
                                                        const DifferentialTable& lower,
                                                        NormalFormCache& nf) {
  DifferentialRow acc;
  for (const auto& [mid, coef] : upper.entries) {
    auto it = lower.find(mid);
    if (it == lower.end())
      throw Error("compose: no row for intermediate chain '" + render_word(mid) + "'");
    for (const auto& [target, inner] : it->second.entries) acc.add(target, compose(coef, inner, nf));
  }
  return acc.entries;
}

/// True iff d_n o d_{n+1} vanishes on every row of `upper`.
inline bool compose_vanishes(const DifferentialTable& upper, const DifferentialTable& lower,
                             NormalFormCache& nf) {
  for (const auto& [w, row] : upper)
    if (!compose_rows(row, lower, nf).empty()) return false;
  return true;
}

}  // namespace anick
