#pragma once

#include <map>
#include <string>

#include "anick/scalar.hpp"
#include "anick/word.hpp"

namespace anick {

/// Element of the free algebra: a finite Word -> Scalar map with no zero entries.
class NCPolynomial {
 public:
  using Terms = std::map<Word, Scalar>;

  NCPolynomial() = default;
  explicit NCPolynomial(Word w, Scalar c = 1) { add(std::move(w), c); }

  static NCPolynomial one() { return NCPolynomial(Word{}); }

  void add(const Word& w, const Scalar& c) {
    if (anick::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (anick::is_zero(it->second)) terms_.erase(it);
    }
  }

  NCPolynomial& operator+=(const NCPolynomial& rhs) {
    for (const auto& [w, c] : rhs.terms_) add(w, c);
    return *this;
  }

  NCPolynomial& operator*=(const Scalar& c) {
    if (anick::is_zero(c)) {
      terms_.clear();
    } else {
      for (auto& [w, coef] : terms_) coef *= c;
    }
    return *this;
  }

  friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
  friend NCPolynomial operator*(NCPolynomial a, const Scalar& c) { return a *= c; }

  /// Coefficient of w, zero when absent.
  Scalar coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  friend bool operator==(const NCPolynomial&, const NCPolynomial&) = default;

 private:
  Terms terms_;
};

/// "2a^2 - cabc + 1"; the empty word renders as "1"; zero renders as "0".
inline std::string render(const NCPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p) {
    Scalar mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    std::string body = render_word(w);
    if (body.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag);
      out += body;
    }
  }
  return out;
}

}  // namespace anick
