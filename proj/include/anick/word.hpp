#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "anick/errors.hpp"

namespace anick {

/// A generator symbol together with its rank in the declared order.
/// Symbols are single ASCII letters so exponent notation stays unambiguous.
struct Generator {
  char symbol;
  int precedence;

  friend bool operator==(const Generator&, const Generator&) = default;
};

class Alphabet {
 public:
  Alphabet() = default;

  /// Precedence is assigned by position: earlier symbols rank higher.
  explicit Alphabet(std::string_view symbols) {
    int rank = static_cast<int>(symbols.size());
    for (char ch : symbols) add(Generator{ch, rank--});
  }

  void add(Generator g) {
    if (!((g.symbol >= 'a' && g.symbol <= 'z') || (g.symbol >= 'A' && g.symbol <= 'Z')))
      throw InvalidPresentation(std::string("generator symbol must be a letter, got '") + g.symbol + "'");
    if (contains(g.symbol))
      throw InvalidPresentation(std::string("duplicate generator '") + g.symbol + "'");
    for (const auto& other : generators_)
      if (other.precedence == g.precedence)
        throw InvalidPresentation("generators must have distinct precedence");
    generators_.push_back(g);
  }

  bool contains(char symbol) const {
    for (const auto& g : generators_)
      if (g.symbol == symbol) return true;
    return false;
  }

  /// Index in declaration order, or -1.
  int index_of(char symbol) const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
      if (generators_[i].symbol == symbol) return static_cast<int>(i);
    return -1;
  }

  const std::vector<Generator>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<Generator> generators_;
};

/// Element of the free monoid: a string of generator symbols.
/// Ordering is lexicographic on the symbol characters.
class Word {
 public:
  Word() = default;
  explicit Word(std::string letters) : letters_(std::move(letters)) {}
  explicit Word(const char* letters) : letters_(letters) {}

  const std::string& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  char operator[](std::size_t i) const { return letters_[i]; }

  Word substr(std::size_t pos, std::size_t len = std::string::npos) const {
    return Word(letters_.substr(pos, len));
  }

  bool contains(const Word& sub) const { return letters_.find(sub.letters_) != std::string::npos; }

  bool occurs_at(const Word& sub, std::size_t pos) const {
    return pos + sub.size() <= size() && letters_.compare(pos, sub.size(), sub.letters_) == 0;
  }

  Word& operator+=(const Word& rhs) {
    letters_ += rhs.letters_;
    return *this;
  }
  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::string letters_;
};

inline Word concat(const std::vector<Word>& parts) {
  Word out;
  for (const auto& p : parts) out += p;
  return out;
}

/// Parses the grammar (<gen> | <gen>^<positive int>)*, e.g. "b^2ca".
/// With an empty alphabet every ASCII letter is accepted.
inline Word parse_word(std::string_view text, const Alphabet& alphabet = {}) {
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    bool letter = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z');
    if (!letter || (alphabet.size() > 0 && !alphabet.contains(ch)))
      throw ParseError(std::string("unknown symbol '") + ch + "'", i);
    ++i;
    std::size_t count = 1;
    if (i < text.size() && text[i] == '^') {
      std::size_t start = ++i;
      std::size_t value = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        if (value > 1'000'000) throw ParseError("exponent too large", start);
        ++i;
      }
      if (i == start || value == 0) throw ParseError("malformed exponent", start);
      count = value;
    }
    out.append(count, ch);
  }
  return Word(std::move(out));
}

/// Renders with maximal exponent compression: "aaab" -> "a^3b". Empty word -> "".
inline std::string render_word(const Word& w) {
  std::string out;
  const auto& s = w.letters();
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = i;
    while (j < s.size() && s[j] == s[i]) ++j;
    out += s[i];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace anick

template <>
struct std::hash<anick::Word> {
  std::size_t operator()(const anick::Word& w) const noexcept {
    return std::hash<std::string>{}(w.letters());
  }
};
