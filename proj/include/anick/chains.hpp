#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "anick/presentation.hpp"

namespace anick {

/// The alphabet together with the obstruction set V (leading words of the rules).
class ObstructionSet {
 public:
  ObstructionSet() = default;
  ObstructionSet(Alphabet alphabet, std::vector<Word> obstructions)
      : alphabet_(std::move(alphabet)), words_(std::move(obstructions)) {
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
  }
  explicit ObstructionSet(const Presentation& p) : ObstructionSet(p.alphabet(), p.obstructions()) {}

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Word>& words() const { return words_; }

  bool is_reduced(const Word& w) const {
    for (const auto& o : words_)
      if (w.contains(o)) return false;
    return true;
  }

 private:
  Alphabet alphabet_;
  std::vector<Word> words_;
};

/// An n-chain with its canonical factorization into n+1 nonempty factors.
/// The empty word is treated as the unique (-1)-chain with no factors.
struct ChainElement {
  Word word;
  int degree = 0;
  std::vector<Word> factors;

  const Word& tail() const { return factors.back(); }

  friend bool operator==(const ChainElement&, const ChainElement&) = default;
};

inline ChainElement empty_chain() { return ChainElement{Word{}, -1, {}}; }

/// "bca^2 = b|ca|a"
inline std::string render(const ChainElement& c) {
  std::string out = render_word(c.word) + " = ";
  for (std::size_t i = 0; i < c.factors.size(); ++i) {
    if (i) out += "|";
    out += render_word(c.factors[i]);
  }
  return out;
}

/// Given the last factor `tail` of a chain and the text that follows it, the
/// smallest m such that an obstruction starting inside `tail` ends exactly at
/// text[m-1]. This is the length of the next chain factor.
inline std::optional<std::size_t> next_chain_end(const Word& tail, const Word& text,
                                                 const ObstructionSet& v) {
  std::string joined = tail.letters() + text.letters();
  for (std::size_t m = 1; m <= text.size(); ++m) {
    std::size_t end = tail.size() + m;
    for (const auto& o : v.words()) {
      if (o.size() <= m || o.size() > end) continue;
      if (joined.compare(end - o.size(), o.size(), o.letters()) == 0) return m;
    }
  }
  return std::nullopt;
}

/// Raw prechain test: indices 1 = a_1 < a_2 <= b_1 < a_3 <= b_2 < ... < b_n = |w|
/// with each w[a_j..b_j] an obstruction. Memoized search over occurrences.
inline bool is_prechain(const Word& w, int n, const ObstructionSet& v) {
  if (n < 1 || w.empty()) return false;
  struct Occ {
    long start, end;  // inclusive
  };
  std::vector<Occ> occs;
  for (const auto& o : v.words())
    for (std::size_t pos = 0; pos + o.size() <= w.size(); ++pos)
      if (w.occurs_at(o, pos))
        occs.push_back({static_cast<long>(pos), static_cast<long>(pos + o.size()) - 1});

  const long last = static_cast<long>(w.size()) - 1;
  std::map<std::tuple<int, long, std::size_t>, bool> memo;
  auto search = [&](auto&& self, int placed, long prev_end, std::size_t cur) -> bool {
    const Occ& c = occs[cur];
    if (placed == n) return c.end == last;
    auto key = std::make_tuple(placed, prev_end, cur);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool ok = false;
    for (std::size_t nxt = 0; nxt < occs.size() && !ok; ++nxt) {
      const Occ& o = occs[nxt];
      if (o.start > c.start && o.start <= c.end && o.start > prev_end && o.end > c.end)
        ok = self(self, placed + 1, c.end, nxt);
    }
    memo[key] = ok;
    return ok;
  };
  for (std::size_t first = 0; first < occs.size(); ++first)
    if (occs[first].start == 0 && search(search, 1, -1, first)) return true;
  return false;
}

/// Canonical factorization via minimal chain endpoints, or nullopt if w is not a chain.
inline std::optional<ChainElement> try_chain_factorization(const Word& w, const ObstructionSet& v) {
  if (w.empty()) return std::nullopt;
  if (!v.alphabet().generators().empty() && !v.alphabet().contains(w[0])) return std::nullopt;
  ChainElement c{w, 0, {w.substr(0, 1)}};
  std::size_t pos = 1;
  while (pos < w.size()) {
    auto m = next_chain_end(c.factors.back(), w.substr(pos), v);
    if (!m) return std::nullopt;
    c.factors.push_back(w.substr(pos, *m));
    pos += *m;
  }
  c.degree = static_cast<int>(c.factors.size()) - 1;
  return c;
}

inline std::optional<int> chain_degree(const Word& w, const ObstructionSet& v) {
  auto c = try_chain_factorization(w, v);
  if (!c) return std::nullopt;
  return c->degree;
}

inline ChainElement chain_factorization(const Word& w, const ObstructionSet& v) {
  auto c = try_chain_factorization(w, v);
  if (!c) throw NotAChain("'" + render_word(w) + "' is not an Anick chain");
  return *c;
}

/// All n-chains, sorted by word. Degree n is built by extending each
/// (n-1)-chain's tail with the remainder of an overlapping obstruction.
inline std::vector<ChainElement> enumerate_chains(int n, const ObstructionSet& v) {
  if (n < 0) return {empty_chain()};
  std::vector<ChainElement> current;
  for (const auto& g : v.alphabet().generators()) {
    Word x(std::string(1, g.symbol));
    current.push_back({x, 0, {x}});
  }
  std::sort(current.begin(), current.end(),
            [](const ChainElement& a, const ChainElement& b) { return a.word < b.word; });
  for (int degree = 1; degree <= n; ++degree) {
    std::map<Word, ChainElement> next;
    for (const auto& c : current) {
      const Word& s = c.tail();
      for (const auto& o : v.words()) {
        for (std::size_t start = 0; start < s.size(); ++start) {
          std::size_t shared = s.size() - start;
          if (o.size() <= shared) continue;
          if (s.letters().compare(start, shared, o.letters(), 0, shared) != 0) continue;
          Word t = o.substr(shared);
          auto m = next_chain_end(s, t, v);
          if (!m || *m != t.size()) continue;
          ChainElement ext = c;
          ext.word += t;
          ext.degree = degree;
          ext.factors.push_back(t);
          next.emplace(ext.word, std::move(ext));
        }
      }
    }
    current.clear();
    for (auto& [w, c] : next) current.push_back(std::move(c));
  }
  return current;
}

}  // namespace anick
