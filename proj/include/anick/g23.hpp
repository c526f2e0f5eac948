#pragma once

// The group algebra of G_3^2 = <a, b, c | a^2 = b^2 = c^2 = 1, bca = acb>:
// its confluent presentation and the explicit Anick differentials, kept
// independent of the Morse-matching code so the two can be cross-checked.

#include <optional>
#include <string>
#include <vector>

#include "anick/differential.hpp"

namespace anick::g23 {

/// Rules aa -> 1, bb -> 1, cc -> 1, ba -> cabc, bca -> acb over a > b > c.
inline Presentation presentation(std::size_t step_budget = kDefaultStepBudget) {
  auto w = [](const char* s) { return Word(s); };
  std::vector<RewriteRule> rules{
      {w("aa"), NCPolynomial::one()},
      {w("bb"), NCPolynomial::one()},
      {w("cc"), NCPolynomial::one()},
      {w("ba"), NCPolynomial(w("cabc"))},
      {w("bca"), NCPolynomial(w("acb"))},
  };
  return Presentation(Alphabet("abc"), std::move(rules), step_budget);
}

/// The defining relations without the derived rule ba -> cabc. Not confluent.
inline Presentation defining_relations() {
  auto w = [](const char* s) { return Word(s); };
  std::vector<RewriteRule> rules{
      {w("aa"), NCPolynomial::one()},
      {w("bb"), NCPolynomial::one()},
      {w("cc"), NCPolynomial::one()},
      {w("bca"), NCPolynomial(w("acb"))},
  };
  return Presentation(Alphabet("abc"), std::move(rules));
}

inline bool is_g23(const Presentation& p) {
  auto ref = presentation();
  if (!(p.alphabet() == ref.alphabet()) || p.rules().size() != ref.rules().size()) return false;
  for (std::size_t i = 0; i < p.rules().size(); ++i)
    if (p.rules()[i].lhs != ref.rules()[i].lhs || !(p.rules()[i].rhs == ref.rules()[i].rhs))
      return false;
  return true;
}

/// Shape of a chain: x^{n+1}, b^i a^j or b^i c a^j.
struct Chain {
  enum class Shape { a_power, b_power, c_power, b_a, b_c_a };

  Shape shape;
  int i = 0;  // exponent of b, or the power
  int j = 0;  // exponent of a

  int degree() const {
    switch (shape) {
      case Shape::a_power:
      case Shape::b_power:
      case Shape::c_power: return i - 1;
      case Shape::b_a:
      case Shape::b_c_a: return i + j - 1;
    }
    return -1;
  }

  Word word() const {
    switch (shape) {
      case Shape::a_power: return Word(std::string(i, 'a'));
      case Shape::b_power: return Word(std::string(i, 'b'));
      case Shape::c_power: return Word(std::string(i, 'c'));
      case Shape::b_a: return Word(std::string(i, 'b') + std::string(j, 'a'));
      case Shape::b_c_a: return Word(std::string(i, 'b') + "c" + std::string(j, 'a'));
    }
    return {};
  }

  /// Recognizes the shape of w; nullopt for words outside the chain families.
  static std::optional<Chain> from_word(const Word& w) {
    const std::string& s = w.letters();
    if (s.size() < 2) return std::nullopt;
    auto run = [&](std::size_t from, char ch) {
      std::size_t k = from;
      while (k < s.size() && s[k] == ch) ++k;
      return k - from;
    };
    int n = static_cast<int>(s.size());
    for (char ch : {'a', 'b', 'c'})
      if (static_cast<int>(run(0, ch)) == n)
        return Chain{ch == 'a' ? Shape::a_power : ch == 'b' ? Shape::b_power : Shape::c_power, n, 0};
    std::size_t bs = run(0, 'b');
    if (bs == 0) return std::nullopt;
    if (s[bs] == 'a' && run(bs, 'a') == s.size() - bs)
      return Chain{Shape::b_a, static_cast<int>(bs), static_cast<int>(s.size() - bs)};
    if (s[bs] == 'c' && bs + 1 < s.size() && run(bs + 1, 'a') == s.size() - bs - 1)
      return Chain{Shape::b_c_a, static_cast<int>(bs), static_cast<int>(s.size() - bs - 1)};
    return std::nullopt;
  }
};

/// All chains of degree n >= 1 in the closed-form families; 2n + 3 of them.
inline std::vector<Chain> chains(int n) {
  std::vector<Chain> out{{Chain::Shape::a_power, n + 1, 0},
                         {Chain::Shape::b_power, n + 1, 0},
                         {Chain::Shape::c_power, n + 1, 0}};
  for (int j = 1; j <= n; ++j) {
    out.push_back({Chain::Shape::b_a, n + 1 - j, j});
    out.push_back({Chain::Shape::b_c_a, n + 1 - j, j});
  }
  return out;
}

namespace detail {

inline std::string pw(char ch, int k) { return std::string(static_cast<std::size_t>(k), ch); }

/// Accumulates coef * left[target]right.
class RowBuilder {
 public:
  explicit RowBuilder(DifferentialRow& row) : row_(row) {}

  RowBuilder& operator()(const Scalar& coef, const std::string& left, const std::string& target,
                         const std::string& right) {
    row_.add(Word(target), BimoduleCoefficient(Word(left), Word(right), coef));
    return *this;
  }

 private:
  DifferentialRow& row_;
};

inline Scalar sign(int parity_exponent) { return parity_exponent % 2 == 0 ? 1 : -1; }

inline void degree_one(const Chain& ch, RowBuilder& t) {
  using S = Chain::Shape;
  switch (ch.shape) {
    case S::a_power: t(1, "a", "a", "")(1, "", "a", "a"); break;
    case S::b_power: t(1, "b", "b", "")(1, "", "b", "b"); break;
    case S::c_power: t(1, "c", "c", "")(1, "", "c", "c"); break;
    case S::b_a:
      t(1, "b", "a", "")(1, "", "b", "a")(-1, "", "c", "abc")(-1, "c", "a", "bc")(-1, "cab", "c", "")(
          -1, "ca", "b", "c");
      break;
    case S::b_c_a:
      t(1, "", "b", "ca")(1, "bc", "a", "")(1, "b", "c", "a")(-1, "", "a", "cb")(-1, "a", "c", "b")(
          -1, "ac", "b", "");
      break;
  }
}

// d_{n+1} of the four boundary chains b^n a, b a^n, b^n ca, bca^n.
inline bool boundary(const Chain& ch, int n, RowBuilder& t) {
  using S = Chain::Shape;
  const std::string bn = pw('b', n), bn1 = pw('b', n - 1), an = pw('a', n), an1 = pw('a', n - 1),
                    cn = pw('c', n);
  const bool even = (n + 1) % 2 == 0;
  if (ch.shape == S::b_a && ch.j == 1) {
    if (even)
      t(1, "b", bn1 + "a", "")(1, "", bn, "a")(-1, "", bn1 + "ca", "bc")(-1, "ca", bn, "c")(-1, "cab", cn, "");
    else
      t(1, "b", bn1 + "a", "")(-1, "", bn, "a")(1, "", bn1 + "ca", "bc")(1, "ac", bn, "c")(1, "a", cn, "");
    return true;
  }
  if (ch.shape == S::b_a && ch.i == 1) {
    if (even)
      t(1, "b", an, "")(1, "", "b" + an1, "a")(-1, "ca", "bc" + an1, "")(-1, "c", an, "bc")(-1, "", cn, "abc");
    else
      t(1, "b", an, "")(-1, "", "b" + an1, "a")(-1, "ca", "bc" + an1, "")(-1, "c", an, "cb")(-1, "", cn, "b");
    return true;
  }
  if (ch.shape == S::b_c_a && ch.j == 1) {
    if (even)
      t(1, "b", bn1 + "ca", "")(1, "", bn, "ca")(-1, "", bn1 + "a", "cb")(-1, "ac", bn, "")(-1, "a", cn, "b");
    else
      t(1, "b", bn1 + "ca", "")(-1, "", bn, "ca")(1, "", bn1 + "a", "cb")(1, "ca", bn, "")(1, "cab", cn, "b");
    return true;
  }
  if (ch.shape == S::b_c_a && ch.i == 1) {
    if (even)
      t(1, "bc", an, "")(1, "", "bc" + an1, "a")(-1, "ac", "b" + an1, "")(-1, "", an, "cb")(-1, "a", cn, "b");
    else
      t(1, "bc", an, "")(-1, "", "bc" + an1, "a")(-1, "ac", "b" + an1, "")(-1, "", an, "bc")(-1, "a", cn, "abc");
    return true;
  }
  return false;
}

// d_{n+1} of b^i a^j and b^i c a^j with 2 <= j <= n - 1.
inline void interior(const Chain& ch, int n, RowBuilder& t) {
  using S = Chain::Shape;
  const int i = ch.i, j = ch.j;
  const std::string cn = pw('c', n);
  const std::string bi_aj1 = pw('b', i) + pw('a', j - 1);
  const std::string bi_c_aj1 = pw('b', i) + "c" + pw('a', j - 1);
  const std::string bi1_aj = pw('b', i - 1) + pw('a', j);
  const std::string bi1_c_aj = pw('b', i - 1) + "c" + pw('a', j);
  const bool even = (n + 1) % 2 == 0;

  if (even) {
    const long m = (n - 3) / 2;
    if (j % 2 == 0) {
      if (ch.shape == S::b_a) {
        t(1, "b", bi1_aj, "")(1, "", bi_aj1, "a")(1, "", bi1_c_aj, "cb")(1, "ac", bi_c_aj1, "");
      } else {
        t(1, "b", bi1_c_aj, "")(1, "", bi_c_aj1, "a")(1, "", bi1_aj, "bc")(1, "ca", bi_aj1, "");
        t(binomial(m, (j - 2) / 2), "cab", cn, "abc")(-binomial(m, (i - 2) / 2), "", cn, "");
      }
    } else {
      const Scalar ci = binomial(m, (i - 3) / 2), cj = binomial(m, (j - 3) / 2);
      if (ch.shape == S::b_a) {
        t(1, "b", bi1_aj, "")(1, "", bi_aj1, "a")(-1, "", bi1_c_aj, "bc")(-1, "ca", bi_c_aj1, "");
        t(-ci, "cab", cn, "")(-cj, "", cn, "abc");
      } else {
        t(1, "b", bi1_c_aj, "")(1, "", bi_c_aj1, "a")(-1, "", bi1_aj, "cb")(-1, "ac", bi_aj1, "");
        t(-(ci + cj), "a", cn, "b");
      }
    }
  } else {
    const long m = (n - 2) / 2;
    if (j % 2 == 0) {
      const Scalar cj = binomial(m, (j - 2) / 2);
      if (ch.shape == S::b_a) {
        t(1, "b", bi1_aj, "")(-1, "", bi_aj1, "a")(-1, "", bi1_c_aj, "cb")(-1, "ca", bi_c_aj1, "");
        t(-cj, "", cn, "b");
      } else {
        t(1, "b", bi1_c_aj, "")(-1, "", bi_c_aj1, "a")(-1, "", bi1_aj, "bc")(-1, "ac", bi_aj1, "");
        t(-cj, "a", cn, "abc");
      }
    } else {
      const Scalar ci = binomial(m, (i - 2) / 2);
      if (ch.shape == S::b_a) {
        t(1, "b", bi1_aj, "")(-1, "", bi_aj1, "a")(1, "", bi1_c_aj, "bc")(1, "ac", bi_c_aj1, "");
        t(ci, "a", cn, "");
      } else {
        t(1, "b", bi1_c_aj, "")(-1, "", bi_c_aj1, "a")(1, "", bi1_aj, "cb")(1, "ca", bi_aj1, "");
        t(ci, "cab", cn, "b");
      }
    }
  }
}

}  // namespace detail

/// d_{n+1} of a chain of degree n >= 1, from the explicit formulas.
inline DifferentialRow closed_form_differential(const Chain& ch, int n) {
  if (n < 1) throw DegreeMismatch("closed form is defined for degree n >= 1");
  if (ch.degree() != n)
    throw DegreeMismatch("chain '" + render_word(ch.word()) + "' has degree " +
                         std::to_string(ch.degree()) + ", not " + std::to_string(n));
  DifferentialRow row;
  row.source.word = ch.word();
  row.source.degree = n;
  detail::RowBuilder t(row);

  using S = Chain::Shape;
  if (ch.shape == S::a_power || ch.shape == S::b_power || ch.shape == S::c_power) {
    const char x = ch.shape == S::a_power ? 'a' : ch.shape == S::b_power ? 'b' : 'c';
    const std::string xs(1, x), xn = detail::pw(x, n);
    t(1, xs, xn, "")(detail::sign(n + 1), "", xn, xs);
    return row;
  }
  if (n == 1) {
    detail::degree_one(ch, t);
    return row;
  }
  if (!detail::boundary(ch, n, t)) detail::interior(ch, n, t);
  return row;
}

inline DifferentialRow closed_form_differential(const Word& w, int n) {
  auto ch = Chain::from_word(w);
  if (!ch) throw NotAChain("'" + render_word(w) + "' is not a chain of G_3^2");
  return closed_form_differential(*ch, n);
}

/// Closed-form table of d_{n+1} over all n-chains. For n = 0 this is
/// d_1[x] = x[] - []x.
inline DifferentialTable closed_form_table(int n) {
  DifferentialTable out;
  if (n == 0) {
    for (char x : {'a', 'b', 'c'}) {
      DifferentialRow row;
      row.source = ChainElement{Word(std::string(1, x)), 0, {Word(std::string(1, x))}};
      row.add(Word{}, BimoduleCoefficient(Word(std::string(1, x)), Word{}, 1));
      row.add(Word{}, BimoduleCoefficient(Word{}, Word(std::string(1, x)), -1));
      out.emplace(row.source.word, std::move(row));
    }
    return out;
  }
  for (const auto& ch : chains(n)) out.emplace(ch.word(), closed_form_differential(ch, n));
  return out;
}

}  // namespace anick::g23
