#pragma once

// Hochschild cohomology with coefficients in one-dimensional sign bimodules,
// computed from the ranks of the specialized Anick differentials:
//   dim H^n = |V^(n-1)| - rank d_{n+1} - rank d_n.

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "anick/g23.hpp"
#include "anick/morse.hpp"

namespace anick {

/// A map from generators to {+1, -1}, extended multiplicatively to words.
class SignCharacter {
 public:
  SignCharacter() = default;

  /// From a sign string over the alphabet, e.g. "++-" for (a, b, c).
  SignCharacter(const Alphabet& alphabet, std::string_view signs) {
    if (signs.size() != alphabet.size())
      throw ParseError("sign string '" + std::string(signs) + "' must have " +
                           std::to_string(alphabet.size()) + " entries",
                       0);
    for (std::size_t i = 0; i < signs.size(); ++i) {
      if (signs[i] != '+' && signs[i] != '-') throw ParseError("expected '+' or '-'", i);
      signs_[alphabet.generators()[i].symbol] = signs[i] == '+' ? 1 : -1;
    }
  }

  int operator()(char symbol) const {
    auto it = signs_.find(symbol);
    if (it == signs_.end()) throw Error(std::string("sign character undefined on '") + symbol + "'");
    return it->second;
  }

  int operator()(const Word& w) const {
    int s = 1;
    for (char ch : w.letters()) s *= (*this)(ch);
    return s;
  }

  std::string str(const Alphabet& alphabet) const {
    std::string out;
    for (const auto& g : alphabet.generators()) out += (*this)(g.symbol) > 0 ? '+' : '-';
    return out;
  }

  friend bool operator==(const SignCharacter&, const SignCharacter&) = default;

 private:
  std::map<char, int> signs_;
};

/// The bimodule k with x.1 = left(x) and 1.x = right(x).
struct OneDimBimodule {
  std::string name;
  SignCharacter left;
  SignCharacter right;

  /// "++-/+-+"
  std::string signs(const Alphabet& alphabet) const {
    return left.str(alphabet) + "/" + right.str(alphabet);
  }
};

/// The eight representative bimodules W1..W8 over (a, b, c).
inline std::vector<OneDimBimodule> preset_bimodules() {
  static constexpr std::array<std::pair<const char*, const char*>, 8> table{{
      {"+++", "+++"},
      {"+++", "---"},
      {"+++", "++-"},
      {"+++", "+--"},
      {"++-", "++-"},
      {"++-", "--+"},
      {"++-", "+--"},
      {"++-", "+-+"},
  }};
  Alphabet abc("abc");
  std::vector<OneDimBimodule> out;
  for (std::size_t i = 0; i < table.size(); ++i)
    out.push_back({"W" + std::to_string(i + 1), SignCharacter(abc, table[i].first),
                   SignCharacter(abc, table[i].second)});
  return out;
}

/// Accepts a preset name ("W5") or a sign pair ("++-/+-+").
inline OneDimBimodule parse_bimodule(std::string_view text, const Alphabet& alphabet) {
  for (const auto& w : preset_bimodules())
    if (w.name == text) {
      if (!(alphabet == Alphabet("abc")))
        throw ParseError("preset bimodules are defined over the alphabet (a, b, c)", 0);
      return w;
    }
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    throw ParseError("expected a preset name or a sign pair like '++-/+-+'", 0);
  try {
    return {std::string(text), SignCharacter(alphabet, text.substr(0, slash)),
            SignCharacter(alphabet, text.substr(slash + 1))};
  } catch (const ParseError& e) {
    throw ParseError("bad sign pair '" + std::string(text) + "': " + e.what(), slash);
  }
}

/// Image of each target chain under x.[t].y -> left(x) right(y).
inline std::map<Word, Scalar> specialize(const DifferentialRow& row, const OneDimBimodule& w) {
  std::map<Word, Scalar> out;
  for (const auto& [target, coef] : row.entries) {
    Scalar sum = 0;
    for (const auto& [k, c] : coef) sum += c * w.left(k.first) * w.right(k.second);
    if (!is_zero(sum)) out[target] = sum;
  }
  return out;
}

/// Dense matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& q) { return anick::is_zero(q); });
  }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix dimensions do not compose");
    RationalMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (anick::is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

/// Rank by fraction-free (Bareiss) elimination after clearing row denominators.
inline std::size_t rank(const RationalMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
  }
  std::size_t rk = 0;
  mpz_class prev = 1;
  for (std::size_t col = 0; col < cols && rk < rows; ++col) {
    std::size_t pivot = rk;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rk]);
    for (std::size_t r = rk + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        a[r][c] = a[rk][col] * a[r][c] - a[r][col] * a[rk][c];
        mpz_divexact(a[r][c].get_mpz_t(), a[r][c].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][col] = 0;
    }
    prev = a[rk][col];
    ++rk;
  }
  return rk;
}

/// Rank by ordinary row reduction over the rationals; used as a cross-check.
inline std::size_t rank_row_echelon(RationalMatrix m) {
  std::size_t rk = 0;
  for (std::size_t col = 0; col < m.cols() && rk < m.rows(); ++col) {
    std::size_t pivot = rk;
    while (pivot < m.rows() && anick::is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(rk, c));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rk || anick::is_zero(m(r, col))) continue;
      Scalar f = m(r, col) / m(rk, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(rk, c);
    }
    ++rk;
  }
  return rk;
}

enum class DifferentialSource { morse, closed_form };

inline const char* to_string(DifferentialSource s) {
  return s == DifferentialSource::morse ? "morse" : "closed";
}

/// Chains and differential tables per degree for one presentation, computed
/// lazily from the chosen source. Chains are ordered by rendered word.
class Differentials {
 public:
  Differentials(Presentation p, DifferentialSource source, std::size_t depth_budget = 0)
      : source_(source), morse_(std::make_unique<MorseComplex>(std::move(p), depth_budget)) {
    if (source_ == DifferentialSource::closed_form && !g23::is_g23(morse_->presentation()))
      throw Error("closed-form differentials are only available for the built-in G_3^2 presentation");
  }

  DifferentialSource source() const { return source_; }
  MorseComplex& morse() { return *morse_; }
  const Presentation& presentation() const { return morse_->presentation(); }

  const std::vector<ChainElement>& chains(int n) {
    auto it = chains_.find(n);
    if (it != chains_.end()) return it->second;
    auto list = enumerate_chains(n, morse_->obstructions());
    std::stable_sort(list.begin(), list.end(), [](const ChainElement& a, const ChainElement& b) {
      return render_word(a.word) < render_word(b.word);
    });
    return chains_.emplace(n, std::move(list)).first->second;
  }

  /// Rows of d_{n+1}, one per n-chain.
  const DifferentialTable& table(int n) {
    auto it = tables_.find(n);
    if (it != tables_.end()) return it->second;
    DifferentialTable t = source_ == DifferentialSource::closed_form ? g23::closed_form_table(n)
                                                                     : morse_->table(n);
    return tables_.emplace(n, std::move(t)).first->second;
  }

 private:
  DifferentialSource source_;
  std::unique_ptr<MorseComplex> morse_;
  std::map<int, std::vector<ChainElement>> chains_;
  std::map<int, DifferentialTable> tables_;
};

/// Matrix of the specialized d_{n+1}: rows indexed by V^(n), columns by V^(n-1).
inline RationalMatrix build_matrix(int n, const OneDimBimodule& w, Differentials& d) {
  if (n < 0) throw DegreeMismatch("build_matrix requires n >= 0");
  const auto& rows = d.chains(n);
  const auto& cols = d.chains(n - 1);
  std::map<Word, std::size_t> col_index;
  for (std::size_t c = 0; c < cols.size(); ++c) col_index[cols[c].word] = c;
  const auto& table = d.table(n);
  RationalMatrix m(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto it = table.find(rows[r].word);
    if (it == table.end()) throw Error("no differential for chain '" + render_word(rows[r].word) + "'");
    for (const auto& [target, value] : specialize(it->second, w)) {
      auto ci = col_index.find(target);
      if (ci == col_index.end())
        throw Error("differential of '" + render_word(rows[r].word) + "' hits non-chain '" +
                    render_word(target) + "'");
      m(r, ci->second) = value;
    }
  }
  return m;
}

struct CohomologyDegree {
  int n;
  std::size_t chains;    // |V^(n-1)|
  std::size_t rank_in;   // rank of d_n
  std::size_t rank_out;  // rank of d_{n+1}
  long dim;
};

inline CohomologyDegree cohomology_degree(int n, const OneDimBimodule& w, Differentials& d) {
  if (n < 1) throw DegreeMismatch("cohomology is computed for n >= 1");
  CohomologyDegree out{n, d.chains(n - 1).size(), rank(build_matrix(n - 1, w, d)),
                       rank(build_matrix(n, w, d)), 0};
  out.dim = static_cast<long>(out.chains) - static_cast<long>(out.rank_in) - static_cast<long>(out.rank_out);
  if (out.dim < 0)
    throw NegativeDimension("dim H^" + std::to_string(n) + " came out as " + std::to_string(out.dim));
  return out;
}

inline long cohomology_dim(int n, const OneDimBimodule& w, Differentials& d) {
  return cohomology_degree(n, w, d).dim;
}

struct CohomologyReport {
  OneDimBimodule bimodule;
  std::string signs;
  DifferentialSource source;
  std::vector<CohomologyDegree> degrees;
};

inline CohomologyReport report(const OneDimBimodule& w, int max_n, Differentials& d) {
  if (max_n < 1) throw Error("max n must be at least 1");
  CohomologyReport out{w, w.signs(d.presentation().alphabet()), d.source(), {}};
  for (int n = 1; n <= max_n; ++n) out.degrees.push_back(cohomology_degree(n, w, d));
  return out;
}

}  // namespace anick
