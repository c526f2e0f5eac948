#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "anick/errors.hpp"

namespace anick {

/// Exact rational in lowest terms with positive denominator.
using Scalar = mpq_class;

/// Parses "p" or "p/q" (optional leading sign).
inline Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational", 0);
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool seen_slash = false;
  bool digits_before = false, digits_after = false;
  for (std::size_t k = i; k < s.size(); ++k) {
    char ch = s[k];
    if (ch == '/') {
      if (seen_slash || !digits_before) throw ParseError("malformed rational '" + s + "'", k);
      seen_slash = true;
    } else if (ch >= '0' && ch <= '9') {
      (seen_slash ? digits_after : digits_before) = true;
    } else {
      throw ParseError("malformed rational '" + s + "'", k);
    }
  }
  if (!digits_before || (seen_slash && !digits_after))
    throw ParseError("malformed rational '" + s + "'", s.size());
  if (s[0] == '+') s.erase(0, 1);
  Scalar q;
  q.set_str(s, 10);
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'", s.size());
  q.canonicalize();
  return q;
}

inline std::string to_string(const Scalar& q) { return q.get_str(); }

inline bool is_zero(const Scalar& q) { return sgn(q) == 0; }

/// Binomial coefficient; zero outside 0 <= k <= n.
inline Scalar binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Scalar(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Scalar(r);
}

}  // namespace anick
