#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace duflo {

// Every coefficient in this library is an exact rational. No floating point
// anywhere; GMP keeps values canonical (lowest terms, positive denominator).
using Rational = mpq_class;

/// Parses "p" or "p/q" with decimal integers (optional leading sign on p,
/// q strictly positive digits). Throws std::invalid_argument otherwise.
inline Rational rational_from_string(std::string_view s) {
  const auto bad = [&]() -> Rational {
    throw std::invalid_argument("bad rational literal: '" + std::string(s) + "'");
  };
  if (s.empty()) return bad();
  const auto is_digits = [](std::string_view t) {
    if (t.empty()) return false;
    for (char ch : t)
      if (ch < '0' || ch > '9') return false;
    return true;
  };
  std::string_view num = s, den = "1";
  if (auto pos = s.find('/'); pos != std::string_view::npos) {
    num = s.substr(0, pos);
    den = s.substr(pos + 1);
  }
  std::string_view digits = num;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!is_digits(digits) || !is_digits(den)) return bad();
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) return bad();
  Rational q(n, d);
  q.canonicalize();
  return q;
}

/// Canonical decimal rendering: "p" when the denominator is 1, else "p/q".
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

inline Rational binomial(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

}  // namespace duflo
