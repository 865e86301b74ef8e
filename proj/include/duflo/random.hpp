#pragma once

#include <cstdint>

#include "duflo/enveloping.hpp"
#include "duflo/polynomial.hpp"

namespace duflo {

/// SplitMix64. Hand-rolled so that seeded runs are bit-identical across
/// platforms and standard libraries (std distributions are not portable).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  long int_in(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

inline Rational random_coeff(SplitMix64& rng) {
  long v = rng.int_in(-9, 9);
  if (v == 0) v = 1;
  return Rational(v);
}

inline Monomial random_monomial(SplitMix64& rng, unsigned nvars, unsigned degree) {
  Monomial m(nvars, 0);
  for (unsigned t = 0; t < degree; ++t) ++m[rng.below(nvars)];
  return m;
}

/// Sparse random polynomial with one term of the exact given degree plus up
/// to extra_terms lower-or-equal-degree terms; never zero.
inline SymPolynomial random_polynomial(SplitMix64& rng, unsigned nvars, unsigned degree,
                                       unsigned extra_terms) {
  SymPolynomial f(nvars);
  f.add_term(random_monomial(rng, nvars, degree), random_coeff(rng));
  for (unsigned t = 0; t < extra_terms; ++t) {
    const unsigned d = static_cast<unsigned>(rng.below(degree + 1));
    f.add_term(random_monomial(rng, nvars, d), random_coeff(rng));
  }
  if (f.is_zero()) f.add_term(Monomial(nvars, 0), 1);
  return f;
}

inline Word random_free_word(SplitMix64& rng, unsigned dim, unsigned length) {
  Word w;
  w.reserve(length);
  for (unsigned t = 0; t < length; ++t) w.push_back(static_cast<std::uint32_t>(rng.below(dim)));
  return w;
}

inline EnvElement random_env_element(SplitMix64& rng, unsigned dim, unsigned max_length,
                                     unsigned terms) {
  EnvElement u(dim);
  for (unsigned t = 0; t < terms; ++t) {
    Word w = random_free_word(rng, dim, static_cast<unsigned>(rng.below(max_length + 1)));
    std::sort(w.begin(), w.end());
    u.add_term(std::move(w), random_coeff(rng));
  }
  if (u.is_zero()) u.add_term(Word{}, 1);
  return u;
}

}  // namespace duflo
