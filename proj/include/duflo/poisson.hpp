#pragma once

#include "duflo/lie_algebra.hpp"
#include "duflo/polynomial.hpp"

namespace duflo {

namespace detail {

// out += q * x_k * t
inline void add_scaled_shift(SymPolynomial& out, const SymPolynomial& t, std::uint32_t k,
                             const Rational& q) {
  for (const auto& [m, c] : t.terms()) {
    Monomial s = m;
    ++s[k];
    out.add_term(std::move(s), c * q);
  }
}

}  // namespace detail

/// Kostant-Kirillov Poisson bracket on S(g):
///   {f, h} = sum_{i<j,k} c_ij^k x_k (df/dx_i dh/dx_j - df/dx_j dh/dx_i).
/// Bilinear and antisymmetric; on generators {x_i, x_j} = [x_i, x_j]. The
/// bivector is never materialized; the formula reads the structure constants
/// directly.
inline SymPolynomial poisson_bracket(const StructureConstants& sc, const SymPolynomial& f,
                                     const SymPolynomial& h) {
  const unsigned n = sc.dim();
  if (f.nvars() != n || h.nvars() != n)
    throw std::invalid_argument("poisson_bracket: dimension mismatch");
  SymPolynomial out(n);
  if (f.is_zero() || h.is_zero()) return out;
  std::vector<SymPolynomial> df, dh;
  df.reserve(n);
  dh.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    df.push_back(f.derivative(i));
    dh.push_back(h.derivative(i));
  }
  for (const auto& [key, comb] : sc.stored_brackets()) {
    const auto [i, j] = key;
    SymPolynomial t = df[i] * dh[j] - df[j] * dh[i];
    if (t.is_zero()) continue;
    for (const auto& [k, q] : comb) detail::add_scaled_shift(out, t, k, q);
  }
  return out;
}

/// Adjoint action of the generator x_i on S(g); equals {x_i, f}.
inline SymPolynomial adjoint_action(const StructureConstants& sc, std::uint32_t i,
                                    const SymPolynomial& f) {
  const unsigned n = sc.dim();
  if (i >= n) throw std::out_of_range("adjoint_action: generator index out of range");
  if (f.nvars() != n) throw std::invalid_argument("adjoint_action: dimension mismatch");
  SymPolynomial out(n);
  for (std::uint32_t j = 0; j < n; ++j) {
    if (j == i) continue;
    const auto comb = sc.bracket(i, j);
    if (comb.empty()) continue;
    const SymPolynomial dfj = f.derivative(j);
    if (dfj.is_zero()) continue;
    for (const auto& [k, q] : comb) detail::add_scaled_shift(out, dfj, k, q);
  }
  return out;
}

inline bool is_invariant(const StructureConstants& sc, const SymPolynomial& f) {
  for (std::uint32_t i = 0; i < sc.dim(); ++i)
    if (!adjoint_action(sc, i, f).is_zero()) return false;
  return true;
}

}  // namespace duflo
