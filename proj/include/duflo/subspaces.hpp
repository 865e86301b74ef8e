#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "duflo/matrix.hpp"
#include "duflo/poisson.hpp"

namespace duflo {

enum class SpanFlavor { invariants, g_bracket, full_bracket };

/// A distinguished subspace of the degree-k component S^k(g), with the
/// generating set (labeled) kept next to the reduced basis so membership
/// witnesses read as combinations of actual brackets.
struct GradedSubspace {
  unsigned degree = 0;
  SpanFlavor flavor = SpanFlavor::invariants;
  std::vector<Monomial> coords;  // monomial basis of S^k in canonical order
  std::map<Monomial, std::size_t, GradedLexLess> coord_index;
  std::vector<std::string> labels;
  std::vector<SymPolynomial> generators;
  SubspaceBasis basis;

  unsigned dim() const { return static_cast<unsigned>(basis.rank()); }
  std::size_t ambient_dim() const { return coords.size(); }

  /// Coordinates of a polynomial that is homogeneous of this degree (or 0).
  std::vector<Rational> coordinates(const SymPolynomial& f) const {
    std::vector<Rational> v(coords.size(), Rational(0));
    for (const auto& [m, c] : f.terms()) {
      auto it = coord_index.find(m);
      if (it == coord_index.end())
        throw std::invalid_argument("coordinates: polynomial not homogeneous of the right degree");
      v[it->second] = c;
    }
    return v;
  }

  SymPolynomial from_coordinates(std::span<const Rational> v) const {
    SymPolynomial f(coords.empty() ? 0u : static_cast<unsigned>(coords.front().size()));
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) f.add_term(coords[i], v[i]);
    return f;
  }
};

namespace detail {

inline GradedSubspace make_graded(const StructureConstants& sc, unsigned k, SpanFlavor flavor) {
  GradedSubspace g;
  g.degree = k;
  g.flavor = flavor;
  g.coords = monomials_of_degree(sc.dim(), k);
  for (std::size_t i = 0; i < g.coords.size(); ++i) g.coord_index.emplace(g.coords[i], i);
  return g;
}

}  // namespace detail

/// Canonical basis of [S^k(g)]^g, computed as the joint kernel of all adjoint
/// actions on the degree-k component (the actions preserve degree because the
/// Poisson structure is linear).
inline GradedSubspace invariants_basis(const StructureConstants& sc, unsigned k) {
  GradedSubspace g = detail::make_graded(sc, k, SpanFlavor::invariants);
  const std::uint32_t n = sc.dim();
  const std::size_t d = g.coords.size();
  RationalMatrix stacked(static_cast<std::size_t>(n) * d, d);
  for (std::size_t col = 0; col < d; ++col) {
    const SymPolynomial mono = SymPolynomial::monomial(g.coords[col], 1);
    for (std::uint32_t i = 0; i < n; ++i) {
      const SymPolynomial im = adjoint_action(sc, i, mono);
      for (const auto& [m, c] : im.terms())
        stacked.at(static_cast<std::size_t>(i) * d + g.coord_index.at(m), col) = c;
    }
  }
  g.basis = kernel_basis(stacked);
  for (std::size_t r = 0; r < g.basis.rank(); ++r) {
    g.generators.push_back(g.from_coordinates(g.basis.basis_rows().row(r)));
    g.labels.push_back("inv" + std::to_string(k) + "_" + std::to_string(r));
  }
  return g;
}

/// Span of bracket generators inside S^k(g):
///  - g_bracket:   {x_i, m} over all generators x_i and monomials m of degree k
///  - full_bracket: {m1, m2} over monomial pairs with deg m1 + deg m2 = k + 1
/// Generators (including zero ones) are retained for witness reporting.
inline GradedSubspace bracket_span(const StructureConstants& sc, unsigned k, SpanFlavor flavor) {
  if (flavor == SpanFlavor::invariants)
    throw std::invalid_argument("bracket_span: flavor must be g_bracket or full_bracket");
  GradedSubspace g = detail::make_graded(sc, k, flavor);
  const std::uint32_t n = sc.dim();
  const auto& names = sc.basis_names();

  if (flavor == SpanFlavor::g_bracket) {
    for (std::uint32_t i = 0; i < n; ++i)
      for (const Monomial& m : g.coords) {
        g.generators.push_back(adjoint_action(sc, i, SymPolynomial::monomial(m, 1)));
        g.labels.push_back("{" + names[i] + ", " + SymPolynomial::monomial_string(m, names) + "}");
      }
  } else {
    for (unsigned d1 = 1; 2 * d1 <= k + 1; ++d1) {
      const unsigned d2 = k + 1 - d1;
      const auto left = monomials_of_degree(n, d1);
      const auto right = (d1 == d2) ? left : monomials_of_degree(n, d2);
      for (std::size_t a = 0; a < left.size(); ++a) {
        const std::size_t b0 = (d1 == d2) ? a + 1 : 0;
        for (std::size_t b = b0; b < right.size(); ++b) {
          g.generators.push_back(poisson_bracket(sc, SymPolynomial::monomial(left[a], 1),
                                                 SymPolynomial::monomial(right[b], 1)));
          g.labels.push_back("{" + SymPolynomial::monomial_string(left[a], names) + ", " +
                             SymPolynomial::monomial_string(right[b], names) + "}");
        }
      }
    }
  }

  RationalMatrix span(g.generators.size(), g.coords.size());
  for (std::size_t r = 0; r < g.generators.size(); ++r)
    for (const auto& [m, c] : g.generators[r].terms())
      span.at(r, g.coord_index.at(m)) = c;
  g.basis = SubspaceBasis::from_spanning_rows(std::move(span), g.labels);
  return g;
}

/// Residue class of a homogeneous f modulo the g-bracket span of its degree,
/// expressed in the canonical complement (the non-pivot monomials). Two
/// polynomials have the same class iff their difference lies in the span.
inline SymPolynomial coinvariant_projection(const GradedSubspace& g_span, const SymPolynomial& f) {
  if (!f.is_homogeneous() || (!f.is_zero() && f.total_degree() != g_span.degree))
    throw std::invalid_argument("coinvariant_projection: input must be homogeneous of the span degree");
  return g_span.from_coordinates(g_span.basis.reduce(g_span.coordinates(f)));
}

inline SymPolynomial coinvariant_projection(const StructureConstants& sc, const SymPolynomial& f,
                                            unsigned k) {
  return coinvariant_projection(bracket_span(sc, k, SpanFlavor::g_bracket), f);
}

}  // namespace duflo
