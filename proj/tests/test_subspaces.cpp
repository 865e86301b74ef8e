#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "duflo/subspaces.hpp"
#include "test_util.hpp"

using namespace duflo;
using tutil::P;
using tutil::Q;

namespace {

SymPolynomial sl2_casimir() { return P(3, {{{0, 2, 0}, "1"}, {{1, 0, 1}, "4"}}); }

unsigned component_dim(unsigned n, unsigned k) {
  // C(n+k-1, k)
  return static_cast<unsigned>(binomial(n + k - 1, k).get_num().get_ui());
}

}  // namespace

TEST_CASE("invariants of abelian(n) fill the whole component") {
  for (unsigned n : {1u, 2u, 3u}) {
    const auto sc = abelian(n);
    for (unsigned k : {0u, 1u, 2u, 3u, 4u}) {
      const auto inv = invariants_basis(sc, k);
      CHECK(inv.dim() == component_dim(n, k));
    }
  }
}

TEST_CASE("sl2 degree-2 invariants are the Casimir line") {
  const auto sc = sl2();
  const auto inv = invariants_basis(sc, 2);
  REQUIRE(inv.dim() == 1);

  // Brute-force oracle on the 6-dim component: the basis vector must be
  // annihilated by every stacked ad-action matrix and be proportional to
  // h^2 + 4ef.
  const auto& v = inv.generators[0];
  for (std::uint32_t i = 0; i < 3; ++i) CHECK(adjoint_action(sc, i, v).is_zero());
  const Rational ratio = v.coeff({0, 2, 0});  // h^2 coefficient
  CHECK(ratio != 0);
  CHECK(v == sl2_casimir() * ratio);
}

TEST_CASE("sl2 invariants vanish in odd degrees") {
  const auto sc = sl2();
  for (unsigned k : {1u, 3u, 5u}) CHECK(invariants_basis(sc, k).dim() == 0);
}

TEST_CASE("bracket spans of abelian algebras are zero") {
  const auto sc = abelian(3);
  for (unsigned k : {0u, 1u, 2u, 3u}) {
    CHECK(bracket_span(sc, k, SpanFlavor::g_bracket).dim() == 0);
    CHECK(bracket_span(sc, k, SpanFlavor::full_bracket).dim() == 0);
  }
}

TEST_CASE("heisenberg3 degree-1 g-span is the line through z") {
  const auto sc = heisenberg3();
  const auto gs = bracket_span(sc, 1, SpanFlavor::g_bracket);
  REQUIRE(gs.dim() == 1);
  const auto z = SymPolynomial::variable(3, 2);
  CHECK(gs.basis.contains(gs.coordinates(z)));
  CHECK_FALSE(gs.basis.contains(gs.coordinates(SymPolynomial::variable(3, 0))));
}

TEST_CASE("sl2 degree-2 g-span has dimension 5, complementary to the Casimir") {
  const auto sc = sl2();
  const auto gs = bracket_span(sc, 2, SpanFlavor::g_bracket);
  CHECK(gs.dim() == 5);
  CHECK_FALSE(gs.basis.contains(gs.coordinates(sl2_casimir())));
}

TEST_CASE("coinvariant projection is the identity on abelian algebras") {
  const auto sc = abelian(2);
  const auto f = P(2, {{{2, 0}, "3"}, {{1, 1}, "-1/2"}});
  CHECK(coinvariant_projection(sc, f, 2) == f);
}

TEST_CASE("heisenberg3: the class of z vanishes in degree 1") {
  const auto sc = heisenberg3();
  CHECK(coinvariant_projection(sc, SymPolynomial::variable(3, 2), 1).is_zero());
  CHECK_FALSE(coinvariant_projection(sc, SymPolynomial::variable(3, 0), 1).is_zero());
}

TEST_CASE("sl2: the Casimir class in degree 2 is nonzero") {
  const auto sc = sl2();
  CHECK_FALSE(coinvariant_projection(sc, sl2_casimir(), 2).is_zero());
}

TEST_CASE("coinvariant projection identifies polynomials modulo the span") {
  const auto sc = sl2();
  const auto gs = bracket_span(sc, 2, SpanFlavor::g_bracket);
  // {h, ef} lies in the span, so adding it must not change the class
  const auto shift = poisson_bracket(sc, SymPolynomial::variable(3, 1), P(3, {{{1, 0, 1}, "1"}}));
  const auto f = sl2_casimir();
  CHECK(coinvariant_projection(gs, f + shift * Q("7/3")) == coinvariant_projection(gs, f));
}

TEST_CASE("coinvariant projection of a constant is the constant") {
  const auto sc = sl2();
  const auto c = SymPolynomial::constant(3, Q("5/7"));
  CHECK(coinvariant_projection(sc, c, 0) == c);
}

TEST_CASE("coinvariant projection rejects non-homogeneous input") {
  const auto sc = sl2();
  const auto f = P(3, {{{1, 0, 0}, "1"}, {{0, 2, 0}, "1"}});
  CHECK_THROWS_AS((void)coinvariant_projection(sc, f, 2), std::invalid_argument);
}

TEST_CASE("g-span is contained in the full span on the catalog") {
  for (const auto& name : {"heisenberg3", "aff1", "sl2", "gl(2)"}) {
    const auto sc = catalog_lookup(name);
    for (unsigned k : {1u, 2u, 3u, 4u}) {
      const auto gs = bracket_span(sc, k, SpanFlavor::g_bracket);
      const auto fs = bracket_span(sc, k, SpanFlavor::full_bracket);
      for (std::size_t r = 0; r < gs.basis.rank(); ++r)
        CHECK(fs.basis.contains(gs.basis.basis_rows().row(r)));
    }
  }
}

TEST_CASE("invariant basis polynomials are annihilated by every adjoint action") {
  for (const auto& name : {"heisenberg3", "aff1", "sl2", "gl(2)"}) {
    const auto sc = catalog_lookup(name);
    for (unsigned k : {1u, 2u, 3u, 4u}) {
      const auto inv = invariants_basis(sc, k);
      for (const auto& g : inv.generators)
        for (std::uint32_t i = 0; i < sc.dim(); ++i)
          CHECK(adjoint_action(sc, i, g).is_zero());
    }
  }
}

TEST_CASE("sl2 decomposition: invariants + g-span = S^k with trivial intersection, k <= 6") {
  const auto sc = sl2();
  for (unsigned k = 1; k <= 6; ++k) {
    const auto inv = invariants_basis(sc, k);
    const auto gs = bracket_span(sc, k, SpanFlavor::g_bracket);
    const unsigned dim_sk = component_dim(3, k);
    CHECK(dim_sk == (k + 1) * (k + 2) / 2);
    CHECK(inv.dim() == (k % 2 == 0 ? 1 : 0));
    CHECK(inv.dim() + gs.dim() == dim_sk);
    const auto stacked = vstack(inv.basis.basis_rows(), gs.basis.basis_rows());
    CHECK(rref(stacked).rank == inv.dim() + gs.dim());
  }
}

TEST_CASE("bracket-span generators carry readable labels and reconstruct witnesses") {
  const auto sc = heisenberg3();
  const auto gs = bracket_span(sc, 1, SpanFlavor::g_bracket);
  const auto z = SymPolynomial::variable(3, 2);
  const auto w = gs.basis.membership(gs.coordinates(z));
  REQUIRE(w.has_value());
  SymPolynomial rebuilt(3);
  for (std::size_t q = 0; q < w->size(); ++q)
    if ((*w)[q] != 0) rebuilt += gs.generators[q] * (*w)[q];
  CHECK(rebuilt == z);
  bool found = false;
  for (const auto& l : gs.labels) found = found || l == "{x, y}";
  CHECK(found);
}
