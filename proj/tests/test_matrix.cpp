#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "duflo/matrix.hpp"
#include "duflo/random.hpp"
#include "test_util.hpp"

using namespace duflo;
using tutil::Q;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

RationalMatrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols) {
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const long num = rng.int_in(-5, 5);
      const long den = rng.int_in(1, 4);
      m.at(i, j) = Rational(num, den);
      m.at(i, j).canonicalize();
    }
  return m;
}


}  // namespace

TEST_CASE("rref of the 2x2 identity is itself with pivots [0,1]") {
  const auto m = RationalMatrix::identity(2);
  const RrefResult r = rref(m);
  CHECK(r.matrix == m);
  CHECK(r.pivot_cols == std::vector<std::size_t>{0, 1});
  CHECK(r.rank == 2);
}

TEST_CASE("rref of a rank-1 matrix") {
  const auto m = from_rows({{2, 4}, {1, 2}});
  const RrefResult r = rref(m);
  CHECK(r.matrix == from_rows({{1, 2}, {0, 0}}));
  CHECK(r.pivot_cols == std::vector<std::size_t>{0});
  CHECK(r.rank == 1);
}

TEST_CASE("rref preserves the row space (mutual membership on a random 5x7)") {
  SplitMix64 rng(42);
  const RationalMatrix m = random_matrix(rng, 5, 7);
  const RrefResult r = rref(m);

  const auto original = SubspaceBasis::from_spanning_rows(m);
  RationalMatrix reduced_rows(r.rank, 7);
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < 7; ++j) reduced_rows.at(i, j) = r.matrix.at(i, j);
  const auto reduced = SubspaceBasis::from_spanning_rows(reduced_rows);

  for (std::size_t i = 0; i < r.rank; ++i)
    CHECK(original.membership(reduced_rows.row(i)).has_value());
  for (std::size_t i = 0; i < 5; ++i) CHECK(reduced.membership(m.row(i)).has_value());
}

TEST_CASE("rref is idempotent on random matrices") {
  SplitMix64 rng(7);
  for (int t = 0; t < 20; ++t) {
    const RationalMatrix m = random_matrix(rng, 1 + rng.below(6), 1 + rng.below(8));
    const RrefResult once = rref(m);
    const RrefResult twice = rref(once.matrix);
    CHECK(once.matrix == twice.matrix);
    CHECK(once.pivot_cols == twice.pivot_cols);
  }
}

TEST_CASE("kernel of the zero 3x3 matrix is all of Q^3") {
  const SubspaceBasis k = kernel_basis(RationalMatrix(3, 3));
  CHECK(k.rank() == 3);
  CHECK(k.ambient_dim() == 3);
}

TEST_CASE("kernel of the 3x3 identity is trivial") {
  const SubspaceBasis k = kernel_basis(RationalMatrix::identity(3));
  CHECK(k.rank() == 0);
  std::vector<Rational> v{1, 0, 0};
  CHECK_FALSE(k.membership(v).has_value());
  std::vector<Rational> zero{0, 0, 0};
  const auto w = k.membership(zero);
  REQUIRE(w.has_value());
  CHECK(w->empty());
}

TEST_CASE("rank plus kernel dimension equals the column count") {
  SplitMix64 rng(11);
  for (int t = 0; t < 25; ++t) {
    const RationalMatrix m = random_matrix(rng, 1 + rng.below(6), 1 + rng.below(8));
    const RrefResult r = rref(m);
    const SubspaceBasis k = kernel_basis(m);
    CHECK(r.rank + k.rank() == m.cols());
    // every kernel basis row is annihilated by m
    for (std::size_t kr = 0; kr < k.rank(); ++kr) {
      for (std::size_t i = 0; i < m.rows(); ++i) {
        Rational dot(0);
        for (std::size_t j = 0; j < m.cols(); ++j) dot += m.at(i, j) * k.basis_rows().at(kr, j);
        CHECK(dot == 0);
      }
    }
  }
}

TEST_CASE("membership: zero vector gets the all-zero witness") {
  const auto s = SubspaceBasis::from_spanning_rows(from_rows({{1, 2, 0}, {0, 1, 1}}));
  std::vector<Rational> zero{0, 0, 0};
  const auto w = s.membership(zero);
  REQUIRE(w.has_value());
  for (const auto& c : *w) CHECK(c == 0);
}

TEST_CASE("membership: a spanning vector gets a unit witness") {
  const auto rows = from_rows({{1, 2, 0}, {0, 1, 1}});
  const auto s = SubspaceBasis::from_spanning_rows(rows);
  const auto w = s.membership(rows.row(1));
  REQUIRE(w.has_value());
  CHECK((*w)[0] == 0);
  CHECK((*w)[1] == 1);
}

TEST_CASE("membership: vector outside the span is reported absent") {
  const auto s = SubspaceBasis::from_spanning_rows(from_rows({{1, 0, 0}}));
  std::vector<Rational> v{0, 1, 0};
  CHECK_FALSE(s.membership(v).has_value());
  CHECK_FALSE(s.contains(v));
}

TEST_CASE("membership witnesses reconstruct the vector exactly") {
  SplitMix64 rng(99);
  for (int t = 0; t < 25; ++t) {
    const std::size_t rows = 1 + rng.below(5), cols = 1 + rng.below(7);
    const RationalMatrix m = random_matrix(rng, rows, cols);
    const auto s = SubspaceBasis::from_spanning_rows(m);

    // random combination of the spanning rows lies in the span
    std::vector<Rational> v(cols, Rational(0));
    for (std::size_t i = 0; i < rows; ++i) {
      const Rational c(rng.int_in(-3, 3));
      for (std::size_t j = 0; j < cols; ++j) v[j] += c * m.at(i, j);
    }
    const auto w = s.membership(v);
    REQUIRE(w.has_value());
    std::vector<Rational> rebuilt(cols, Rational(0));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) rebuilt[j] += (*w)[i] * m.at(i, j);
    CHECK(rebuilt == v);
  }
}

TEST_CASE("membership rejects vectors of the wrong length") {
  const auto s = SubspaceBasis::from_spanning_rows(from_rows({{1, 0}}));
  std::vector<Rational> v{1, 0, 0};
  CHECK_THROWS_AS((void)s.membership(v), std::invalid_argument);
}

TEST_CASE("subspace basis rows are in reduced row echelon form") {
  SplitMix64 rng(123);
  for (int t = 0; t < 10; ++t) {
    const RationalMatrix m = random_matrix(rng, 2 + rng.below(4), 2 + rng.below(6));
    const auto s = SubspaceBasis::from_spanning_rows(m);
    const RrefResult again = rref(s.basis_rows());
    CHECK(again.matrix == s.basis_rows());
    CHECK(s.pivot_cols().size() == s.rank());
    for (std::size_t i = 1; i < s.pivot_cols().size(); ++i)
      CHECK(s.pivot_cols()[i - 1] < s.pivot_cols()[i]);
    for (std::size_t i = 0; i < s.rank(); ++i) CHECK(s.basis_rows().at(i, s.pivot_cols()[i]) == 1);
  }
}

TEST_CASE("rational parsing accepts p and p/q, rejects junk") {
  CHECK(Q("3/4") == Rational(3, 4));
  CHECK(Q("-6/8") == Rational(-3, 4));
  CHECK(Q("7") == 7);
  CHECK(to_string(Q("-6/8")) == "-3/4");
  CHECK_THROWS_AS(Q("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Q("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Q("x"), std::invalid_argument);
  CHECK_THROWS_AS(Q("3/-4"), std::invalid_argument);
  CHECK_THROWS_AS(Q(""), std::invalid_argument);
}
