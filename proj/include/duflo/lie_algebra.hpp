#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "duflo/matrix.hpp"
#include "duflo/rational.hpp"

namespace duflo {

/// A finite-dimensional Lie algebra presented by structure constants
/// [x_i, x_j] = sum_k c_ij^k x_k over the rationals.
///
/// Brackets are stored only for i < j; i > j is derived by antisymmetry and
/// i = j is forced zero, so antisymmetry holds by representation. Immutable
/// after construction and safe to share across threads.
class StructureConstants {
 public:
  using Term = std::pair<std::uint32_t, Rational>;  // (basis index k, c_ij^k)
  using Combination = std::vector<Term>;            // sorted by index, nonzero coeffs
  using BracketMap = std::map<std::pair<std::uint32_t, std::uint32_t>, Combination>;

  StructureConstants(std::string name, std::vector<std::string> basis_names,
                     BracketMap brackets)
      : name_(std::move(name)),
        basis_names_(std::move(basis_names)),
        brackets_(std::move(brackets)) {
    const std::size_t n = basis_names_.size();
    if (n == 0) throw std::invalid_argument("algebra dimension must be positive");
    if (n > 64) throw std::invalid_argument("algebra dimension too large (max 64)");
    std::set<std::string> seen;
    for (const auto& b : basis_names_)
      if (b.empty() || !seen.insert(b).second)
        throw std::invalid_argument("basis names must be nonempty and distinct");
    for (auto it = brackets_.begin(); it != brackets_.end();) {
      const auto [i, j] = it->first;
      if (!(i < j) || j >= n)
        throw std::invalid_argument("bracket keys must satisfy i < j < dim");
      normalize(it->second, static_cast<std::uint32_t>(n));
      it = it->second.empty() ? brackets_.erase(it) : std::next(it);
    }
  }

  std::uint32_t dim() const { return static_cast<std::uint32_t>(basis_names_.size()); }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& basis_names() const { return basis_names_; }
  const std::string& basis_name(std::uint32_t i) const { return basis_names_.at(i); }
  const BracketMap& stored_brackets() const { return brackets_; }

  /// [x_i, x_j] for arbitrary i, j (sign handled, diagonal zero).
  Combination bracket(std::uint32_t i, std::uint32_t j) const {
    if (i >= dim() || j >= dim()) throw std::out_of_range("bracket: index out of range");
    if (i == j) return {};
    if (i < j) {
      auto it = brackets_.find({i, j});
      return it == brackets_.end() ? Combination{} : it->second;
    }
    Combination c = bracket(j, i);
    for (auto& [k, q] : c) q = -q;
    return c;
  }

  /// sum_k c_k [x_k, x_j] for a linear combination c.
  Combination bracket_of_combination(const Combination& c, std::uint32_t j) const {
    std::map<std::uint32_t, Rational> acc;
    for (const auto& [k, q] : c)
      for (const auto& [m, r] : bracket(k, j)) acc[m] += q * r;
    Combination out;
    for (auto& [m, q] : acc)
      if (q != 0) out.emplace_back(m, std::move(q));
    return out;
  }

 private:
  static void normalize(Combination& c, std::uint32_t n) {
    for (const auto& [k, q] : c) {
      (void)q;
      if (k >= n) throw std::invalid_argument("bracket coefficient index out of range");
    }
    std::map<std::uint32_t, Rational> acc;
    for (auto& [k, q] : c) acc[k] += q;
    c.clear();
    for (auto& [k, q] : acc)
      if (q != 0) c.emplace_back(k, std::move(q));
  }

  std::string name_;
  std::vector<std::string> basis_names_;
  BracketMap brackets_;
};

struct JacobiViolation {
  std::uint32_t i = 0, j = 0, l = 0, m = 0;
};

struct ValidationReport {
  bool antisymmetry_ok = true;  // holds by representation; reported for completeness
  bool jacobi_ok = true;
  std::optional<JacobiViolation> violation;
  bool ok() const { return antisymmetry_ok && jacobi_ok; }
};

/// Checks the Lie-algebra axioms. Failures are reported, not thrown; the
/// first violating index tuple (i, j, l, m) is included on Jacobi failure.
inline ValidationReport validate(const StructureConstants& sc) {
  ValidationReport rep;
  const std::uint32_t n = sc.dim();
  for (std::uint32_t i = 0; i + 2 < n + 0u; ++i)
    for (std::uint32_t j = i + 1; j + 1 < n; ++j)
      for (std::uint32_t l = j + 1; l < n; ++l) {
        std::map<std::uint32_t, Rational> acc;
        const auto add = [&acc](const StructureConstants::Combination& c) {
          for (const auto& [m, q] : c) acc[m] += q;
        };
        add(sc.bracket_of_combination(sc.bracket(i, j), l));
        add(sc.bracket_of_combination(sc.bracket(j, l), i));
        add(sc.bracket_of_combination(sc.bracket(l, i), j));
        for (const auto& [m, q] : acc)
          if (q != 0) {
            rep.jacobi_ok = false;
            rep.violation = JacobiViolation{i, j, l, m};
            return rep;
          }
      }
  return rep;
}

/// Matrix of ad x_i in the given basis: column j holds the coordinates of
/// [x_i, x_j].
inline RationalMatrix ad_matrix(const StructureConstants& sc, std::uint32_t i) {
  if (i >= sc.dim()) throw std::out_of_range("ad_matrix: generator index out of range");
  const std::uint32_t n = sc.dim();
  RationalMatrix m(n, n);
  for (std::uint32_t j = 0; j < n; ++j)
    for (const auto& [k, q] : sc.bracket(i, j)) m.at(k, j) = q;
  return m;
}

inline std::vector<std::string> dual_basis_names(const StructureConstants& sc) {
  std::vector<std::string> out;
  out.reserve(sc.dim());
  for (const auto& b : sc.basis_names()) out.push_back(b + "*");
  return out;
}

// ---------------------------------------------------------------------------
// Catalog

inline StructureConstants abelian(unsigned n) {
  if (n == 0 || n > 16) throw std::invalid_argument("abelian(n): need 1 <= n <= 16");
  std::vector<std::string> names;
  for (unsigned i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return StructureConstants("abelian(" + std::to_string(n) + ")", std::move(names), {});
}

/// [x, y] = z, z central.
inline StructureConstants heisenberg3() {
  StructureConstants::BracketMap b;
  b[{0, 1}] = {{2, Rational(1)}};
  return StructureConstants("heisenberg3", {"x", "y", "z"}, std::move(b));
}

/// [x, y] = y.
inline StructureConstants aff1() {
  StructureConstants::BracketMap b;
  b[{0, 1}] = {{1, Rational(1)}};
  return StructureConstants("aff1", {"x", "y"}, std::move(b));
}

/// Basis order e < h < f with [h,e] = 2e, [h,f] = -2f, [e,f] = h.
inline StructureConstants sl2() {
  StructureConstants::BracketMap b;
  b[{0, 1}] = {{0, Rational(-2)}};  // [e,h] = -2e
  b[{0, 2}] = {{1, Rational(1)}};   // [e,f] = h
  b[{1, 2}] = {{2, Rational(-2)}};  // [h,f] = -2f
  return StructureConstants("sl2", {"e", "h", "f"}, std::move(b));
}

/// Matrix units E_ab with [E_ab, E_cd] = d_bc E_ad - d_da E_cb, basis in
/// row-major (a, b) order.
inline StructureConstants gl(unsigned n) {
  if (n == 0 || n > 3) throw std::invalid_argument("gl(n): need 1 <= n <= 3");
  const auto idx = [n](unsigned a, unsigned b) { return static_cast<std::uint32_t>(a * n + b); };
  std::vector<std::string> names;
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      names.push_back("E" + std::to_string(a + 1) + std::to_string(b + 1));
  StructureConstants::BracketMap br;
  const std::uint32_t dim = n * n;
  for (std::uint32_t p = 0; p < dim; ++p)
    for (std::uint32_t q = p + 1; q < dim; ++q) {
      const unsigned a = p / n, b = p % n, c = q / n, d = q % n;
      std::map<std::uint32_t, Rational> acc;
      if (b == c) acc[idx(a, d)] += 1;
      if (d == a) acc[idx(c, b)] -= 1;
      StructureConstants::Combination comb;
      for (auto& [k, v] : acc)
        if (v != 0) comb.emplace_back(k, std::move(v));
      if (!comb.empty()) br[{p, q}] = std::move(comb);
    }
  return StructureConstants("gl(" + std::to_string(n) + ")", std::move(names), std::move(br));
}

/// Block-diagonal bracket on the concatenated bases. Name collisions on the
/// right summand are resolved with a numeric suffix.
inline StructureConstants direct_sum(const StructureConstants& a, const StructureConstants& b) {
  std::vector<std::string> names = a.basis_names();
  std::set<std::string> used(names.begin(), names.end());
  for (const auto& nm : b.basis_names()) {
    std::string candidate = nm;
    for (unsigned suffix = 2; !used.insert(candidate).second; ++suffix)
      candidate = nm + "_" + std::to_string(suffix);
    names.push_back(candidate);
  }
  StructureConstants::BracketMap br = a.stored_brackets();
  const std::uint32_t off = a.dim();
  for (const auto& [key, comb] : b.stored_brackets()) {
    StructureConstants::Combination shifted;
    for (const auto& [k, q] : comb) shifted.emplace_back(k + off, q);
    br[{key.first + off, key.second + off}] = std::move(shifted);
  }
  return StructureConstants("direct_sum(" + a.name() + "," + b.name() + ")", std::move(names),
                            std::move(br));
}

namespace detail {

struct CatalogParser {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    return std::string(s.substr(start, pos - start));
  }
  unsigned integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("catalog: expected integer");
    return static_cast<unsigned>(std::stoul(std::string(s.substr(start, pos - start))));
  }

  StructureConstants parse() {
    StructureConstants out = parse_spec();
    skip_ws();
    if (pos != s.size()) throw std::invalid_argument("catalog: trailing input");
    return out;
  }

  StructureConstants parse_spec() {
    const std::string id = ident();
    if (id == "heisenberg3") return heisenberg3();
    if (id == "aff1") return aff1();
    if (id == "sl2") return sl2();
    if (id == "gl1") return gl(1);
    if (id == "gl2") return gl(2);
    if (id == "gl3") return gl(3);
    if (id == "abelian" || id == "gl") {
      if (!eat('(')) throw std::invalid_argument("catalog: expected '(' after " + id);
      const unsigned n = integer();
      if (!eat(')')) throw std::invalid_argument("catalog: expected ')'");
      return id == "abelian" ? abelian(n) : gl(n);
    }
    if (id == "direct_sum") {
      if (!eat('(')) throw std::invalid_argument("catalog: expected '(' after direct_sum");
      StructureConstants a = parse_spec();
      if (!eat(',')) throw std::invalid_argument("catalog: expected ','");
      StructureConstants b = parse_spec();
      if (!eat(')')) throw std::invalid_argument("catalog: expected ')'");
      return direct_sum(a, b);
    }
    throw std::invalid_argument("unknown catalog algebra: '" + id + "'");
  }
};

}  // namespace detail

/// Parses catalog names such as "sl2", "abelian(3)", "gl(2)" (also "gl2"),
/// and nested "direct_sum(sl2,abelian(1))".
inline StructureConstants catalog_lookup(std::string_view name) {
  detail::CatalogParser p{name};
  return p.parse();
}

inline const std::vector<std::string>& catalog_patterns() {
  static const std::vector<std::string> v = {
      "abelian(n)        n = 1..16",
      "heisenberg3",
      "aff1",
      "sl2",
      "gl(n)             n = 1..3 (aliases gl1, gl2, gl3)",
      "direct_sum(a,b)   nested catalog names",
  };
  return v;
}

}  // namespace duflo
