#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "duflo/rational.hpp"

namespace duflo {

/// Exponent vector over a fixed basis; length = algebra dimension.
using Monomial = std::vector<std::uint32_t>;

inline unsigned monomial_degree(const Monomial& m) {
  unsigned d = 0;
  for (std::uint32_t e : m) d += e;
  return d;
}

/// Graded-lexicographic term order: total degree first, then lexicographic on
/// the index word (equivalently, descending lex on exponent vectors), so that
/// within S^2 of sl2 the order is e^2, eh, ef, h^2, hf, f^2.
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const unsigned da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da < db;
    const std::size_t n = a.size() < b.size() ? a.size() : b.size();
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != b[i]) return a[i] > b[i];
    return a.size() < b.size();
  }
};

/// Sparse polynomial with exact rational coefficients and no stored zeros.
/// The Tag separates S(g) from S(g*) at the type level; the arithmetic is
/// identical.
template <class Tag>
class BasicPolynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLexLess>;

  explicit BasicPolynomial(unsigned nvars = 0) : nvars_(nvars) {}

  static BasicPolynomial constant(unsigned nvars, Rational c) {
    BasicPolynomial p(nvars);
    p.add_term(Monomial(nvars, 0), std::move(c));
    return p;
  }
  static BasicPolynomial one(unsigned nvars) { return constant(nvars, 1); }
  static BasicPolynomial variable(unsigned nvars, std::uint32_t i) {
    if (i >= nvars) throw std::out_of_range("variable index out of range");
    Monomial m(nvars, 0);
    m[i] = 1;
    BasicPolynomial p(nvars);
    p.add_term(std::move(m), 1);
    return p;
  }
  static BasicPolynomial monomial(Monomial m, Rational c) {
    BasicPolynomial p(static_cast<unsigned>(m.size()));
    p.add_term(std::move(m), std::move(c));
    return p;
  }

  unsigned nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  Rational coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Total degree; 0 for the zero polynomial.
  unsigned total_degree() const {
    return terms_.empty() ? 0 : monomial_degree(terms_.rbegin()->first);
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    return monomial_degree(terms_.begin()->first) == monomial_degree(terms_.rbegin()->first);
  }

  void add_term(Monomial m, Rational c) {
    if (m.size() != nvars_) throw std::invalid_argument("add_term: exponent length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), std::move(c));
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BasicPolynomial& operator+=(const BasicPolynomial& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  BasicPolynomial& operator-=(const BasicPolynomial& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  BasicPolynomial operator+(const BasicPolynomial& o) const {
    BasicPolynomial r = *this;
    r += o;
    return r;
  }
  BasicPolynomial operator-(const BasicPolynomial& o) const {
    BasicPolynomial r = *this;
    r -= o;
    return r;
  }
  BasicPolynomial operator-() const { return *this * Rational(-1); }

  BasicPolynomial operator*(const Rational& q) const {
    BasicPolynomial r(nvars_);
    if (q == 0) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * q);
    return r;
  }

  /// Commutative product by exponent convolution.
  BasicPolynomial operator*(const BasicPolynomial& o) const {
    check_same(o);
    BasicPolynomial r(nvars_);
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_) {
        Monomial m(nvars_);
        for (unsigned i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
        r.add_term(std::move(m), ca * cb);
      }
    return r;
  }

  BasicPolynomial pow(unsigned e) const {
    BasicPolynomial r = one(nvars_);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  BasicPolynomial derivative(std::uint32_t i) const {
    if (i >= nvars_) throw std::out_of_range("derivative: variable index out of range");
    BasicPolynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
      if (m[i] == 0) continue;
      Monomial d = m;
      --d[i];
      r.add_term(std::move(d), c * Rational(m[i]));
    }
    return r;
  }

  BasicPolynomial homogeneous_component(unsigned k) const {
    BasicPolynomial r(nvars_);
    for (const auto& [m, c] : terms_)
      if (monomial_degree(m) == k) r.terms_.emplace(m, c);
    return r;
  }

  std::map<unsigned, BasicPolynomial> homogeneous_components() const {
    std::map<unsigned, BasicPolynomial> out;
    for (const auto& [m, c] : terms_) {
      auto [it, _] = out.try_emplace(monomial_degree(m), BasicPolynomial(nvars_));
      it->second.terms_.emplace(m, c);
    }
    return out;
  }

  bool operator==(const BasicPolynomial& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const BasicPolynomial& o) const { return !(*this == o); }

  std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      const bool neg = c < 0;
      const Rational a = neg ? Rational(-c) : c;
      os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
      first = false;
      std::string mono = monomial_string(m, names);
      if (mono.empty())
        os << duflo::to_string(a);
      else if (a == 1)
        os << mono;
      else
        os << duflo::to_string(a) << "*" << mono;
    }
    return os.str();
  }

  static std::string monomial_string(const Monomial& m, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += names.at(i);
      if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out;
  }

 private:
  void check_same(const BasicPolynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial dimension mismatch");
  }

  unsigned nvars_;
  TermMap terms_;
};

struct PrimalBasisTag {};
struct DualBasisTag {};

/// An element of S(g).
using SymPolynomial = BasicPolynomial<PrimalBasisTag>;
/// An element of S(g*), acting on S(g) as a constant-coefficient differential
/// operator.
using DualPolynomial = BasicPolynomial<DualBasisTag>;

/// Each dual monomial prod (x_i*)^{a_i} acts as prod (d/dx_i)^{a_i}; linear
/// in both arguments. Degrees higher than deg f act as zero.
inline SymPolynomial apply_operator(const DualPolynomial& op, const SymPolynomial& f) {
  if (op.nvars() != f.nvars()) throw std::invalid_argument("apply_operator: dimension mismatch");
  const unsigned n = f.nvars();
  SymPolynomial out(n);
  for (const auto& [a, ca] : op.terms())
    for (const auto& [m, cf] : f.terms()) {
      bool ok = true;
      for (unsigned i = 0; i < n && ok; ++i) ok = m[i] >= a[i];
      if (!ok) continue;
      Rational factor = ca * cf;
      Monomial r = m;
      for (unsigned i = 0; i < n; ++i)
        for (std::uint32_t t = 0; t < a[i]; ++t) {
          factor *= Rational(m[i] - t);
          --r[i];
        }
      out.add_term(std::move(r), std::move(factor));
    }
  return out;
}

/// All monomials of total degree k in graded-lex order (the canonical
/// coordinate basis of the degree-k component).
inline std::vector<Monomial> monomials_of_degree(unsigned nvars, unsigned k) {
  std::vector<Monomial> out;
  Monomial exps(nvars, 0);
  const std::function<void(unsigned, std::uint32_t)> rec = [&](unsigned left, std::uint32_t min_var) {
    if (left == 0) {
      out.push_back(exps);
      return;
    }
    for (std::uint32_t v = min_var; v < nvars; ++v) {
      ++exps[v];
      rec(left - 1, v);
      --exps[v];
    }
  };
  rec(k, 0);
  return out;
}

}  // namespace duflo
