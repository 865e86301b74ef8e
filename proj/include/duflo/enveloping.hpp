#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "duflo/lie_algebra.hpp"
#include "duflo/polynomial.hpp"

namespace duflo {

/// Sequence of generator indices, read as the product x_{w_1} ... x_{w_k}.
using Word = std::vector<std::uint32_t>;

struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

inline bool is_weakly_increasing(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i - 1] > w[i]) return false;
  return true;
}

inline Monomial word_to_monomial(const Word& w, unsigned nvars) {
  Monomial m(nvars, 0);
  for (std::uint32_t letter : w) ++m.at(letter);
  return m;
}

inline Word monomial_to_word(const Monomial& m) {
  Word w;
  for (std::uint32_t i = 0; i < m.size(); ++i)
    for (std::uint32_t t = 0; t < m[i]; ++t) w.push_back(i);
  return w;
}

/// Formal rational combination of arbitrary generator words; the pre-normal-
/// form carrier fed to normal_form.
class FreeWordExpression {
 public:
  explicit FreeWordExpression(unsigned dim = 0) : dim_(dim) {}

  static FreeWordExpression from_word(unsigned dim, Word w, Rational c = 1) {
    FreeWordExpression e(dim);
    e.add_term(std::move(w), std::move(c));
    return e;
  }

  unsigned dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Word, Rational, WordLess>& terms() const { return terms_; }

  void add_term(Word w, Rational c) {
    for (std::uint32_t letter : w)
      if (letter >= dim_) throw std::out_of_range("word letter out of range");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(w), std::move(c));
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

 private:
  unsigned dim_;
  std::map<Word, Rational, WordLess> terms_;
};

/// An element of U(g) in PBW normal form: every stored word is weakly
/// increasing, no zero coefficients.
class EnvElement {
 public:
  explicit EnvElement(unsigned dim = 0) : dim_(dim) {}

  static EnvElement unit(unsigned dim) {
    EnvElement e(dim);
    e.terms_.emplace(Word{}, Rational(1));
    return e;
  }
  static EnvElement generator(unsigned dim, std::uint32_t i) {
    if (i >= dim) throw std::out_of_range("generator index out of range");
    EnvElement e(dim);
    e.terms_.emplace(Word{i}, Rational(1));
    return e;
  }
  static EnvElement from_terms(unsigned dim, const std::vector<std::pair<Word, Rational>>& terms) {
    EnvElement e(dim);
    for (const auto& [w, c] : terms) {
      if (!is_weakly_increasing(w))
        throw std::invalid_argument("EnvElement: word is not weakly increasing");
      e.add_term(w, c);
    }
    return e;
  }

  unsigned dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Word, Rational, WordLess>& terms() const { return terms_; }

  Rational coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(Word w, Rational c) {
    assert(is_weakly_increasing(w));
    for (std::uint32_t letter : w)
      if (letter >= dim_) throw std::out_of_range("word letter out of range");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(w), std::move(c));
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add_scaled(const EnvElement& o, const Rational& q) {
    if (q == 0) return;
    for (const auto& [w, c] : o.terms_) {
      auto [it, inserted] = terms_.try_emplace(w, c * q);
      if (!inserted) {
        it->second += c * q;
        if (it->second == 0) terms_.erase(it);
      }
    }
  }

  EnvElement& operator+=(const EnvElement& o) {
    add_scaled(o, 1);
    return *this;
  }
  EnvElement& operator-=(const EnvElement& o) {
    add_scaled(o, -1);
    return *this;
  }
  EnvElement operator+(const EnvElement& o) const {
    EnvElement r = *this;
    r += o;
    return r;
  }
  EnvElement operator-(const EnvElement& o) const {
    EnvElement r = *this;
    r -= o;
    return r;
  }
  EnvElement operator*(const Rational& q) const {
    EnvElement r(dim_);
    if (q == 0) return r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, c * q);
    return r;
  }

  bool operator==(const EnvElement& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }
  bool operator!=(const EnvElement& o) const { return !(*this == o); }

  /// Length of the longest word; 0 for the zero element.
  unsigned filtration_degree() const {
    return terms_.empty() ? 0 : static_cast<unsigned>(terms_.rbegin()->first.size());
  }

  /// The degree-d part of the associated-graded symbol: words of length d
  /// read as commutative monomials.
  SymPolynomial symbol_at(unsigned d) const {
    SymPolynomial out(dim_);
    for (auto it = terms_.rbegin(); it != terms_.rend() && it->first.size() >= d; ++it)
      if (it->first.size() == d) out.add_term(word_to_monomial(it->first, dim_), it->second);
    return out;
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      const bool neg = c < 0;
      const Rational a = neg ? Rational(-c) : c;
      out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
      first = false;
      std::string word;
      for (std::uint32_t letter : w) {
        if (!word.empty()) word += "*";
        word += names.at(letter);
      }
      if (word.empty())
        out += duflo::to_string(a);
      else if (a == 1)
        out += word;
      else
        out += duflo::to_string(a) + "*" + word;
    }
    return out;
  }

 private:
  unsigned dim_;
  std::map<Word, Rational, WordLess> terms_;
};

enum class RewriteStrategy { leftmost, rightmost };

/// U(g) on the PBW basis for a fixed algebra. Products and normal forms are
/// pure up to the internal straightening memo, which is append-only; results
/// never depend on call order. One instance per thread, or share after
/// warm-up; there is no internal locking.
class EnvAlgebra {
 public:
  explicit EnvAlgebra(StructureConstants sc) : sc_(std::move(sc)) {}

  const StructureConstants& algebra() const { return sc_; }
  unsigned dim() const { return sc_.dim(); }
  EnvElement unit() const { return EnvElement::unit(dim()); }

  /// Fast normal form: fold each word through generator straightening.
  EnvElement normal_form(const FreeWordExpression& expr) const {
    check_dim(expr.dim());
    EnvElement out(dim());
    for (const auto& [w, c] : expr.terms()) {
      EnvElement cur = EnvElement::unit(dim());
      for (std::uint32_t letter : w) cur = multiply_generator(cur, letter);
      out.add_scaled(cur, c);
    }
    return out;
  }

  /// Reference rewriter: repeatedly applies x_j x_i -> x_i x_j + [x_j, x_i]
  /// at the chosen inversion. Terminates because each step lexicographically
  /// decreases (word degree, inversion count); the result is independent of
  /// the strategy (confluence), which the test suite checks explicitly.
  EnvElement normal_form(const FreeWordExpression& expr, RewriteStrategy strategy) const {
    check_dim(expr.dim());
    std::map<Word, Rational, WordLess> work(expr.terms().begin(), expr.terms().end());
    EnvElement out(dim());
    while (!work.empty()) {
      auto node = work.extract(work.begin());
      const Word& w = node.key();
      const Rational& c = node.mapped();
      if (c == 0) continue;
      std::size_t p = w.size();  // inversion position, w.size() = none
      if (strategy == RewriteStrategy::leftmost) {
        for (std::size_t q = 0; q + 1 < w.size(); ++q)
          if (w[q] > w[q + 1]) {
            p = q;
            break;
          }
      } else {
        for (std::size_t q = w.size(); q-- > 1;)
          if (w[q - 1] > w[q]) {
            p = q - 1;
            break;
          }
      }
      if (p == w.size()) {
        out.add_term(w, c);
        continue;
      }
      Word swapped = w;
      std::swap(swapped[p], swapped[p + 1]);
      accumulate(work, std::move(swapped), c);
      for (const auto& [k, q] : sc_.bracket(w[p], w[p + 1])) {
        Word contracted;
        contracted.reserve(w.size() - 1);
        contracted.insert(contracted.end(), w.begin(), w.begin() + p);
        contracted.push_back(k);
        contracted.insert(contracted.end(), w.begin() + p + 2, w.end());
        accumulate(work, std::move(contracted), c * q);
      }
    }
    return out;
  }

  /// Right multiplication by a single generator, in normal form.
  EnvElement multiply_generator(const EnvElement& e, std::uint32_t j) const {
    check_dim(e.dim());
    EnvElement out(dim());
    for (const auto& [w, c] : e.terms()) out.add_scaled(straighten(w, j), c);
    return out;
  }

  /// Product in U(g): concatenate words bilinearly, then normal form.
  /// Associative with the empty word as unit.
  EnvElement product(const EnvElement& a, const EnvElement& b) const {
    check_dim(a.dim());
    check_dim(b.dim());
    EnvElement out(dim());
    for (const auto& [v, cv] : b.terms()) {
      EnvElement cur = a;
      for (std::uint32_t letter : v) cur = multiply_generator(cur, letter);
      out.add_scaled(cur, cv);
    }
    return out;
  }

  EnvElement commutator(const EnvElement& a, const EnvElement& b) const {
    return product(a, b) - product(b, a);
  }

  /// The g-module action x_i . u = x_i u - u x_i.
  EnvElement module_action(std::uint32_t i, const EnvElement& u) const {
    return commutator(EnvElement::generator(dim(), i), u);
  }

  /// PBW symmetrization: a degree-k monomial maps to the average of all its
  /// word orderings (distinct permutations with multinomial weights), in
  /// normal form. Linear; filtration degree <= k with top symbol the input.
  EnvElement pbw_symmetrize(const SymPolynomial& f) const {
    check_dim(f.nvars());
    EnvElement out(dim());
    for (const auto& [m, c] : f.terms()) out.add_scaled(sym_monomial(m), c);
    return out;
  }

  /// Inverse of pbw_symmetrize by filtration recursion: peel the top symbol,
  /// subtract its symmetrization, recurse on the strictly lower remainder.
  /// Always solvable (PBW theorem).
  SymPolynomial pbw_inverse(const EnvElement& u) const {
    check_dim(u.dim());
    SymPolynomial out(dim());
    EnvElement rem = u;
    while (!rem.is_zero()) {
      const unsigned d = rem.filtration_degree();
      const SymPolynomial symbol = rem.symbol_at(d);
      out += symbol;
      rem -= pbw_symmetrize(symbol);
      if (!rem.is_zero() && rem.filtration_degree() >= d)
        throw std::logic_error("pbw_inverse: filtration did not decrease");
    }
    return out;
  }

 private:
  struct WordHash {
    std::size_t operator()(const Word& w) const {
      std::size_t h = 1469598103934665603ull;
      for (std::uint32_t x : w) {
        h ^= x;
        h *= 1099511628211ull;
      }
      return h;
    }
  };

  void check_dim(unsigned d) const {
    if (d != dim()) throw std::invalid_argument("enveloping algebra: dimension mismatch");
  }

  static void accumulate(std::map<Word, Rational, WordLess>& work, Word w, Rational c) {
    if (c == 0) return;
    auto [it, inserted] = work.try_emplace(std::move(w), std::move(c));
    if (!inserted) it->second += c;
  }

  /// Normal form of (sorted word u) * x_j. Memoized on the concatenated word;
  /// references into the memo stay valid across inserts.
  const EnvElement& straighten(const Word& u, std::uint32_t j) const {
    Word key = u;
    key.push_back(j);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    EnvElement res(dim());
    if (u.empty() || u.back() <= j) {
      res.add_term(key, 1);
    } else {
      const std::uint32_t m = u.back();
      const Word head(u.begin(), u.end() - 1);
      // u x_j = (head x_j) x_m + head [x_m, x_j]
      const EnvElement& a = straighten(head, j);
      for (const auto& [w, c] : a.terms()) res.add_scaled(straighten(w, m), c);
      for (const auto& [k, q] : sc_.bracket(m, j)) res.add_scaled(straighten(head, k), q);
    }
    auto [it, inserted] = memo_.emplace(std::move(key), std::move(res));
    assert(inserted);
    return it->second;
  }

  const EnvElement& sym_monomial(const Monomial& m) const {
    if (auto it = sym_cache_.find(m); it != sym_cache_.end()) return it->second;
    const unsigned k = monomial_degree(m);
    EnvElement acc(dim());
    Monomial counts = m;
    // DFS over distinct orderings, sharing normalized prefixes.
    const std::function<void(const EnvElement&, unsigned)> dfs = [&](const EnvElement& prefix,
                                                                     unsigned left) {
      if (left == 0) {
        acc += prefix;
        return;
      }
      for (std::uint32_t v = 0; v < dim(); ++v) {
        if (counts[v] == 0) continue;
        --counts[v];
        dfs(multiply_generator(prefix, v), left - 1);
        ++counts[v];
      }
    };
    dfs(EnvElement::unit(dim()), k);
    Rational weight(1);
    for (std::uint32_t e : m) weight *= factorial(e);
    weight /= factorial(k);
    auto [it, _] = sym_cache_.emplace(m, acc * weight);
    return it->second;
  }

  StructureConstants sc_;
  mutable std::unordered_map<Word, EnvElement, WordHash> memo_;
  mutable std::map<Monomial, EnvElement, GradedLexLess> sym_cache_;
};

}  // namespace duflo
