#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "duflo/enveloping.hpp"
#include "duflo/poisson.hpp"
#include "duflo/subspaces.hpp"

namespace duflo {

/// Coefficients a_2k of (1/2) Log((e^{x/2} - e^{-x/2})/x) = sum a_2k x^{2k},
/// keyed by 2k, for 2k <= max_order. Odd coefficients vanish (the series is
/// even); a_2 = 1/48, a_4 = -1/5760.
///
/// Computed exactly from the expansion (e^{x/2} - e^{-x/2})/x =
/// sum_m x^{2m} / (4^m (2m+1)!) via the logarithmic derivative recurrence
/// g L' = g'.
inline std::map<unsigned, Rational> duflo_alpha_coefficients(unsigned max_order) {
  std::map<unsigned, Rational> alpha;
  if (max_order < 2) return alpha;
  const unsigned m_max = max_order / 2;
  std::vector<Rational> g(m_max + 1), log_g(m_max + 1, Rational(0));
  for (unsigned m = 0; m <= m_max; ++m) {
    mpz_class p4;
    mpz_ui_pow_ui(p4.get_mpz_t(), 4, m);
    g[m] = Rational(1) / (Rational(p4) * factorial(2 * m + 1));
  }
  for (unsigned m = 1; m <= m_max; ++m) {
    Rational s = Rational(2 * m) * g[m];
    for (unsigned b = 1; b < m; ++b) s -= Rational(2 * b) * log_g[b] * g[m - b];
    log_g[m] = s / Rational(2 * m);
    alpha[2 * m] = log_g[m] / 2;
  }
  return alpha;
}

/// The invariant element Tr_k of S^k(g*): the polynomial g -> tr((ad g)^k),
/// expanded symbolically as the trace of the k-th power of the matrix
/// sum_i t_i (ad x_i) with entries linear in the dual variables t_i.
inline DualPolynomial trace_element(const StructureConstants& sc, unsigned k) {
  if (k == 0) throw std::invalid_argument("trace_element: k must be >= 1");
  const std::uint32_t n = sc.dim();
  std::vector<std::vector<DualPolynomial>> m(n, std::vector<DualPolynomial>(n, DualPolynomial(n)));
  for (std::uint32_t i = 0; i < n; ++i) {
    const RationalMatrix ad = ad_matrix(sc, i);
    for (std::uint32_t r = 0; r < n; ++r)
      for (std::uint32_t c = 0; c < n; ++c)
        if (ad.at(r, c) != 0) {
          Monomial mono(n, 0);
          mono[i] = 1;
          m[r][c].add_term(std::move(mono), ad.at(r, c));
        }
  }
  auto power = m;
  for (unsigned step = 2; step <= k; ++step) {
    std::vector<std::vector<DualPolynomial>> next(n, std::vector<DualPolynomial>(n, DualPolynomial(n)));
    for (std::uint32_t r = 0; r < n; ++r)
      for (std::uint32_t l = 0; l < n; ++l) {
        if (power[r][l].is_zero()) continue;
        for (std::uint32_t c = 0; c < n; ++c)
          if (!m[l][c].is_zero()) next[r][c] += power[r][l] * m[l][c];
      }
    power = std::move(next);
  }
  DualPolynomial tr(n);
  for (std::uint32_t r = 0; r < n; ++r) tr += power[r][r];
  return tr;
}

enum class StarFlavor { gutt, duflo };

enum class Containment { g_span, full_span, none };

inline const char* to_cstr(Containment c) {
  switch (c) {
    case Containment::g_span: return "g-span";
    case Containment::full_span: return "S-span";
    default: return "none";
  }
}

/// One graded component of a defect c(a, b), with the membership outcome and
/// the witness over the retained spanning set (nonzero entries only).
struct BracketWitness {
  unsigned degree = 0;
  Containment containment = Containment::none;
  SymPolynomial component;
  std::vector<std::size_t> generator_indices;
  std::vector<std::pair<std::string, Rational>> witness;  // (label, coefficient)
};

struct DefectResult {
  SymPolynomial defect;
  std::vector<BracketWitness> components;
  Containment overall = Containment::g_span;

  bool all_g_span() const { return overall == Containment::g_span; }
};

/// The Duflo pipeline for one algebra: series coefficients, trace operators,
/// the strange map exp(sum a_2k Tr_2k) and its inverse, the Duflo map
/// phi_D = phi_PBW o phi_strange, the transported star products on S(g), and
/// defect extraction with bracket-span witnesses.
///
/// All heavyweight intermediates (trace elements, symmetrization tables,
/// graded subspaces) are cached per instance; methods are logically const.
/// Use one engine per thread, or share read-only after warm-up.
class DufloEngine {
 public:
  explicit DufloEngine(StructureConstants sc) : sc_(std::move(sc)), env_(sc_) {}

  const StructureConstants& algebra() const { return sc_; }
  const EnvAlgebra& env() const { return env_; }
  unsigned dim() const { return sc_.dim(); }

  const DualPolynomial& trace(unsigned k) const {
    auto it = traces_.find(k);
    if (it == traces_.end()) it = traces_.emplace(k, trace_element(sc_, k)).first;
    return it->second;
  }

  Rational alpha(unsigned two_k) const {
    if (two_k > alpha_order_) {
      alpha_ = duflo_alpha_coefficients(two_k);
      alpha_order_ = two_k;
    }
    auto it = alpha_.find(two_k);
    return it == alpha_.end() ? Rational(0) : it->second;
  }

  /// phi_strange = exp(sum_{k>=1} a_2k Tr_2k). The exponential truncates by
  /// itself: each Tr_2k lowers degree by 2k.
  SymPolynomial strange_map(const SymPolynomial& f) const { return strange_exp(f, +1); }
  SymPolynomial strange_inverse(const SymPolynomial& f) const { return strange_exp(f, -1); }

  /// phi_D = phi_PBW o phi_strange; a linear bijection and a g-module map.
  EnvElement duflo_map(const SymPolynomial& f) const {
    return env_.pbw_symmetrize(strange_map(f));
  }
  SymPolynomial duflo_inverse(const EnvElement& u) const {
    return strange_inverse(env_.pbw_inverse(u));
  }

  /// Transported product T^{-1}(T(a) T(b)) with T = phi_PBW (gutt flavor) or
  /// T = phi_D (duflo flavor). Associative with unit 1; the top-degree part
  /// equals the commutative product a b.
  SymPolynomial star_product(const SymPolynomial& a, const SymPolynomial& b,
                             StarFlavor flavor) const {
    if (flavor == StarFlavor::gutt)
      return env_.pbw_inverse(env_.product(env_.pbw_symmetrize(a), env_.pbw_symmetrize(b)));
    return duflo_inverse(env_.product(duflo_map(a), duflo_map(b)));
  }

  bool is_invariant(const SymPolynomial& f) const { return duflo::is_invariant(sc_, f); }

  const GradedSubspace& invariants(unsigned k) const {
    auto it = inv_.find(k);
    if (it == inv_.end()) it = inv_.emplace(k, invariants_basis(sc_, k)).first;
    return it->second;
  }
  const GradedSubspace& g_span(unsigned k) const {
    auto it = gspan_.find(k);
    if (it == gspan_.end()) it = gspan_.emplace(k, bracket_span(sc_, k, SpanFlavor::g_bracket)).first;
    return it->second;
  }
  const GradedSubspace& full_span(unsigned k) const {
    auto it = fullspan_.find(k);
    if (it == fullspan_.end())
      it = fullspan_.emplace(k, bracket_span(sc_, k, SpanFlavor::full_bracket)).first;
    return it->second;
  }

  /// Coinvariant class of an arbitrary polynomial, reduced degree by degree.
  SymPolynomial coinvariant_class(const SymPolynomial& f) const {
    SymPolynomial out(dim());
    for (const auto& [k, comp] : f.homogeneous_components())
      out += coinvariant_projection(g_span(k), comp);
    return out;
  }

  /// The defect c with a star b = a b + c for invariant a (checked), split
  /// into graded components, each with a membership witness over the
  /// {x_i, monomial} spanning set; falls back to the full {S,S} span and
  /// reports which containment held.
  DefectResult extract_c(const SymPolynomial& a, const SymPolynomial& b) const {
    if (!is_invariant(a))
      throw std::invalid_argument("extract_c: first argument must be g-invariant");
    DefectResult res;
    res.defect = star_product(a, b, StarFlavor::duflo) - a * b;
    for (const auto& [k, comp] : res.defect.homogeneous_components()) {
      BracketWitness bw;
      bw.degree = k;
      bw.component = comp;
      const GradedSubspace& gs = g_span(k);
      const auto v = gs.coordinates(comp);
      if (auto w = gs.basis.membership(v)) {
        bw.containment = Containment::g_span;
        fill_witness(bw, gs, *w);
      } else {
        const GradedSubspace& fs = full_span(k);
        if (auto wf = fs.basis.membership(fs.coordinates(comp))) {
          bw.containment = Containment::full_span;
          fill_witness(bw, fs, *wf);
        } else {
          bw.containment = Containment::none;
        }
      }
      if (static_cast<int>(bw.containment) > static_cast<int>(res.overall))
        res.overall = bw.containment;
      res.components.push_back(std::move(bw));
    }
    return res;
  }

 private:
  static void fill_witness(BracketWitness& bw, const GradedSubspace& gs,
                           const std::vector<Rational>& w) {
    for (std::size_t q = 0; q < w.size(); ++q)
      if (w[q] != 0) {
        bw.generator_indices.push_back(q);
        bw.witness.emplace_back(gs.labels[q], w[q]);
      }
  }

  SymPolynomial strange_exp(const SymPolynomial& f, int sign) const {
    if (f.is_zero()) return f;
    SymPolynomial total = f;
    SymPolynomial cur = f;
    Rational m_factorial(1);
    for (unsigned m = 1;; ++m) {
      SymPolynomial next(sc_.dim());
      const unsigned d = cur.total_degree();
      for (unsigned two_k = 2; two_k <= d; two_k += 2) {
        Rational a = alpha(two_k);
        if (sign < 0) a = -a;
        const DualPolynomial& tr = trace(two_k);
        if (tr.is_zero()) continue;
        next += apply_operator(tr, cur) * a;
      }
      if (next.is_zero()) break;
      cur = std::move(next);
      m_factorial *= Rational(m);
      total += cur * (Rational(1) / m_factorial);
    }
    return total;
  }

  StructureConstants sc_;
  EnvAlgebra env_;
  mutable std::map<unsigned, DualPolynomial> traces_;
  mutable std::map<unsigned, Rational> alpha_;
  mutable unsigned alpha_order_ = 0;
  mutable std::map<unsigned, GradedSubspace> inv_, gspan_, fullspan_;
};

}  // namespace duflo
