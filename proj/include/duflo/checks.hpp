#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "duflo/duflo_map.hpp"
#include "duflo/json_io.hpp"
#include "duflo/random.hpp"

namespace duflo {

struct CheckSpec {
  std::string check_id;
  std::string algebra_label;
  unsigned max_degree = 6;
  std::uint64_t seed = 1;
};

enum class CheckStatus { pass, flag, fail };

inline const char* to_cstr(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::flag: return "flag";
    default: return "fail";
  }
}

/// Deterministic check outcome: identical (check_id, algebra, max_degree,
/// seed) always serializes to byte-identical JSON. Wall time is tracked but
/// deliberately kept out of the serialized report.
struct CheckReport {
  CheckSpec spec;
  CheckStatus status = CheckStatus::pass;
  std::size_t cases_pass = 0, cases_flag = 0, cases_fail = 0;
  std::size_t samples_per_cell = 0;
  std::string note;
  Json cases = Json::array();
  long long wall_ms = 0;

  Json to_json() const {
    Json j;
    j["check"] = spec.check_id;
    j["algebra"] = spec.algebra_label;
    j["max_degree"] = spec.max_degree;
    j["seed"] = spec.seed;
    j["status"] = to_cstr(status);
    j["counts"] = Json{{"pass", cases_pass},
                       {"flag", cases_flag},
                       {"fail", cases_fail},
                       {"total", cases_pass + cases_flag + cases_fail}};
    j["samples_per_cell"] = samples_per_cell;
    if (!note.empty()) j["note"] = note;
    j["cases"] = cases;
    return j;
  }
};

inline const std::vector<std::string>& known_check_ids() {
  static const std::vector<std::string> ids = {
      "jacobi",       "pbw-roundtrip",    "pbw-module-map", "star-assoc",
      "star-first-order", "duflo-hom",    "h0-compat",      "extract-c",
      "commutant",    "semisimple-decomp", "odd-traces",    "coinvariant-dims"};
  return ids;
}

namespace detail_checks {

inline void tally(CheckReport& rep, CheckStatus st) {
  if (st == CheckStatus::pass)
    ++rep.cases_pass;
  else if (st == CheckStatus::flag)
    ++rep.cases_flag;
  else
    ++rep.cases_fail;
}

/// Records a case; passing cases keep the report small unless record_pass.
inline void add_case(CheckReport& rep, CheckStatus st, Json c, bool record_pass = false) {
  tally(rep, st);
  if (st != CheckStatus::pass || record_pass) {
    c["status"] = to_cstr(st);
    rep.cases.push_back(std::move(c));
  }
}

inline Json witness_json(const BracketWitness& bw) {
  Json w = Json::array();
  for (const auto& [label, coeff] : bw.witness) w.push_back(Json::array({label, to_string(coeff)}));
  return w;
}

inline bool verify_witness(const DufloEngine& eng, const BracketWitness& bw) {
  const GradedSubspace& gs =
      bw.containment == Containment::g_span ? eng.g_span(bw.degree) : eng.full_span(bw.degree);
  SymPolynomial rebuilt(eng.dim());
  for (std::size_t t = 0; t < bw.generator_indices.size(); ++t)
    rebuilt += gs.generators[bw.generator_indices[t]] * bw.witness[t].second;
  return rebuilt == bw.component;
}

inline void check_jacobi(const DufloEngine& eng, CheckReport& rep) {
  const ValidationReport v = validate(eng.algebra());
  Json c;
  c["antisymmetry"] = v.antisymmetry_ok ? "pass" : "fail";
  c["jacobi"] = v.jacobi_ok ? "pass" : "fail";
  if (v.violation)
    c["violation"] = Json::array({v.violation->i, v.violation->j, v.violation->l, v.violation->m});
  add_case(rep, v.ok() ? CheckStatus::pass : CheckStatus::fail, std::move(c), true);
}

inline void check_pbw_roundtrip(const DufloEngine& eng, const CheckSpec& spec, CheckReport& rep) {
  rep.samples_per_cell = 50;
  SplitMix64 rng(spec.seed);
  const unsigned n = eng.dim();
  const EnvAlgebra& env = eng.env();
  for (unsigned d = 0; d <= spec.max_degree; ++d)
    for (unsigned s = 0; s < rep.samples_per_cell; ++s) {
      const SymPolynomial f = random_polynomial(rng, n, d, 3);
      const bool inv_ok = env.pbw_inverse(env.pbw_symmetrize(f)) == f;

      const EnvElement u = random_env_element(rng, n, d, 3);
      const bool sym_ok = env.pbw_symmetrize(env.pbw_inverse(u)) == u;

      const Word w = random_free_word(rng, n, d < 6 ? d : 6);
      const FreeWordExpression expr = FreeWordExpression::from_word(n, w);
      const EnvElement left = env.normal_form(expr, RewriteStrategy::leftmost);
      const EnvElement right = env.normal_form(expr, RewriteStrategy::rightmost);
      const bool confluent = left == right && left == env.normal_form(expr);

      if (inv_ok && sym_ok && confluent) {
        tally(rep, CheckStatus::pass);
      } else {
        Json c;
        c["degree"] = d;
        c["sample"] = s;
        c["roundtrip_poly"] = inv_ok;
        c["roundtrip_env"] = sym_ok;
        c["confluence"] = confluent;
        add_case(rep, CheckStatus::fail, std::move(c));
      }
    }
}

inline void check_pbw_module_map(const DufloEngine& eng, const CheckSpec& spec, CheckReport& rep) {
  rep.samples_per_cell = 50;
  SplitMix64 rng(spec.seed);
  const unsigned n = eng.dim();
  const EnvAlgebra& env = eng.env();
  for (unsigned d = 0; d <= spec.max_degree; ++d)
    for (unsigned s = 0; s < rep.samples_per_cell; ++s) {
      const SymPolynomial f = random_polynomial(rng, n, d, 3);
      const EnvElement image = env.pbw_symmetrize(f);
      bool ok = true;
      for (std::uint32_t i = 0; i < n && ok; ++i)
        ok = env.pbw_symmetrize(adjoint_action(eng.algebra(), i, f)) == env.module_action(i, image);
      if (ok) {
        tally(rep, CheckStatus::pass);
      } else {
        Json c;
        c["degree"] = d;
        c["sample"] = s;
        add_case(rep, CheckStatus::fail, std::move(c));
      }
    }
}

inline void check_star_assoc(const DufloEngine& eng, const CheckSpec& spec, CheckReport& rep) {
  rep.samples_per_cell = 50;
  SplitMix64 rng(spec.seed);
  const unsigned n = eng.dim();
  const unsigned dmax = spec.max_degree < 3 ? spec.max_degree : 3;
  for (unsigned d = 1; d <= dmax; ++d)
    for (unsigned s = 0; s < rep.samples_per_cell; ++s) {
      const auto factor = [&]() {
        return random_polynomial(rng, n, static_cast<unsigned>(rng.below(d + 1)), 1);
      };
      const SymPolynomial a = factor(), b = factor(), c = factor();
      for (StarFlavor fl : {StarFlavor::gutt, StarFlavor::duflo}) {
        const SymPolynomial lhs = eng.star_product(eng.star_product(a, b, fl), c, fl);
        const SymPolynomial rhs = eng.star_product(a, eng.star_product(b, c, fl), fl);
        if (lhs == rhs) {
          tally(rep, CheckStatus::pass);
        } else {
          Json cj;
          cj["degree"] = d;
          cj["sample"] = s;
          cj["flavor"] = fl == StarFlavor::gutt ? "gutt" : "duflo";
          add_case(rep, CheckStatus::fail, std::move(cj));
        }
      }
    }
}

inline void check_star_first_order(const DufloEngine& eng, const CheckSpec& spec,
                                   CheckReport& rep) {
  const unsigned n = eng.dim();
  const unsigned dmax = spec.max_degree < 3 ? spec.max_degree : 3;
  for (unsigned da = 1; da <= dmax; ++da)
    for (unsigned db = da; db <= dmax; ++db) {
      const auto left = monomials_of_degree(n, da);
      const auto right = (da == db) ? left : monomials_of_degree(n, db);
      for (std::size_t ia = 0; ia < left.size(); ++ia)
        for (std::size_t ib = (da == db ? ia : 0); ib < right.size(); ++ib) {
          const SymPolynomial a = SymPolynomial::monomial(left[ia], 1);
          const SymPolynomial b = SymPolynomial::monomial(right[ib], 1);
          const SymPolynomial pb = poisson_bracket(eng.algebra(), a, b);
          for (StarFlavor fl : {StarFlavor::gutt, StarFlavor::duflo}) {
            const SymPolynomial comm =
                eng.star_product(a, b, fl) - eng.star_product(b, a, fl);
            const bool ok = comm.homogeneous_component(da + db - 1) == pb;
            if (ok) {
              tally(rep, CheckStatus::pass);
            } else {
              Json c;
              c["a"] = poly_to_json(a);
              c["b"] = poly_to_json(b);
              c["flavor"] = fl == StarFlavor::gutt ? "gutt" : "duflo";
              add_case(rep, CheckStatus::fail, std::move(c));
            }
          }
        }
    }
}

inline void check_duflo_hom(const DufloEngine& eng, const CheckSpec& spec, CheckReport& rep) {
  const EnvAlgebra& env = eng.env();
  for (unsigned da = 1; da + 1 <= spec.max_degree; ++da)
    for (unsigned db = da; da + db <= spec.max_degree; ++db) {
      const GradedSubspace& ia = eng.invariants(da);
      const GradedSubspace& ib = eng.invariants(db);
      for (std::size_t p = 0; p < ia.generators.size(); ++p)
        for (std::size_t q = (da == db ? p : 0); q < ib.generators.size(); ++q) {
          const SymPolynomial& a = ia.generators[p];
          const SymPolynomial& b = ib.generators[q];
          const EnvElement lhs = env.product(eng.duflo_map(a), eng.duflo_map(b));
          const EnvElement rhs = eng.duflo_map(a * b);
          if (lhs == rhs) {
            tally(rep, CheckStatus::pass);
          } else {
            Json c;
            c["alpha"] = poly_to_json(a);
            c["beta"] = poly_to_json(b);
            add_case(rep, CheckStatus::fail, std::move(c));
          }
        }
    }
}

/// Shared grid for the H_0 / defect checks: every invariant basis element of
/// degree <= max as alpha, every monomial of degree <= max as beta.
inline void defect_grid(const DufloEngine& eng, const CheckSpec& spec,
                        const std::function<void(const SymPolynomial&, const SymPolynomial&)>& fn) {
  const unsigned n = eng.dim();
  for (unsigned da = 0; da <= spec.max_degree; ++da) {
    const GradedSubspace& inv = eng.invariants(da);
    for (const SymPolynomial& a : inv.generators)
      for (unsigned db = 0; db <= spec.max_degree; ++db)
        for (const Monomial& mb : monomials_of_degree(n, db))
          fn(a, SymPolynomial::monomial(mb, 1));
  }
}

inline Json defect_case_json(const SymPolynomial& a, const SymPolynomial& b,
                             const DefectResult& dr) {
  Json c;
  c["alpha"] = poly_to_json(a);
  c["beta"] = poly_to_json(b);
  c["c"] = poly_to_json(dr.defect);
  Json witness = Json::array();
  for (const auto& bw : dr.components)
    for (const auto& entry : witness_json(bw)) witness.push_back(entry);
  c["witness"] = witness;
  c["containment"] = to_cstr(dr.overall);
  return c;
}

inline void check_h0_compat(const DufloEngine& eng, const CheckSpec& spec, CheckReport& rep) {
  defect_grid(eng, spec, [&](const SymPolynomial& a, const SymPolynomial& b) {
    const DefectResult dr = eng.extract_c(a, b);
    bool witness_ok = true, class_ok = true;
    for (const auto& bw : dr.components) {
      if (bw.containment == Containment::none) continue;
      witness_ok = witness_ok && verify_witness(eng, bw);
      // H_0 statement: the classes of a*b (star) and a.b agree, i.e. every
      // defect component reduces to zero against the g-bracket span.
      class_ok = class_ok && coinvariant_projection(eng.g_span(bw.degree), bw.component).is_zero();
    }
    CheckStatus st = CheckStatus::pass;
    if (dr.overall == Containment::full_span) st = CheckStatus::flag;
    if (dr.overall == Containment::none || !witness_ok || !class_ok) st = CheckStatus::fail;
    Json c = defect_case_json(a, b, dr);
    if (!witness_ok) c["witness_reconstructs"] = false;
    if (!class_ok) c["classes_agree"] = false;
    add_case(rep, st, std::move(c), true);
  });
}

inline void check_extract_c(const DufloEngine& eng, const CheckSpec& spec, CheckReport& rep) {
  const EnvAlgebra& env = eng.env();
  defect_grid(eng, spec, [&](const SymPolynomial& a, const SymPolynomial& b) {
    const DefectResult dr = eng.extract_c(a, b);
    bool witness_ok = true;
    for (const auto& bw : dr.components)
      if (bw.containment != Containment::none) witness_ok = witness_ok && verify_witness(eng, bw);
    // Both sides of phi_D(a.b + c) = phi_D(a) * phi_D(b), through independent
    // code paths: commutative product plus forward map on the left, product
    // in U(g) of the forward images on the right.
    const EnvElement phi_ab = eng.duflo_map(a * b);
    const EnvElement rhs = env.product(eng.duflo_map(a), eng.duflo_map(b));
    const bool corollary_ok = phi_ab + eng.duflo_map(dr.defect) == rhs;
    // The same witness transported to U(g): every g-span generator {x_i, m}
    // maps to [x_i, phi_D(m)], so the defect of the images is an explicit
    // combination of module-action terms.
    bool transport_ok = true;
    if (dr.overall == Containment::g_span) {
      EnvElement transported(eng.dim());
      for (const auto& bw : dr.components) {
        const GradedSubspace& gs = eng.g_span(bw.degree);
        const std::size_t n_monos = gs.coords.size();
        for (std::size_t t = 0; t < bw.generator_indices.size(); ++t) {
          const std::size_t q = bw.generator_indices[t];
          const auto i = static_cast<std::uint32_t>(q / n_monos);
          const SymPolynomial mono = SymPolynomial::monomial(gs.coords[q % n_monos], 1);
          transported.add_scaled(env.module_action(i, eng.duflo_map(mono)), bw.witness[t].second);
        }
      }
      transport_ok = transported == rhs - phi_ab;
    }
    CheckStatus st = CheckStatus::pass;
    if (dr.overall == Containment::full_span) st = CheckStatus::flag;
    if (dr.overall == Containment::none || !witness_ok || !corollary_ok || !transport_ok)
      st = CheckStatus::fail;
    Json c = defect_case_json(a, b, dr);
    if (!witness_ok) c["witness_reconstructs"] = false;
    c["corollary_sides_agree"] = corollary_ok;
    c["witness_transports_to_env"] = transport_ok;
    add_case(rep, st, std::move(c), true);
  });
}

inline void check_commutant(const DufloEngine& eng, const CheckSpec& spec, CheckReport& rep) {
  const unsigned n = eng.dim();
  const unsigned dmax = spec.max_degree < 3 ? spec.max_degree : 3;
  for (unsigned da = 1; da <= dmax; ++da)
    for (unsigned db = da; db <= dmax; ++db) {
      const auto left = monomials_of_degree(n, da);
      const auto right = (da == db) ? left : monomials_of_degree(n, db);
      for (std::size_t ia = 0; ia < left.size(); ++ia)
        for (std::size_t ib = (da == db ? ia + 1 : 0); ib < right.size(); ++ib) {
          const SymPolynomial a = SymPolynomial::monomial(left[ia], 1);
          const SymPolynomial b = SymPolynomial::monomial(right[ib], 1);
          const SymPolynomial comm =
              eng.star_product(a, b, StarFlavor::duflo) - eng.star_product(b, a, StarFlavor::duflo);
          bool ok = true;
          unsigned bad_degree = 0;
          for (const auto& [k, comp] : comm.homogeneous_components()) {
            const GradedSubspace& fs = eng.full_span(k);
            if (!fs.basis.contains(fs.coordinates(comp))) {
              ok = false;
              bad_degree = k;
              break;
            }
          }
          if (ok) {
            tally(rep, CheckStatus::pass);
          } else {
            Json c;
            c["a"] = poly_to_json(a);
            c["b"] = poly_to_json(b);
            c["component_degree"] = bad_degree;
            add_case(rep, CheckStatus::fail, std::move(c));
          }
        }
    }
}

inline void check_semisimple_decomp(const DufloEngine& eng, const CheckSpec& spec,
                                    CheckReport& rep) {
  const bool is_sl2 = eng.algebra().name() == "sl2";
  for (unsigned k = 1; k <= spec.max_degree; ++k) {
    const GradedSubspace& inv = eng.invariants(k);
    const GradedSubspace& gs = eng.g_span(k);
    const std::size_t dim_sk = inv.coords.size();
    const bool sum_ok = inv.dim() + gs.dim() == dim_sk;
    const std::size_t stacked_rank =
        rref(vstack(inv.basis.basis_rows(), gs.basis.basis_rows())).rank;
    const bool intersection_trivial = stacked_rank == inv.dim() + gs.dim();
    bool expected_ok = true;
    Json c;
    c["degree"] = k;
    c["dim_component"] = dim_sk;
    c["dim_invariants"] = inv.dim();
    c["dim_g_span"] = gs.dim();
    c["direct_sum"] = sum_ok && intersection_trivial;
    if (is_sl2) {
      const unsigned expected_inv = (k % 2 == 0) ? 1 : 0;
      const std::size_t expected_dim = static_cast<std::size_t>(k + 1) * (k + 2) / 2;
      expected_ok = inv.dim() == expected_inv && dim_sk == expected_dim;
      c["expected_dims_match"] = expected_ok;
    }
    add_case(rep, (sum_ok && intersection_trivial && expected_ok) ? CheckStatus::pass
                                                                  : CheckStatus::fail,
             std::move(c), true);
  }
}

inline void check_odd_traces(const DufloEngine& eng, const CheckSpec& spec, CheckReport& rep) {
  rep.note =
      "empirical check: odd-k trace operators annihilate invariants (statement scope per module "
      "notes)";
  for (unsigned k : {1u, 3u, 5u}) {
    const DualPolynomial& tr = eng.trace(k);
    for (unsigned d = 1; d <= spec.max_degree; ++d)
      for (const SymPolynomial& f : eng.invariants(d).generators) {
        const SymPolynomial image = apply_operator(tr, f);
        if (image.is_zero()) {
          tally(rep, CheckStatus::pass);
        } else {
          Json c;
          c["k"] = k;
          c["invariant"] = poly_to_json(f);
          c["image"] = poly_to_json(image);
          add_case(rep, CheckStatus::fail, std::move(c));
        }
      }
  }
}

inline void check_coinvariant_dims(const DufloEngine& eng, const CheckSpec& spec,
                                   CheckReport& rep) {
  for (unsigned k = 0; k <= spec.max_degree; ++k) {
    const GradedSubspace& gs = eng.g_span(k);
    const GradedSubspace& fs = eng.full_span(k);
    const std::size_t dim_sk = gs.coords.size();
    bool nested = true;
    for (std::size_t r = 0; r < gs.basis.rank(); ++r)
      if (!fs.basis.contains(gs.basis.basis_rows().row(r))) {
        nested = false;
        break;
      }
    Json c;
    c["degree"] = k;
    c["dim_component"] = dim_sk;
    c["dim_g_span"] = gs.dim();
    c["dim_full_span"] = fs.dim();
    c["dim_coinvariants"] = dim_sk - gs.dim();
    c["g_span_inside_full_span"] = nested;
    add_case(rep, nested ? CheckStatus::pass : CheckStatus::fail, std::move(c), true);
  }
}

}  // namespace detail_checks

/// Runs one check against a validated algebra, reusing a caller-provided
/// engine (the suite shares engines across checks to amortize caches).
inline CheckReport run_check(const CheckSpec& spec, DufloEngine& eng) {
  bool known = false;
  for (const auto& id : known_check_ids()) known = known || id == spec.check_id;
  if (!known) throw std::invalid_argument("unknown check id: '" + spec.check_id + "'");

  CheckReport rep;
  rep.spec = spec;
  const auto start = std::chrono::steady_clock::now();

  if (spec.check_id == "jacobi") {
    detail_checks::check_jacobi(eng, rep);
  } else {
    const ValidationReport v = validate(eng.algebra());
    if (!v.ok()) {
      Json c;
      c["error"] = "algebra fails Lie axioms";
      if (v.violation)
        c["violation"] =
            Json::array({v.violation->i, v.violation->j, v.violation->l, v.violation->m});
      detail_checks::add_case(rep, CheckStatus::fail, std::move(c));
    } else if (spec.check_id == "pbw-roundtrip") {
      detail_checks::check_pbw_roundtrip(eng, spec, rep);
    } else if (spec.check_id == "pbw-module-map") {
      detail_checks::check_pbw_module_map(eng, spec, rep);
    } else if (spec.check_id == "star-assoc") {
      detail_checks::check_star_assoc(eng, spec, rep);
    } else if (spec.check_id == "star-first-order") {
      detail_checks::check_star_first_order(eng, spec, rep);
    } else if (spec.check_id == "duflo-hom") {
      detail_checks::check_duflo_hom(eng, spec, rep);
    } else if (spec.check_id == "h0-compat") {
      detail_checks::check_h0_compat(eng, spec, rep);
    } else if (spec.check_id == "extract-c") {
      detail_checks::check_extract_c(eng, spec, rep);
    } else if (spec.check_id == "commutant") {
      detail_checks::check_commutant(eng, spec, rep);
    } else if (spec.check_id == "semisimple-decomp") {
      detail_checks::check_semisimple_decomp(eng, spec, rep);
    } else if (spec.check_id == "odd-traces") {
      detail_checks::check_odd_traces(eng, spec, rep);
    } else if (spec.check_id == "coinvariant-dims") {
      detail_checks::check_coinvariant_dims(eng, spec, rep);
    }
  }

  rep.status = rep.cases_fail > 0   ? CheckStatus::fail
               : rep.cases_flag > 0 ? CheckStatus::flag
                                    : CheckStatus::pass;
  rep.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return rep;
}

inline CheckReport run_check(const CheckSpec& spec, const StructureConstants& sc) {
  DufloEngine eng(sc);
  return run_check(spec, eng);
}

// ---------------------------------------------------------------------------
// Acceptance suite

struct SuiteOptions {
  unsigned grid_degree = 4;  // alpha/beta degree bound for criteria 4 and 5
  std::uint64_t seed = 1;
};

struct CriterionResult {
  int number = 0;
  std::string title;
  bool pass = false;
  long long wall_ms = 0;
  long long budget_ms = 0;  // 0 = no stated budget
  std::string detail;
};

struct SuiteResult {
  std::vector<CriterionResult> criteria;
  bool pass = false;
  long long wall_ms = 0;

  Json to_json() const {
    Json arr = Json::array();
    for (const auto& c : criteria) {
      Json j;
      j["number"] = c.number;
      j["title"] = c.title;
      j["pass"] = c.pass;
      if (!c.detail.empty()) j["detail"] = c.detail;
      arr.push_back(std::move(j));
    }
    Json out;
    out["criteria"] = arr;
    out["pass"] = pass;
    return out;
  }
};

inline const std::vector<std::string>& suite_algebra_names() {
  static const std::vector<std::string> names = {
      "abelian(1)", "abelian(2)", "abelian(3)",
      "heisenberg3", "aff1", "sl2", "gl(2)", "direct_sum(sl2,abelian(1))"};
  return names;
}

namespace detail_checks {

/// Bernoulli numbers B_0..B_m by the defining recurrence
/// sum_{j<=m} C(m+1, j) B_j = 0 (B_1 = -1/2 convention; even indices are
/// convention-independent).
inline std::vector<Rational> bernoulli_numbers(unsigned m) {
  std::vector<Rational> b(m + 1);
  b[0] = 1;
  for (unsigned n = 1; n <= m; ++n) {
    Rational s(0);
    for (unsigned j = 0; j < n; ++j) s += binomial(n + 1, j) * b[j];
    b[n] = -s / Rational(n + 1);
  }
  return b;
}

}  // namespace detail_checks

/// Runs the full acceptance battery. Each criterion prints a pass/fail line
/// through `progress` (if given) and honors its stated runtime budget.
inline SuiteResult run_acceptance_suite(const SuiteOptions& opt, std::ostream* progress = nullptr) {
  SuiteResult result;
  std::map<std::string, std::unique_ptr<DufloEngine>> engines;
  const auto engine = [&engines](const std::string& name) -> DufloEngine& {
    auto it = engines.find(name);
    if (it == engines.end())
      it = engines.emplace(name, std::make_unique<DufloEngine>(catalog_lookup(name))).first;
    return *it->second;
  };
  const auto suite_start = std::chrono::steady_clock::now();

  const auto run = [&](int number, std::string title, long long budget_ms,
                       const std::function<bool(std::string&)>& body) {
    CriterionResult cr;
    cr.number = number;
    cr.title = std::move(title);
    cr.budget_ms = budget_ms;
    const auto t0 = std::chrono::steady_clock::now();
    cr.pass = body(cr.detail);
    cr.wall_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count();
    if (budget_ms > 0 && cr.wall_ms > budget_ms) {
      cr.pass = false;
      cr.detail += (cr.detail.empty() ? "" : "; ") + std::string("over runtime budget");
    }
    if (progress)
      *progress << (cr.pass ? "PASS" : "FAIL") << " criterion " << cr.number << " (" << cr.title
                << "): " << cr.wall_ms << " ms"
                << (cr.detail.empty() ? "" : " [" + cr.detail + "]") << "\n";
    result.criteria.push_back(std::move(cr));
  };

  const auto check_passes = [&](const std::string& id, const std::string& algebra,
                                unsigned max_degree, std::string& detail) {
    CheckSpec spec{id, algebra, max_degree, opt.seed};
    const CheckReport rep = run_check(spec, engine(algebra));
    if (rep.status != CheckStatus::pass) {
      detail += (detail.empty() ? "" : "; ") + id + "(" + algebra + ") " + to_cstr(rep.status);
      return false;
    }
    return true;
  };

  // 1. Series coefficients against the closed Bernoulli form.
  run(1, "series coefficients a_2 = 1/48, a_4 = -1/5760", 1000, [&](std::string& detail) {
    const auto alpha = duflo_alpha_coefficients(12);
    bool ok = alpha.at(2) == Rational(1) / 48 && alpha.at(4) == Rational(-1) / 5760;
    for (const auto& [k, v] : alpha) ok = ok && k % 2 == 0 && v != 0;
    const auto bern = detail_checks::bernoulli_numbers(12);
    for (unsigned k = 1; 2 * k <= 12; ++k)
      ok = ok && alpha.at(2 * k) == bern[2 * k] / (Rational(4 * k) * factorial(2 * k));
    if (!ok) detail = "coefficient mismatch";
    return ok;
  });

  // 2. PBW round trip, module map, confluence on the whole catalog.
  run(2, "PBW suite to degree 5 on the catalog", 30000, [&](std::string& detail) {
    bool ok = true;
    for (const auto& name : suite_algebra_names()) {
      ok = check_passes("pbw-roundtrip", name, 5, detail) && ok;
      ok = check_passes("pbw-module-map", name, 5, detail) && ok;
    }
    return ok;
  });

  // 3. Duflo homomorphism on invariants.
  run(3, "Duflo homomorphism (sl2 to degree 8, gl(2) to degree 4)", 120000,
      [&](std::string& detail) {
        bool ok = check_passes("duflo-hom", "sl2", 8, detail);
        ok = check_passes("duflo-hom", "gl(2)", 4, detail) && ok;
        return ok;
      });

  // 4. H_0 compatibility with g-span witnesses across the catalog grid.
  run(4, "defect witnesses and H_0 compatibility on the catalog", 300000,
      [&](std::string& detail) {
        bool ok = true;
        for (const auto& name : suite_algebra_names())
          ok = check_passes("h0-compat", name, opt.grid_degree, detail) && ok;
        return ok;
      });

  // 5. Both sides of the transported-product identity, independent paths.
  run(5, "defect identity via independent code paths on the catalog", 0, [&](std::string& detail) {
    bool ok = true;
    for (const auto& name : suite_algebra_names())
      ok = check_passes("extract-c", name, opt.grid_degree, detail) && ok;
    return ok;
  });

  // 6. Star-product structure: associativity and the first-order condition.
  run(6, "star associativity and first-order condition", 60000, [&](std::string& detail) {
    bool ok = true;
    for (const auto& name : suite_algebra_names()) {
      ok = check_passes("star-assoc", name, 3, detail) && ok;
      ok = check_passes("star-first-order", name, 3, detail) && ok;
    }
    return ok;
  });

  // 7. Star commutators land in the full bracket span.
  run(7, "star commutators inside the full bracket span", 0, [&](std::string& detail) {
    bool ok = true;
    for (const auto& name : suite_algebra_names())
      ok = check_passes("commutant", name, 3, detail) && ok;
    return ok;
  });

  // 8. Invariants + g-span decomposition for sl2.
  run(8, "sl2 decomposition invariants + g-span to degree 6", 10000, [&](std::string& detail) {
    return check_passes("semisimple-decomp", "sl2", 6, detail);
  });

  // 9. Pinned golden value for the sl2 Casimir.
  run(9, "sl2 golden value phi_D(h^2+4ef) = h^2+4ef-2h+1", 0, [&](std::string& detail) {
    DufloEngine& eng = engine("sl2");
    SymPolynomial omega(3);
    omega.add_term({0, 2, 0}, 1);
    omega.add_term({1, 0, 1}, 4);
    EnvElement expected(3);
    expected.add_term(Word{}, 1);
    expected.add_term(Word{1}, -2);
    expected.add_term(Word{0, 2}, 4);
    expected.add_term(Word{1, 1}, 1);
    const bool ok = eng.duflo_map(omega) == expected;
    if (!ok) detail = "golden value mismatch";
    return ok;
  });

  // 10. Odd trace operators annihilate invariants (empirical).
  run(10, "odd trace operators vanish on invariants (empirical)", 0, [&](std::string& detail) {
    bool ok = true;
    for (const auto& name : suite_algebra_names())
      ok = check_passes("odd-traces", name, 6, detail) && ok;
    return ok;
  });

  result.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - suite_start)
                       .count();
  result.pass = result.wall_ms < 600000;
  for (const auto& c : result.criteria) result.pass = result.pass && c.pass;
  if (progress)
    *progress << (result.pass ? "PASS" : "FAIL") << " suite total: " << result.wall_ms << " ms\n";
  return result;
}

}  // namespace duflo
