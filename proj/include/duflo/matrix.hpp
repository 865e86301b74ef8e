#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "duflo/rational.hpp"

namespace duflo {

/// Dense matrix of exact rationals. Values are immutable once a computation
/// hands them out; all operations here are pure functions.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return std::span<const Rational>(a_.data() + r * cols_, cols_);
  }

  void swap_rows(std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(r1, c), at(r2, c));
  }

  bool operator==(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
      if (a_[i] != o.a_[i]) return false;
    return true;
  }
  bool operator!=(const RationalMatrix& o) const { return !(*this == o); }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

inline RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b.at(k, j) != 0) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

inline RationalMatrix vstack(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
  RationalMatrix m(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m.at(a.rows() + i, j) = b.at(i, j);
  return m;
}

struct RrefResult {
  RationalMatrix matrix;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

/// Reduced row-echelon form by Gauss-Jordan elimination over the rationals.
/// The result is the unique RREF of the input; pivot columns are strictly
/// increasing and pivot entries are 1.
inline RrefResult rref(RationalMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m.at(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    if (m.at(r, c) != 1) {
      const Rational inv = Rational(1) / m.at(r, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (m.at(r, k) != 0) m.at(r, k) *= inv;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      const Rational f = m.at(i, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (m.at(r, k) != 0) m.at(i, k) -= f * m.at(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return RrefResult{std::move(m), std::move(pivots), r};
}

/// A linear subspace of Q^n, stored as the RREF of a spanning set. The
/// original spanning rows (with labels) are retained so membership witnesses
/// are expressed over meaningful generators rather than reduced rows.
class SubspaceBasis {
 public:
  SubspaceBasis() = default;

  static SubspaceBasis from_spanning_rows(RationalMatrix spanning,
                                          std::vector<std::string> labels = {}) {
    SubspaceBasis s;
    s.ambient_ = spanning.cols();
    const std::size_t m = spanning.rows();
    if (labels.empty()) {
      labels.reserve(m);
      for (std::size_t i = 0; i < m; ++i) labels.push_back("v" + std::to_string(i));
    }
    if (labels.size() != m)
      throw std::invalid_argument("SubspaceBasis: label count does not match spanning rows");
    s.labels_ = std::move(labels);

    RrefResult rr = rref(spanning);
    s.pivot_cols_ = rr.pivot_cols;
    s.basis_rows_ = RationalMatrix(rr.rank, s.ambient_);
    for (std::size_t i = 0; i < rr.rank; ++i)
      for (std::size_t j = 0; j < s.ambient_; ++j) s.basis_rows_.at(i, j) = rr.matrix.at(i, j);

    // Witness solver: rref([spanning^T | I]). Row ops T with T*spanning^T in
    // RREF let every membership query solve spanning^T * w = v in O(n^2).
    RationalMatrix aug(s.ambient_, m + s.ambient_);
    for (std::size_t i = 0; i < s.ambient_; ++i) {
      for (std::size_t j = 0; j < m; ++j) aug.at(i, j) = spanning.at(j, i);
      aug.at(i, m + i) = 1;
    }
    RrefResult sr = rref(std::move(aug));
    s.solver_ = std::move(sr.matrix);
    for (std::size_t p : sr.pivot_cols)
      if (p < m) s.solver_pivots_.push_back(p);
    s.spanning_ = std::move(spanning);
    return s;
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t rank() const { return basis_rows_.rows(); }
  const RationalMatrix& basis_rows() const { return basis_rows_; }
  const std::vector<std::size_t>& pivot_cols() const { return pivot_cols_; }
  const RationalMatrix& spanning_rows() const { return spanning_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Remainder of v after elimination against the RREF rows; zero iff v lies
  /// in the subspace. The remainder is supported on non-pivot coordinates and
  /// is the canonical representative of v modulo the subspace.
  std::vector<Rational> reduce(std::span<const Rational> v) const {
    if (v.size() != ambient_) throw std::invalid_argument("reduce: vector length mismatch");
    std::vector<Rational> x(v.begin(), v.end());
    for (std::size_t b = 0; b < basis_rows_.rows(); ++b) {
      const std::size_t p = pivot_cols_[b];
      if (x[p] == 0) continue;
      const Rational f = x[p];
      for (std::size_t j = p; j < ambient_; ++j)
        if (basis_rows_.at(b, j) != 0) x[j] -= f * basis_rows_.at(b, j);
    }
    return x;
  }

  bool contains(std::span<const Rational> v) const {
    for (const Rational& q : reduce(v))
      if (q != 0) return false;
    return true;
  }

  /// Coefficients w over the ORIGINAL spanning rows with sum_q w_q * row_q = v
  /// exactly, or nullopt when v is outside the span.
  std::optional<std::vector<Rational>> membership(std::span<const Rational> v) const {
    if (v.size() != ambient_) throw std::invalid_argument("membership: vector length mismatch");
    const std::size_t m = spanning_.rows();
    const std::size_t rank_a = solver_pivots_.size();
    std::vector<Rational> w(m, Rational(0));
    for (std::size_t r = 0; r < ambient_; ++r) {
      Rational y(0);
      for (std::size_t j = 0; j < ambient_; ++j) {
        const Rational& t = solver_.at(r, m + j);
        if (t != 0 && v[j] != 0) y += t * v[j];
      }
      if (r < rank_a)
        w[solver_pivots_[r]] = y;
      else if (y != 0)
        return std::nullopt;
    }
    return w;
  }

 private:
  std::size_t ambient_ = 0;
  RationalMatrix basis_rows_;
  std::vector<std::size_t> pivot_cols_;
  RationalMatrix spanning_;
  std::vector<std::string> labels_;
  RationalMatrix solver_;
  std::vector<std::size_t> solver_pivots_;
};

/// Canonical basis of the right null space of m; dimension = cols - rank.
inline SubspaceBasis kernel_basis(const RationalMatrix& m) {
  RrefResult r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : r.pivot_cols) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  RationalMatrix k(free_cols.size(), n);
  std::vector<std::string> labels;
  for (std::size_t idx = 0; idx < free_cols.size(); ++idx) {
    const std::size_t f = free_cols[idx];
    k.at(idx, f) = 1;
    for (std::size_t i = 0; i < r.rank; ++i)
      if (r.matrix.at(i, f) != 0) k.at(idx, r.pivot_cols[i]) = -r.matrix.at(i, f);
    labels.push_back("k" + std::to_string(idx));
  }
  return SubspaceBasis::from_spanning_rows(std::move(k), std::move(labels));
}

}  // namespace duflo
