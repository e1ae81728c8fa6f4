#pragma once

// Exact Gauss-Jordan elimination.  The serial and OpenMP kernels perform the
// same pivot sequence; they differ only in how the row updates of one pivot
// step are scheduled, so their outputs are identical.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qcyc/arith/frac.hpp"
#include "qcyc/arith/qfunc.hpp"
#include "qcyc/linalg/matrix.hpp"
#include "qcyc/parallel.hpp"

namespace qcyc {

// Rough size of an entry, used to prefer cheap pivots.
inline std::size_t entry_size(const mpq_class& x) {
  return mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
}
inline std::size_t entry_size(const QFunc& x) {
  std::size_t s = 4 * (x.num().size() + x.den().size());
  for (const auto& c : x.num().coeffs()) s += mpz_sizeinbase(c.get_mpz_t(), 2);
  for (const auto& c : x.den().coeffs()) s += mpz_sizeinbase(c.get_mpz_t(), 2);
  return s;
}
template <class K>
std::size_t entry_size(const Frac<K>& x) {
  std::size_t s = 8 * (x.num().size() + x.den().size());
  for (const auto& c : x.num().coeffs()) s += entry_size(c);
  for (const auto& c : x.den().coeffs()) s += entry_size(c);
  return s;
}

template <class K>
struct Echelon {
  std::vector<Vec<K>> rows;         // reduced rows, pivot entries equal to 1
  std::vector<std::size_t> pivots;  // pivot column of each row
  std::size_t cols = 0;
  std::size_t rank() const { return rows.size(); }
};

namespace detail {

template <class K>
std::optional<std::size_t> choose_pivot(const std::vector<Vec<K>>& rows, std::size_t from, std::size_t col) {
  std::optional<std::size_t> best;
  std::size_t best_size = 0;
  for (std::size_t i = from; i < rows.size(); ++i) {
    const K& x = rows[i][col];
    if (coeff_zero(x)) continue;
    std::size_t s = entry_size(x);
    if (!best || s < best_size) {
      best = i;
      best_size = s;
    }
  }
  return best;
}

template <class K>
void normalize_row(Vec<K>& row, std::size_t col) {
  if (row[col] == K(1)) return;
  K inv = K(1) / row[col];
  for (std::size_t j = col; j < row.size(); ++j)
    if (!coeff_zero(row[j])) row[j] *= inv;
  row[col] = K(1);
}

template <class K>
void eliminate_with(Vec<K>& target, const Vec<K>& pivot_row, std::size_t col) {
  if (coeff_zero(target[col])) return;
  K f = target[col];
  for (std::size_t j = col; j < target.size(); ++j)
    if (!coeff_zero(pivot_row[j])) target[j] -= f * pivot_row[j];
}

template <class K>
Echelon<K> rref_impl(std::vector<Vec<K>> rows, std::size_t cols, Backend backend) {
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    auto p = choose_pivot(rows, r, c);
    if (!p) continue;
    std::swap(rows[r], rows[*p]);
    normalize_row(rows[r], c);
    const Vec<K>& prow = rows[r];
    const std::size_t rr = r;
    for_each_index(backend, rows.size(), [&](std::size_t i) {
      if (i != rr) eliminate_with(rows[i], prow, c);
    });
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return Echelon<K>{std::move(rows), std::move(pivots), cols};
}

template <class K>
void eliminate_full(Vec<K>& target, const Vec<K>& row, std::size_t piv) {
  if (coeff_zero(target[piv])) return;
  K f = target[piv];
  for (std::size_t j = 0; j < target.size(); ++j)
    if (!coeff_zero(row[j])) target[j] -= f * row[j];
}

template <class K>
std::vector<Vec<K>> to_rows(const Matrix<K>& m) {
  std::vector<Vec<K>> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rows;
}

}  // namespace detail

// Reduced row echelon form, serial reference kernel.
template <class K>
Echelon<K> rref_serial(const Matrix<K>& m) {
  return detail::rref_impl(detail::to_rows(m), m.cols(), Backend::Serial);
}

// Reduced row echelon form with the per-pivot row updates run under OpenMP.
template <class K>
Echelon<K> rref_omp(const Matrix<K>& m) {
  return detail::rref_impl(detail::to_rows(m), m.cols(), Backend::OpenMP);
}

template <class K>
Echelon<K> rref(const Matrix<K>& m, Backend b = Backend::OpenMP) {
  return b == Backend::OpenMP ? rref_omp(m) : rref_serial(m);
}

template <class K>
std::size_t rank(const Matrix<K>& m, Backend b = Backend::OpenMP) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return rref(m, b).rank();
}

// Basis of the right nullspace {v : m v = 0}.
template <class K>
std::vector<Vec<K>> kernel(const Matrix<K>& m, Backend b = Backend::OpenMP) {
  Echelon<K> e = rref(m, b);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec<K>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec<K> v(m.cols(), K(0));
    v[f] = K(1);
    for (std::size_t i = 0; i < e.rows.size(); ++i)
      if (!detail::coeff_zero(e.rows[i][f])) v[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Inverse of a square matrix; nullopt when singular.
template <class K>
std::optional<Matrix<K>> inverse(const Matrix<K>& m, Backend b = Backend::OpenMP) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse: non-square matrix");
  std::vector<Vec<K>> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec<K> r = m.row(i);
    r.resize(2 * n, K(0));
    r[n + i] = K(1);
    rows.push_back(std::move(r));
  }
  Echelon<K> e = detail::rref_impl(std::move(rows), n, b);
  if (e.rank() < n) return std::nullopt;
  Matrix<K> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(e.pivots[i], j) = e.rows[i][n + j];
  // Rows are ordered by pivot, and pivots are 0..n-1 for an invertible matrix.
  return inv;
}

// Incrementally built echelon basis of a subspace of K^n.  Vectors are reduced
// against the stored rows in insertion order; that order also yields
// coordinates, since row j vanishes on the pivots of rows inserted before it.
template <class K>
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t n = 0) : n_(n) {}

  std::size_t ambient() const { return n_; }
  std::size_t size() const { return rows_.size(); }
  const Vec<K>& vector(std::size_t j) const { return rows_[j]; }
  std::size_t pivot(std::size_t j) const { return piv_[j]; }

  // Reduce v modulo the span; returns the reduced vector.
  Vec<K> reduce(Vec<K> v) const {
    for (std::size_t j = 0; j < rows_.size(); ++j) detail::eliminate_full(v, rows_[j], piv_[j]);
    return v;
  }

  // Insert v; returns the index of the new basis vector, or nullopt if v was
  // already in the span.
  std::optional<std::size_t> insert(Vec<K> v) {
    v = reduce(std::move(v));
    std::optional<std::size_t> p;
    std::size_t best = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (detail::coeff_zero(v[i])) continue;
      std::size_t s = entry_size(v[i]);
      if (!p || s < best) {
        p = i;
        best = s;
      }
    }
    if (!p) return std::nullopt;
    if (!(v[*p] == K(1))) {
      K inv = K(1) / v[*p];
      for (auto& x : v)
        if (!detail::coeff_zero(x)) x *= inv;
    }
    rows_.push_back(std::move(v));
    piv_.push_back(*p);
    return rows_.size() - 1;
  }

  // Coordinates of v in the stored basis; throws if v is not in the span.
  Vec<K> coords(Vec<K> v) const {
    Vec<K> c(rows_.size(), K(0));
    for (std::size_t j = 0; j < rows_.size(); ++j) {
      c[j] = v[piv_[j]];
      detail::eliminate_full(v, rows_[j], piv_[j]);
    }
    for (const auto& x : v)
      if (!detail::coeff_zero(x)) throw std::domain_error("EchelonBasis::coords: vector not in span");
    return c;
  }

 private:
  std::size_t n_;
  std::vector<Vec<K>> rows_;
  std::vector<std::size_t> piv_;
};

}  // namespace qcyc
