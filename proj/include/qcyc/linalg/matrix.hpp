#pragma once

// Dense and sparse matrices over an exact field.

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qcyc/arith/poly.hpp"

namespace qcyc {

template <class K>
using Vec = std::vector<K>;

template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, K(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  K& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec<K> row(std::size_t i) const { return Vec<K>(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_), a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)); }
  Vec<K> col(std::size_t j) const {
    Vec<K> v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
  }
  void set_col(std::size_t j, const Vec<K>& v) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!detail::coeff_zero(x)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const K& x = a(i, k);
        if (detail::coeff_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const K& y = b(k, j);
          if (detail::coeff_zero(y)) continue;
          c(i, j) += x * y;
        }
      }
    return c;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.check_same(b);
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.check_same(b);
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) { return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_; }

  Vec<K> apply(const Vec<K>& v) const {
    Vec<K> out(rows_, K(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        const K& x = (*this)(i, j);
        if (detail::coeff_zero(x) || detail::coeff_zero(v[j])) continue;
        out[i] += x * v[j];
      }
    return out;
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const K&>()))> {
    Matrix<decltype(f(std::declval<const K&>()))> m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = f((*this)(i, j));
    return m;
  }

 private:
  void check_same(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("Matrix: shape mismatch");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<K> a_;
};

// Kronecker product with the left factor as the major index.
template <class K>
Matrix<K> kron(const Matrix<K>& a, const Matrix<K>& b) {
  Matrix<K> m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (detail::coeff_zero(a(i, j))) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!detail::coeff_zero(b(k, l))) m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return m;
}

// Square sparse matrix stored by columns: col[j] lists (row, value).
template <class K>
class SparseMat {
 public:
  using Entry = std::pair<int, K>;

  SparseMat() = default;
  explicit SparseMat(int n) : cols_(static_cast<std::size_t>(n)) {}

  int dim() const { return static_cast<int>(cols_.size()); }
  const std::vector<Entry>& col(int j) const { return cols_[static_cast<std::size_t>(j)]; }

  void add(int row, int col, const K& v) {
    if (detail::coeff_zero(v)) return;
    auto& c = cols_[static_cast<std::size_t>(col)];
    for (auto it = c.begin(); it != c.end(); ++it) {
      if (it->first == row) {
        it->second += v;
        if (detail::coeff_zero(it->second)) c.erase(it);
        return;
      }
    }
    c.emplace_back(row, v);
  }

  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& c : cols_) n += c.size();
    return n;
  }

  Vec<K> apply(const Vec<K>& v) const {
    Vec<K> out(cols_.size(), K(0));
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      if (detail::coeff_zero(v[j])) continue;
      for (const auto& [i, x] : cols_[j]) out[static_cast<std::size_t>(i)] += x * v[j];
    }
    return out;
  }

  friend SparseMat operator*(const SparseMat& a, const SparseMat& b) {
    SparseMat c(b.dim());
    for (int j = 0; j < b.dim(); ++j)
      for (const auto& [k, y] : b.col(j))
        for (const auto& [i, x] : a.col(k)) c.add(i, j, x * y);
    return c;
  }
  friend SparseMat operator+(SparseMat a, const SparseMat& b) {
    for (int j = 0; j < b.dim(); ++j)
      for (const auto& [i, x] : b.col(j)) a.add(i, j, x);
    return a;
  }
  friend SparseMat operator-(SparseMat a, const SparseMat& b) {
    for (int j = 0; j < b.dim(); ++j)
      for (const auto& [i, x] : b.col(j)) a.add(i, j, -x);
    return a;
  }
  SparseMat scaled(const K& s) const {
    SparseMat c(dim());
    for (int j = 0; j < dim(); ++j)
      for (const auto& [i, x] : col(j)) c.add(i, j, x * s);
    return c;
  }
  bool is_zero() const { return nnz() == 0; }

  Matrix<K> dense() const {
    Matrix<K> m(cols_.size(), cols_.size());
    for (int j = 0; j < dim(); ++j)
      for (const auto& [i, x] : col(j)) m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = x;
    return m;
  }
  static SparseMat from_dense(const Matrix<K>& m) {
    SparseMat s(static_cast<int>(m.cols()));
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (std::size_t i = 0; i < m.rows(); ++i)
        if (!detail::coeff_zero(m(i, j))) s.cols_[j].emplace_back(static_cast<int>(i), m(i, j));
    return s;
  }

  template <class F>
  auto map(F&& f) const -> SparseMat<decltype(f(std::declval<const K&>()))> {
    SparseMat<decltype(f(std::declval<const K&>()))> s(dim());
    for (int j = 0; j < dim(); ++j)
      for (const auto& [i, x] : col(j)) s.add(i, j, f(x));
    return s;
  }

  std::vector<Entry>& mutable_col(int j) { return cols_[static_cast<std::size_t>(j)]; }

 private:
  std::vector<std::vector<Entry>> cols_;
};

}  // namespace qcyc
