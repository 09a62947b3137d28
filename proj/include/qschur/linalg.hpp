#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "qschur/errors.hpp"
#include "qschur/scalar.hpp"

namespace qschur {

inline bool field_is_zero(const mpq_class& x) { return sgn(x) == 0; }
inline bool field_is_zero(const GaussianRational& x) { return x.is_zero(); }

template <class F>
struct DenseMatrix {
  size_t rows = 0, cols = 0;
  std::vector<F> a;
  DenseMatrix() = default;
  DenseMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, F(0)) {}
  F& operator()(size_t i, size_t j) { return a[i * cols + j]; }
  const F& operator()(size_t i, size_t j) const { return a[i * cols + j]; }
};

// row echelon form in place; returns pivot columns
template <class F>
std::vector<size_t> echelon(DenseMatrix<F>& m) {
  std::vector<size_t> piv;
  size_t row = 0;
  for (size_t c = 0; c < m.cols && row < m.rows; ++c) {
    size_t p = row;
    while (p < m.rows && field_is_zero(m(p, c))) ++p;
    if (p == m.rows) continue;
    if (p != row)
      for (size_t j = 0; j < m.cols; ++j) std::swap(m(p, j), m(row, j));
    F inv = F(1) / m(row, c);
    for (size_t j = c; j < m.cols; ++j) m(row, j) *= inv;
    for (size_t i = row + 1; i < m.rows; ++i) {
      if (field_is_zero(m(i, c))) continue;
      F f = m(i, c);
      for (size_t j = c; j < m.cols; ++j) m(i, j) -= f * m(row, j);
    }
    piv.push_back(c);
    ++row;
  }
  return piv;
}

template <class F>
size_t rank(DenseMatrix<F> m) {
  return echelon(m).size();
}

// indices of the first maximal set of linearly independent rows, scanning top down
template <class F>
std::vector<size_t> independent_rows(const DenseMatrix<F>& m) {
  std::vector<size_t> chosen;
  std::vector<std::vector<F>> basis;  // reduced rows
  std::vector<size_t> lead;
  for (size_t i = 0; i < m.rows && chosen.size() < m.cols; ++i) {
    std::vector<F> v(m.a.begin() + i * m.cols, m.a.begin() + (i + 1) * m.cols);
    for (size_t b = 0; b < basis.size(); ++b) {
      if (field_is_zero(v[lead[b]])) continue;
      F f = v[lead[b]];
      for (size_t j = 0; j < m.cols; ++j) v[j] -= f * basis[b][j];
    }
    size_t c = 0;
    while (c < m.cols && field_is_zero(v[c])) ++c;
    if (c == m.cols) continue;
    F inv = F(1) / v[c];
    for (auto& x : v) x *= inv;
    basis.push_back(std::move(v));
    lead.push_back(c);
    chosen.push_back(i);
  }
  return chosen;
}

template <class F>
std::optional<DenseMatrix<F>> inverse(const DenseMatrix<F>& m) {
  if (m.rows != m.cols) throw InvalidArgument("inverse of a non-square matrix");
  size_t n = m.rows;
  DenseMatrix<F> aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = F(1);
  }
  auto piv = echelon(aug);
  if (piv.size() < n || piv[n - 1] >= n) return std::nullopt;
  for (size_t r = n; r-- > 0;)
    for (size_t i = 0; i < r; ++i) {
      if (field_is_zero(aug(i, r))) continue;
      F f = aug(i, r);
      for (size_t j = r; j < 2 * n; ++j) aug(i, j) -= f * aug(r, j);
    }
  DenseMatrix<F> out(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

// unique x with m x = b; nullopt if inconsistent or underdetermined
template <class F>
std::optional<std::vector<F>> solve_unique(const DenseMatrix<F>& m, const std::vector<F>& b) {
  DenseMatrix<F> aug(m.rows, m.cols + 1);
  for (size_t i = 0; i < m.rows; ++i) {
    for (size_t j = 0; j < m.cols; ++j) aug(i, j) = m(i, j);
    aug(i, m.cols) = b[i];
  }
  auto piv = echelon(aug);
  if (!piv.empty() && piv.back() == m.cols) return std::nullopt;
  if (piv.size() != m.cols) return std::nullopt;
  std::vector<F> x(m.cols, F(0));
  for (size_t r = m.cols; r-- > 0;) {
    F s = aug(r, m.cols);
    for (size_t j = r + 1; j < m.cols; ++j) s -= aug(r, j) * x[j];
    x[r] = s;
  }
  return x;
}

}  // namespace qschur
