#include "minplus/matrix.hpp"

#include <stdexcept>
#include <string>

namespace minplus {

namespace {

void require_same_order(const Matrix& a, const Matrix& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()));
  }
}

}  // namespace

Matrix::Matrix(std::size_t n) : n_(n), entries_(n * n) {
  if (n == 0) throw std::invalid_argument("matrix order must be positive");
}

Matrix::Matrix(std::size_t n, std::vector<Value> entries) : n_(n), entries_(std::move(entries)) {
  if (n == 0) throw std::invalid_argument("matrix order must be positive");
  if (entries_.size() != n * n) throw std::invalid_argument("entry count does not match n*n");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Value>> rows) : n_(rows.size()) {
  if (n_ == 0) throw std::invalid_argument("matrix order must be positive");
  entries_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw std::invalid_argument("matrix is not square");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

Matrix::Matrix(const std::vector<std::vector<Value>>& rows) : n_(rows.size()) {
  if (n_ == 0) throw std::invalid_argument("matrix order must be positive");
  entries_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw std::invalid_argument("matrix is not square");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

Matrix identity(std::size_t n) {
  std::vector<Value> e(n * n);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = Value::unit();
  return Matrix(n, std::move(e));
}

Matrix oplus(const Matrix& a, const Matrix& b) {
  require_same_order(a, b);
  const std::size_t n = a.order();
  std::vector<Value> e;
  e.reserve(n * n);
  for (std::size_t k = 0; k < n * n; ++k) e.push_back(oplus(a.entries()[k], b.entries()[k]));
  return Matrix(n, std::move(e));
}

Matrix otimes(const Matrix& a, const Matrix& b) {
  require_same_order(a, b);
  const std::size_t n = a.order();
  std::vector<Value> e(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      const Value& ail = a(i, l);
      if (ail.is_epsilon()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const Value& blj = b(l, j);
        if (blj.is_epsilon()) continue;
        Value& cell = e[i * n + j];
        Rational s = ail.finite() + blj.finite();
        if (cell.is_epsilon() || s < cell.finite()) cell = Value(s);
      }
    }
  }
  return Matrix(n, std::move(e));
}

Matrix scalar_otimes(const Value& alpha, const Matrix& a) {
  const std::size_t n = a.order();
  std::vector<Value> e;
  e.reserve(n * n);
  for (const Value& v : a.entries()) e.push_back(otimes(alpha, v));
  return Matrix(n, std::move(e));
}

Matrix power(const Matrix& a, std::size_t k) {
  if (k == 0) return identity(a.order());
  Matrix result = a;
  for (std::size_t i = 1; i < k; ++i) result = otimes(result, a);
  return result;
}

Value trace(const Matrix& a) {
  Value t = Value::epsilon();
  for (std::size_t i = 0; i < a.order(); ++i) t = oplus(t, a(i, i));
  return t;
}

Matrix principal_submatrix(const Matrix& a, std::span<const std::size_t> indices) {
  const std::size_t m = indices.size();
  std::vector<Value> e;
  e.reserve(m * m);
  for (std::size_t i : indices) {
    for (std::size_t j : indices) e.push_back(a(i, j));
  }
  return Matrix(m, std::move(e));
}

}  // namespace minplus
