#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "minplus/value.hpp"

namespace minplus {

/// Square min-plus matrix of order n ≥ 1, stored row-major. Immutable once built.
class Matrix {
 public:
  /// n×n matrix of ε. Throws std::invalid_argument for n == 0.
  explicit Matrix(std::size_t n);
  /// Row-major entries; entries.size() must equal n*n.
  Matrix(std::size_t n, std::vector<Value> entries);
  /// Throws std::invalid_argument unless rows form a non-empty square.
  Matrix(std::initializer_list<std::initializer_list<Value>> rows);
  explicit Matrix(const std::vector<std::vector<Value>>& rows);

  std::size_t order() const noexcept { return n_; }
  const Value& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  std::span<const Value> row(std::size_t i) const { return {entries_.data() + i * n_, n_}; }
  std::span<const Value> entries() const noexcept { return entries_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_;
  std::vector<Value> entries_;
};

/// Diagonal e, off-diagonal ε.
Matrix identity(std::size_t n);

Matrix oplus(const Matrix& a, const Matrix& b);
Matrix otimes(const Matrix& a, const Matrix& b);
Matrix scalar_otimes(const Value& alpha, const Matrix& a);
/// k-fold ⊗-product; power(a, 0) is the identity.
Matrix power(const Matrix& a, std::size_t k);
/// ⊕ of the diagonal.
Value trace(const Matrix& a);

/// Principal submatrix on the given (sorted, distinct) indices.
Matrix principal_submatrix(const Matrix& a, std::span<const std::size_t> indices);

}  // namespace minplus
