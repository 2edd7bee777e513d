#pragma once

/**
 * Scalars of the min-plus semiring R_min = R ∪ {ε}.
 *
 *   a ⊕ b = min(a, b)     identity ε = +∞
 *   a ⊗ b = a + b         identity e = 0, ε absorbing
 *
 * Finite values are exact GMP rationals so that slopes and average weights
 * compare without rounding.
 */

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace minplus {

using Rational = mpq_class;

class Value {
 public:
  /// ε
  Value() = default;
  Value(const Rational& q) : q_(q) { q_->canonicalize(); }
  Value(long v) : q_(Rational(v)) {}
  /// num/den; throws std::invalid_argument when den == 0.
  Value(long num, long den);

  static Value epsilon() { return Value(); }
  static Value unit() { return Value(0L); }

  bool is_epsilon() const noexcept { return !q_.has_value(); }
  bool is_finite() const noexcept { return q_.has_value(); }

  /// The finite rational. Throws std::logic_error on ε.
  const Rational& finite() const;

  friend bool operator==(const Value& a, const Value& b);
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);

 private:
  std::optional<Rational> q_;
};

Value oplus(const Value& a, const Value& b);
Value otimes(const Value& a, const Value& b);

/// -a. Throws std::domain_error for ε.
Value otimes_inverse(const Value& a);

/// k ⊗-fold product k·a; power(a, 0) = e even for a = ε.
Value power(const Value& a, std::size_t k);

/// Accepts integers, decimal literals (with optional exponent), "p/q", and
/// "inf" / "eps" / "ε" for ε. Column numbers in ParseError are 1-based
/// offsets into `text`.
Value parse_value(std::string_view text);

/// "p" or "p/q"; never a decimal.
std::string to_string(const Rational& q);
/// As above, "inf" for ε.
std::string to_string(const Value& v);

std::ostream& operator<<(std::ostream& os, const Value& v);

}  // namespace minplus
