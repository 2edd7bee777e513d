#include "minplus/value.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "minplus/error.hpp"

namespace minplus {

namespace {

constexpr long kMaxDecimalExponent = 4096;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class pow10(unsigned long k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

[[noreturn]] void bad_token(std::string_view token, std::size_t column) {
  throw ParseError("invalid min-plus value '" + std::string(token) + "'", 0, column);
}

Value parse_rational(std::string_view t, std::size_t slash, std::size_t column) {
  std::string_view num = t.substr(0, slash);
  std::string_view den = t.substr(slash + 1);
  bool negative = false;
  if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
    negative = num.front() == '-';
    num.remove_prefix(1);
  }
  if (!den.empty() && den.front() == '+') den.remove_prefix(1);
  if (!all_digits(num) || !all_digits(den)) bad_token(t, column);
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw ParseError("zero denominator in '" + std::string(t) + "'", 0, column + slash + 1);
  if (negative) p = -p;
  return Value(Rational(p, q));
}

Value parse_decimal(std::string_view t, std::size_t column) {
  std::string_view s = t;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view ex = s.substr(e + 1);
    s = s.substr(0, e);
    bool exp_negative = false;
    if (!ex.empty() && (ex.front() == '-' || ex.front() == '+')) {
      exp_negative = ex.front() == '-';
      ex.remove_prefix(1);
    }
    if (!all_digits(ex) || ex.size() > 6) bad_token(t, column);
    exponent = std::stol(std::string(ex));
    if (exp_negative) exponent = -exponent;
  }
  std::string digits;
  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) bad_token(t, column);
  if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part))) {
    bad_token(t, column);
  }
  digits.append(int_part).append(frac_part);
  exponent -= static_cast<long>(frac_part.size());
  if (exponent > kMaxDecimalExponent || exponent < -kMaxDecimalExponent) {
    throw ParseError("exponent out of range in '" + std::string(t) + "'", 0, column);
  }
  mpz_class mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  Rational q;
  if (exponent >= 0) {
    q = Rational(mantissa * pow10(static_cast<unsigned long>(exponent)));
  } else {
    q = Rational(mantissa, pow10(static_cast<unsigned long>(-exponent)));
  }
  return Value(q);
}

}  // namespace

Value::Value(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  q_ = Rational(num, den);
  q_->canonicalize();
}

const Rational& Value::finite() const {
  if (!q_) throw std::logic_error("finite() called on epsilon");
  return *q_;
}

bool operator==(const Value& a, const Value& b) {
  if (a.is_epsilon() || b.is_epsilon()) return a.is_epsilon() == b.is_epsilon();
  return *a.q_ == *b.q_;
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (a.is_epsilon()) return b.is_epsilon() ? std::strong_ordering::equal : std::strong_ordering::greater;
  if (b.is_epsilon()) return std::strong_ordering::less;
  int c = cmp(*a.q_, *b.q_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Value oplus(const Value& a, const Value& b) { return b < a ? b : a; }

Value otimes(const Value& a, const Value& b) {
  if (a.is_epsilon() || b.is_epsilon()) return Value::epsilon();
  return Value(Rational(a.finite() + b.finite()));
}

Value otimes_inverse(const Value& a) {
  if (a.is_epsilon()) throw std::domain_error("epsilon has no ⊗-inverse");
  return Value(Rational(-a.finite()));
}

Value power(const Value& a, std::size_t k) {
  if (k == 0) return Value::unit();
  if (a.is_epsilon()) return Value::epsilon();
  return Value(Rational(a.finite() * Rational(mpz_class(static_cast<unsigned long>(k)))));
}

Value parse_value(std::string_view text) {
  std::size_t begin = 0;
  while (begin < text.size() && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  std::size_t end = text.size();
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string_view t = text.substr(begin, end - begin);
  const std::size_t column = begin + 1;
  if (t.empty()) throw ParseError("empty min-plus value", 0, column);
  if (t == "inf" || t == "+inf" || t == "eps" || t == "ε" || t == "Inf" || t == "INF") {
    return Value::epsilon();
  }
  if (auto slash = t.find('/'); slash != std::string_view::npos) return parse_rational(t, slash, column);
  return parse_decimal(t, column);
}

std::string to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string to_string(const Value& v) { return v.is_epsilon() ? "inf" : to_string(v.finite()); }

std::ostream& operator<<(std::ostream& os, const Value& v) { return os << to_string(v); }

}  // namespace minplus
