#include "minplus/polynomial.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace minplus {

namespace {

void require_monic(const Polynomial& p, const char* op) {
  if (!p.is_monic()) throw std::domain_error(std::string(op) + ": polynomial is not monic (c_0 must be 0)");
}

// Lowest index with a finite coefficient, or degree()+1 if none.
std::size_t leading_finite(const Polynomial& p) {
  std::size_t j = 0;
  while (j <= p.degree() && p.coeff(j).is_epsilon()) ++j;
  return j;
}

// Monic q of degree n - j0 with p(x) = c_j0 + q(x).
Polynomial monic_part(const Polynomial& p, std::size_t j0) {
  const Rational& lead = p.coeff(j0).finite();
  std::vector<Value> q;
  q.reserve(p.degree() - j0 + 1);
  for (std::size_t j = j0; j <= p.degree(); ++j) {
    const Value& c = p.coeff(j);
    q.push_back(c.is_epsilon() ? Value::epsilon() : Value(Rational(c.finite() - lead)));
  }
  return Polynomial(std::move(q));
}

// Representative of p's function class that is defined for non-monic input too:
// leading ε kept, the rest shifted to monic, hulled, and shifted back.
std::vector<Value> normal_form(const Polynomial& p) {
  const std::size_t j0 = leading_finite(p);
  if (j0 > p.degree()) return {p.coeffs().begin(), p.coeffs().end()};
  const Rational lead = p.coeff(j0).finite();
  const Polynomial hull = canonicalize(monic_part(p, j0));
  std::vector<Value> out(j0);
  for (const Value& c : hull.coeffs()) out.push_back(otimes(c, Value(lead)));
  return out;
}

std::string term(const Value& c, std::size_t exponent, bool leading_unit) {
  std::string x = exponent == 0 ? "" : exponent == 1 ? "x" : "x^" + std::to_string(exponent);
  if (exponent == 0) return to_string(c);
  if (leading_unit) return x;
  return to_string(c) + "⊗" + x;
}

}  // namespace

Polynomial::Polynomial(std::vector<Value> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("polynomial needs at least one coefficient");
}

Polynomial::Polynomial(std::initializer_list<Value> coeffs) : Polynomial(std::vector<Value>(coeffs)) {}

Polynomial Polynomial::monomial(std::size_t n) {
  std::vector<Value> c(n + 1);
  c[0] = Value::unit();
  return Polynomial(std::move(c));
}

std::size_t Factorization::degree() const {
  std::size_t d = xpower;
  for (const Root& r : factors) d += r.multiplicity;
  return d;
}

Value evaluate(const Polynomial& p, const Value& x) {
  const std::size_t n = p.degree();
  Value y = Value::epsilon();
  for (std::size_t j = 0; j <= n; ++j) y = oplus(y, otimes(p.coeff(j), power(x, n - j)));
  return y;
}

Polynomial canonicalize(const Polynomial& p) {
  require_monic(p, "canonicalize");
  const std::size_t n = p.degree();
  std::vector<Value> out(p.coeffs().begin(), p.coeffs().end());
  std::size_t i = 0;
  while (i < n) {
    const Rational& ci = p.coeff(i).finite();
    std::optional<Rational> best;
    std::size_t m = i;
    for (std::size_t k = i + 1; k <= n; ++k) {
      const Value& ck = p.coeff(k);
      if (ck.is_epsilon()) continue;
      Rational slope = (ck.finite() - ci) / Rational(static_cast<long>(k - i));
      // Ties go to the largest k so the pivot lands on the far end of a hull edge.
      if (!best || slope <= *best) {
        best = slope;
        m = k;
      }
    }
    if (!best) break;  // only ε to the right: an x^(n-i) factor
    for (std::size_t l = i + 1; l < m; ++l) {
      out[l] = Value(Rational(ci + *best * Rational(static_cast<long>(l - i))));
    }
    out[m] = p.coeff(m);
    i = m;
  }
  return Polynomial(std::move(out));
}

bool is_equivalent(const Polynomial& p, const Polynomial& q) {
  return p.degree() == q.degree() && normal_form(p) == normal_form(q);
}

Factorization factorize(const Polynomial& p) {
  require_monic(p, "factorize");
  const Polynomial c = canonicalize(p);
  const std::size_t n = c.degree();
  std::size_t last = 0;
  while (last < n && c.coeff(last + 1).is_finite()) ++last;

  Factorization f;
  f.xpower = n - last;
  for (std::size_t j = 1; j <= last; ++j) {
    Rational root = c.coeff(j).finite() - c.coeff(j - 1).finite();
    if (!f.factors.empty() && f.factors.back().value == root) {
      ++f.factors.back().multiplicity;
    } else {
      f.factors.push_back({root, 1});
    }
  }
  return f;
}

Polynomial expand(const Factorization& f) {
  std::vector<Root> roots = f.factors;
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) { return a.value < b.value; });
  std::vector<Value> c;
  c.reserve(f.degree() + 1);
  Rational acc = 0;
  c.push_back(Value(acc));
  for (const Root& r : roots) {
    for (std::size_t k = 0; k < r.multiplicity; ++k) {
      acc += r.value;
      c.push_back(Value(acc));
    }
  }
  c.resize(f.degree() + 1);
  return Polynomial(std::move(c));
}

std::vector<Breakpoint> breakpoints(const Polynomial& p) {
  const std::size_t j0 = leading_finite(p);
  if (j0 > p.degree()) return {};
  const Factorization f = factorize(monic_part(p, j0));
  std::vector<Breakpoint> out;
  std::size_t slope = p.degree() - j0;
  for (const Root& r : f.factors) {
    const Value y = evaluate(p, Value(r.value));
    out.push_back({r.value, y.finite(), slope, slope - r.multiplicity});
    slope -= r.multiplicity;
  }
  return out;
}

std::string to_string(const Polynomial& p) {
  const std::size_t n = p.degree();
  std::string s;
  for (std::size_t j = 0; j <= n; ++j) {
    const Value& c = p.coeff(j);
    if (c.is_epsilon()) continue;
    if (!s.empty()) s += " ⊕ ";
    s += term(c, n - j, j == 0 && c == Value::unit());
  }
  return s.empty() ? "inf" : s;
}

std::string to_string(const Factorization& f) {
  std::string s;
  auto append = [&s](const std::string& t) {
    if (!s.empty()) s += " ⊗ ";
    s += t;
  };
  for (const Root& r : f.factors) {
    std::string t = "(x⊕" + to_string(r.value) + ")";
    if (r.multiplicity > 1) t += "^" + std::to_string(r.multiplicity);
    append(t);
  }
  if (f.xpower == 1) append("x");
  if (f.xpower > 1) append("x^" + std::to_string(f.xpower));
  return s.empty() ? "0" : s;
}

}  // namespace minplus
