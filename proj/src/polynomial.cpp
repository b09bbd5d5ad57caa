#include "pq/polynomial.hpp"

#include <utility>

namespace pq {

Polynomial::Polynomial(std::size_t dimension) : dimension_(dimension) {
  if (dimension == 0) throw Error("polynomial: dimension must be positive");
}

Polynomial Polynomial::constant(std::size_t dimension, Rational value) {
  Polynomial p(dimension);
  p.add_term(Exponents(dimension, 0), value);
  return p;
}

Polynomial Polynomial::variable(std::size_t dimension, std::size_t var) {
  if (var >= dimension) throw Error("polynomial: variable index out of range");
  Exponents e(dimension, 0);
  e[var] = 1;
  return monomial(dimension, std::move(e), 1);
}

Polynomial Polynomial::monomial(std::size_t dimension, Exponents exponents, Rational coefficient) {
  if (exponents.size() != dimension) throw DimensionError("polynomial: exponent length != dimension");
  Polynomial p(dimension);
  p.add_term(exponents, coefficient);
  return p;
}

Rational Polynomial::coefficient(const Exponents& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponents& exponents, const Rational& coefficient) {
  if (exponents.size() != dimension_) throw DimensionError("polynomial: exponent length != dimension");
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exponents, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::check_same_chart(const Polynomial& other) const {
  if (dimension_ != other.dimension_) throw DimensionError("polynomial: dimension mismatch");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_same_chart(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_same_chart(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_chart(b);
  Polynomial out(a.dimension_);
  Exponents e(a.dimension_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(dimension_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Polynomial Polynomial::partial(std::size_t var) const {
  if (var >= dimension_) throw Error("polynomial: derivative index out of range");
  Polynomial out(dimension_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    --d[var];
    out.add_term(d, c * Rational(static_cast<long long>(e[var])));
  }
  return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != dimension_) throw DimensionError("polynomial: evaluation point length != dimension");
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < dimension_; ++i) {
      for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

} // namespace pq
