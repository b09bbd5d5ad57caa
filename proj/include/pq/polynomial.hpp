#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "pq/rational.hpp"

namespace pq {

/// Exponent multi-index: one entry per coordinate variable.
using Exponents = std::vector<unsigned>;

/// Exact multivariate polynomial over the rationals in a fixed number of
/// coordinate variables. The term map never stores zero coefficients, so
/// equality of values is equality of representations. All operations are
/// pure; the chart dimension is fixed per instance.
class Polynomial {
public:
  using TermMap = std::map<Exponents, Rational>;

  /// Zero polynomial in `dimension` variables.
  explicit Polynomial(std::size_t dimension);

  static Polynomial constant(std::size_t dimension, Rational value);
  /// The coordinate function x_var (0-based variable index).
  static Polynomial variable(std::size_t dimension, std::size_t var);
  static Polynomial monomial(std::size_t dimension, Exponents exponents, Rational coefficient);

  std::size_t dimension() const { return dimension_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  /// Coefficient of the given exponent multi-index (zero when absent).
  Rational coefficient(const Exponents& exponents) const;

  /// Adds `coefficient * x^exponents`, erasing the term if it cancels.
  void add_term(const Exponents& exponents, const Rational& coefficient);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other) { *this = *this * other; return *this; }
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial p, const Rational& s) { return p *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial p) { return p *= s; }
  Polynomial operator-() const;

  /// Formal partial derivative with respect to variable `var` (0-based).
  Polynomial partial(std::size_t var) const;

  /// Exact evaluation at a rational point.
  Rational evaluate(std::span<const Rational> point) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

private:
  void check_same_chart(const Polynomial& other) const;

  std::size_t dimension_;
  TermMap terms_;
};

} // namespace pq
