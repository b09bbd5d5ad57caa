#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pq/polynomial.hpp"

namespace pq {

/// The (lambda, mu) bi-weight of an operator module; delta is derived,
/// never stored, so it can not drift out of sync.
struct Weights {
  Rational lambda;
  Rational mu;
  Rational delta() const { return mu - lambda; }

  friend bool operator==(const Weights&, const Weights&) = default;
};

/// Dense n-by-n matrix of polynomials on an n-dimensional chart.
class PolyMatrix {
public:
  PolyMatrix() : n_(0) {}
  explicit PolyMatrix(std::size_t n) : n_(n), entries_(n * n, Polynomial(n)) {}

  std::size_t size() const { return n_; }
  const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  Polynomial& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  bool is_zero() const;
  bool is_symmetric() const;

  PolyMatrix& operator+=(const PolyMatrix& other);
  PolyMatrix& operator-=(const PolyMatrix& other);
  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
  PolyMatrix scaled(const Rational& s) const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

private:
  std::size_t n_;
  std::vector<Polynomial> entries_;
};

/// Dense n-by-n-by-n array of polynomials, indexed (i, j, k).
class PolyCube {
public:
  PolyCube() : n_(0) {}
  explicit PolyCube(std::size_t n) : n_(n), entries_(n * n * n, Polynomial(n)) {}

  std::size_t size() const { return n_; }
  const Polynomial& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return entries_[(i * n_ + j) * n_ + k];
  }
  Polynomial& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return entries_[(i * n_ + j) * n_ + k];
  }

  bool is_zero() const;

  friend bool operator==(const PolyCube&, const PolyCube&) = default;

private:
  std::size_t n_;
  std::vector<Polynomial> entries_;
};

/// (m + m^T) / 2.
PolyMatrix symmetrize2(const PolyMatrix& m);

/// Weighted scalar field: the local coefficient of a lambda-density.
struct Density {
  Rational weight;
  Polynomial coefficient;

  Density(Rational w, Polynomial coef) : weight(std::move(w)), coefficient(std::move(coef)) {}
  std::size_t dimension() const { return coefficient.dimension(); }

  friend bool operator==(const Density&, const Density&) = default;
};

/// Differential one-form, components omega_i.
struct OneForm {
  std::vector<Polynomial> components;

  explicit OneForm(std::size_t n) : components(n, Polynomial(n)) {}
  explicit OneForm(std::vector<Polynomial> comps);
  std::size_t dimension() const { return components.size(); }
  bool is_zero() const;

  friend bool operator==(const OneForm&, const OneForm&) = default;
};

/// Vector field X = X^i d/dx^i.
struct VectorField {
  std::vector<Polynomial> components;

  explicit VectorField(std::size_t n) : components(n, Polynomial(n)) {}
  explicit VectorField(std::vector<Polynomial> comps);
  std::size_t dimension() const { return components.size(); }

  friend bool operator==(const VectorField&, const VectorField&) = default;
};

/// Fiberwise-polynomial symbol of degree at most two with density weight
/// delta: T = T^{ij} xi_i xi_j + T^i xi_i + T^0. The degree-2 coefficient
/// matrix is kept symmetric; higher degrees are unrepresentable.
class SymbolField {
public:
  /// Validates symmetry of deg2 and that all parts share one chart dimension.
  SymbolField(Rational delta, PolyMatrix deg2, std::vector<Polynomial> deg1, Polynomial deg0);

  static SymbolField zero(std::size_t n, Rational delta);
  static SymbolField degree2(Rational delta, PolyMatrix deg2);
  static SymbolField degree1(Rational delta, std::vector<Polynomial> deg1, Polynomial deg0);
  /// Same as the validating constructor but symmetrizes deg2 instead of rejecting it.
  static SymbolField symmetrized(Rational delta, const PolyMatrix& deg2,
                                 std::vector<Polynomial> deg1, Polynomial deg0);

  std::size_t dimension() const { return deg1_.size(); }
  const Rational& delta() const { return delta_; }
  const PolyMatrix& deg2() const { return deg2_; }
  const std::vector<Polynomial>& deg1() const { return deg1_; }
  const Polynomial& deg0() const { return deg0_; }

  bool deg2_is_zero() const { return deg2_.is_zero(); }
  bool lower_is_zero() const;
  bool is_zero() const { return deg2_is_zero() && lower_is_zero(); }

  SymbolField& operator+=(const SymbolField& other);
  friend SymbolField operator+(SymbolField a, const SymbolField& b) { return a += b; }
  SymbolField scaled(const Rational& s) const;

  friend bool operator==(const SymbolField&, const SymbolField&) = default;

private:
  Rational delta_;
  PolyMatrix deg2_;
  std::vector<Polynomial> deg1_;
  Polynomial deg0_;
};

/// Direct-sum decomposition into the degree-2 part and the degree-<=1 part,
/// both carrying the same weight. Adding the two halves restores the input.
std::pair<SymbolField, SymbolField> symbol_split(const SymbolField& t);

/// Torsion-free affine connection: Christoffel symbols Gamma^i_{jk},
/// symmetric in the lower pair (j, k).
class Connection {
public:
  /// Zero connection on an n-dimensional chart.
  explicit Connection(std::size_t n) : gamma_(n) {}
  /// Validates lower-index symmetry; throws otherwise.
  explicit Connection(PolyCube gamma);
  /// Symmetrizes the lower pair instead of rejecting.
  static Connection symmetrized(const PolyCube& gamma);

  std::size_t dimension() const { return gamma_.size(); }
  /// Gamma^i_{jk} (0-based indices).
  const Polynomial& gamma(std::size_t i, std::size_t j, std::size_t k) const { return gamma_(i, j, k); }
  const PolyCube& christoffel() const { return gamma_; }
  bool is_zero() const { return gamma_.is_zero(); }

  friend bool operator==(const Connection&, const Connection&) = default;

private:
  PolyCube gamma_;
};

/// Trace Gamma_i = Gamma^l_{il}.
OneForm connection_trace(const Connection& g);

/// Coefficients of the quantization maps; absent fields were either not
/// requested or have no generic value at the given weights.
struct QuantCoeffs {
  std::optional<Rational> alpha;
  std::optional<Rational> beta1;
  std::optional<Rational> beta2;
  std::optional<Rational> beta3;

  static QuantCoeffs betas_only(Rational b1, Rational b2, Rational b3) {
    return {std::nullopt, std::move(b1), std::move(b2), std::move(b3)};
  }

  friend bool operator==(const QuantCoeffs&, const QuantCoeffs&) = default;
};

} // namespace pq
