#pragma once

#include "pq/tensor_fields.hpp"

namespace pq {

/// Linear differential operator between density modules, in raw coordinate
/// form a3^{ijk} d_i d_j d_k + a2^{ij} d_i d_j + a1^i d_i + a0, mapping
/// weight-lambda densities to weight-mu densities. a2 and a3 are stored
/// fully symmetric, so operator equality is component equality.
///
/// The order-3 slot exists only as workspace for compositions; public
/// constructors reject nonzero a3.
class DiffOp {
public:
  /// Zero operator on an n-dimensional chart.
  DiffOp(std::size_t n, Weights w);

  /// Order <= 2 operator; a2 must already be symmetric.
  static DiffOp from_components(Weights w, PolyMatrix a2, std::vector<Polynomial> a1, Polynomial a0);
  static DiffOp first_order(Weights w, std::vector<Polynomial> a1, Polynomial a0);
  static DiffOp multiplication(Weights w, Polynomial a0);

  std::size_t dimension() const { return a1_.size(); }
  const Weights& weights() const { return weights_; }
  /// 0..3; the zero operator has order 0.
  int order() const;
  bool is_zero() const;

  const PolyCube& a3() const { return a3_; }
  const PolyMatrix& a2() const { return a2_; }
  const std::vector<Polynomial>& a1() const { return a1_; }
  const Polynomial& a0() const { return a0_; }

  /// Applies the operator to a density of matching weight and chart.
  Density apply(const Density& phi) const;

  DiffOp& operator+=(const DiffOp& other);
  DiffOp& operator-=(const DiffOp& other);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  DiffOp scaled(const Rational& s) const;

  friend bool operator==(const DiffOp&, const DiffOp&) = default;

  /// Operator composition outer . inner via the Leibniz expansion:
  /// apply(compose(A, B), phi) == apply(A, apply(B, phi)). Inner weights
  /// must chain and order(A) + order(B) must stay within 3.
  friend DiffOp compose(const DiffOp& outer, const DiffOp& inner);

private:
  DiffOp(Weights w, PolyCube a3, PolyMatrix a2, std::vector<Polynomial> a1, Polynomial a0);

  Weights weights_;
  PolyCube a3_;
  PolyMatrix a2_;
  std::vector<Polynomial> a1_;
  Polynomial a0_;
};

/// d_i X^i.
Polynomial divergence(const VectorField& x);

/// Lie bracket [X, Y]^i = X^k d_k Y^i - Y^k d_k X^i.
VectorField commutator(const VectorField& x, const VectorField& y);

/// Lie derivative of a weighted density:
/// L_X phi = X^i d_i phi + lambda (d_i X^i) phi.
Density lie_density(const VectorField& x, const Density& phi);

/// Lie derivative of a weighted symbol, degree by degree:
///   deg2: X^k d_k T^{ij} - T^{kj} d_k X^i - T^{ik} d_k X^j + delta (d_k X^k) T^{ij}
///   deg1: X^k d_k T^i - T^k d_k X^i + delta (d_k X^k) T^i
///   deg0: X^k d_k T^0 + delta (d_k X^k) T^0
SymbolField lie_symbol(const VectorField& x, const SymbolField& t);

/// Lie derivative of an operator of order <= 2 through the module action:
/// the commutator of A with the first-order Lie operators on source and
/// target densities. The order-3 coefficient of the commutator vanishes
/// identically; a nonzero value signals an implementation bug and throws.
DiffOp lie_operator(const VectorField& x, const DiffOp& a);

/// Top-degree coefficient as a symbol of weight mu - lambda.
SymbolField principal_symbol(const DiffOp& a);

} // namespace pq
