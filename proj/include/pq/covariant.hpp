#pragma once

#include "pq/tensor_fields.hpp"

namespace pq {

/// One-form with values in weighted densities, e.g. the covariant gradient
/// of a density.
struct CovectorDensity {
  Rational weight;
  std::vector<Polynomial> components;

  CovectorDensity(Rational w, std::vector<Polynomial> comps);
  std::size_t dimension() const { return components.size(); }

  friend bool operator==(const CovectorDensity&, const CovectorDensity&) = default;
};

/// Ricci tensor of an affine connection. Not symmetric in general.
struct RicciTensor {
  PolyMatrix components;

  friend bool operator==(const RicciTensor&, const RicciTensor&) = default;
};

/// nabla_i phi = d_i phi - lambda Gamma_i phi.
CovectorDensity nabla_density(const Connection& g, const Density& phi);

/// Result (i, j) = nabla_i theta_j = d_i theta_j - Gamma^k_{ij} theta_k - lambda Gamma_i theta_j.
PolyMatrix nabla_covector_density(const Connection& g, const CovectorDensity& theta);

/// Covariant derivative of a weighted vector field.
/// Result (j, i) = nabla_j T^i = d_j T^i + Gamma^i_{jl} T^l - weight * Gamma_j T^i.
PolyMatrix nabla_vector(const Connection& g, const std::vector<Polynomial>& t, const Rational& weight);

/// Covariant derivative of a weighted symmetric 2-contravariant field.
/// Result (k, i, j) = nabla_k T^{ij}
///   = d_k T^{ij} + Gamma^i_{lk} T^{lj} + Gamma^j_{lk} T^{il} - weight * Gamma_k T^{ij};
/// symmetric in (i, j).
PolyCube nabla_sym2(const Connection& g, const PolyMatrix& t, const Rational& weight);

/// The projectively equivalent connection
/// Gamma~^i_{jk} = Gamma^i_{jk} + delta^i_j omega_k + delta^i_k omega_j.
Connection projective_shift(const Connection& g, const OneForm& omega);

/// The pure-trace connection Gamma^i_{jk} = (delta^i_j theta_k + delta^i_k theta_j) / (n+1);
/// equal to projective_shift(0, theta / (n+1)) and has trace theta.
Connection projectively_flat_connection(const OneForm& theta);

/// Ricci curvature with the contraction
///   R_ij = d_i Gamma_j - d_k Gamma^k_{ij} + Gamma^k_{il} Gamma^l_{kj} - Gamma_l Gamma^l_{ij},
/// where Gamma_j = Gamma^k_{kj}. Of the two standard contractions of the
/// curvature (they differ by sign), this is the one under which the
/// second-order quantization map is invariant across projectively
/// equivalent connections; flipping the sign breaks that invariance.
RicciTensor ricci(const Connection& g);

} // namespace pq
