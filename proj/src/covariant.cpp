#include "pq/covariant.hpp"

namespace pq {

namespace {

void check_dims(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw DimensionError(std::string(what) + ": dimension mismatch");
}

} // namespace

CovectorDensity::CovectorDensity(Rational w, std::vector<Polynomial> comps)
    : weight(std::move(w)), components(std::move(comps)) {
  if (components.empty()) throw Error("covector density: dimension must be positive");
  for (const auto& c : components)
    check_dims(c.dimension(), components.size(), "covector density");
}

CovectorDensity nabla_density(const Connection& g, const Density& phi) {
  const std::size_t n = g.dimension();
  check_dims(n, phi.dimension(), "nabla_density");
  const OneForm trace = connection_trace(g);
  std::vector<Polynomial> comps;
  comps.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    comps.push_back(phi.coefficient.partial(i) - phi.weight * trace.components[i] * phi.coefficient);
  return CovectorDensity(phi.weight, std::move(comps));
}

PolyMatrix nabla_covector_density(const Connection& g, const CovectorDensity& theta) {
  const std::size_t n = g.dimension();
  check_dims(n, theta.dimension(), "nabla_covector_density");
  const OneForm trace = connection_trace(g);
  PolyMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial e = theta.components[j].partial(i);
      for (std::size_t k = 0; k < n; ++k) e -= g.gamma(k, i, j) * theta.components[k];
      e -= theta.weight * trace.components[i] * theta.components[j];
      out(i, j) = std::move(e);
    }
  }
  return out;
}

PolyMatrix nabla_vector(const Connection& g, const std::vector<Polynomial>& t, const Rational& weight) {
  const std::size_t n = g.dimension();
  check_dims(n, t.size(), "nabla_vector");
  const OneForm trace = connection_trace(g);
  PolyMatrix out(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      Polynomial e = t[i].partial(j);
      for (std::size_t l = 0; l < n; ++l) e += g.gamma(i, j, l) * t[l];
      e -= weight * trace.components[j] * t[i];
      out(j, i) = std::move(e);
    }
  }
  return out;
}

PolyCube nabla_sym2(const Connection& g, const PolyMatrix& t, const Rational& weight) {
  const std::size_t n = g.dimension();
  check_dims(n, t.size(), "nabla_sym2");
  const OneForm trace = connection_trace(g);
  PolyCube out(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Polynomial e = t(i, j).partial(k);
        for (std::size_t l = 0; l < n; ++l) {
          e += g.gamma(i, l, k) * t(l, j);
          e += g.gamma(j, l, k) * t(i, l);
        }
        e -= weight * trace.components[k] * t(i, j);
        out(k, i, j) = std::move(e);
      }
    }
  }
  return out;
}

Connection projective_shift(const Connection& g, const OneForm& omega) {
  const std::size_t n = g.dimension();
  check_dims(n, omega.dimension(), "projective_shift");
  PolyCube gamma = g.christoffel();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      gamma(i, i, k) += omega.components[k];
      gamma(i, k, i) += omega.components[k];
    }
  }
  return Connection(std::move(gamma));
}

Connection projectively_flat_connection(const OneForm& theta) {
  const std::size_t n = theta.dimension();
  const Rational scale(1, static_cast<long long>(n) + 1);
  OneForm scaled(n);
  for (std::size_t i = 0; i < n; ++i) scaled.components[i] = theta.components[i] * scale;
  return projective_shift(Connection(n), scaled);
}

RicciTensor ricci(const Connection& g) {
  const std::size_t n = g.dimension();
  const OneForm trace = connection_trace(g);
  PolyMatrix r(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial e = trace.components[j].partial(i);
      for (std::size_t k = 0; k < n; ++k) {
        e -= g.gamma(k, i, j).partial(k);
        e -= trace.components[k] * g.gamma(k, i, j);
        for (std::size_t l = 0; l < n; ++l) e += g.gamma(k, i, l) * g.gamma(l, k, j);
      }
      r(i, j) = std::move(e);
    }
  }
  return RicciTensor{std::move(r)};
}

} // namespace pq
