#include "pq/tensor_fields.hpp"

namespace pq {

namespace {

const Rational kHalf(1, 2);

void check_components(const std::vector<Polynomial>& comps, const char* what) {
  if (comps.empty()) throw Error(std::string(what) + ": dimension must be positive");
  for (const auto& c : comps) {
    if (c.dimension() != comps.size())
      throw DimensionError(std::string(what) + ": component dimension != component count");
  }
}

} // namespace

bool PolyMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool PolyMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& other) {
  if (n_ != other.n_) throw DimensionError("matrix: dimension mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& other) {
  if (n_ != other.n_) throw DimensionError("matrix: dimension mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

PolyMatrix PolyMatrix::scaled(const Rational& s) const {
  PolyMatrix out = *this;
  for (auto& e : out.entries_) e *= s;
  return out;
}

bool PolyCube::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

PolyMatrix symmetrize2(const PolyMatrix& m) {
  PolyMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      out(i, j) = (m(i, j) + m(j, i)) * kHalf;
  return out;
}

OneForm::OneForm(std::vector<Polynomial> comps) : components(std::move(comps)) {
  check_components(components, "one-form");
}

bool OneForm::is_zero() const {
  for (const auto& c : components)
    if (!c.is_zero()) return false;
  return true;
}

VectorField::VectorField(std::vector<Polynomial> comps) : components(std::move(comps)) {
  check_components(components, "vector field");
}

SymbolField::SymbolField(Rational delta, PolyMatrix deg2, std::vector<Polynomial> deg1, Polynomial deg0)
    : delta_(std::move(delta)), deg2_(std::move(deg2)), deg1_(std::move(deg1)), deg0_(std::move(deg0)) {
  check_components(deg1_, "symbol");
  const std::size_t n = deg1_.size();
  if (deg2_.size() != n || deg0_.dimension() != n)
    throw DimensionError("symbol: parts live on different charts");
  if (!deg2_.is_symmetric())
    throw Error("symbol: degree-2 coefficients must be symmetric (or use SymbolField::symmetrized)");
}

SymbolField SymbolField::zero(std::size_t n, Rational delta) {
  return SymbolField(std::move(delta), PolyMatrix(n), std::vector<Polynomial>(n, Polynomial(n)),
                     Polynomial(n));
}

SymbolField SymbolField::degree2(Rational delta, PolyMatrix deg2) {
  const std::size_t n = deg2.size();
  return SymbolField(std::move(delta), std::move(deg2), std::vector<Polynomial>(n, Polynomial(n)),
                     Polynomial(n));
}

SymbolField SymbolField::degree1(Rational delta, std::vector<Polynomial> deg1, Polynomial deg0) {
  const std::size_t n = deg1.size();
  return SymbolField(std::move(delta), PolyMatrix(n), std::move(deg1), std::move(deg0));
}

SymbolField SymbolField::symmetrized(Rational delta, const PolyMatrix& deg2,
                                     std::vector<Polynomial> deg1, Polynomial deg0) {
  return SymbolField(std::move(delta), symmetrize2(deg2), std::move(deg1), std::move(deg0));
}

bool SymbolField::lower_is_zero() const {
  if (!deg0_.is_zero()) return false;
  for (const auto& c : deg1_)
    if (!c.is_zero()) return false;
  return true;
}

SymbolField& SymbolField::operator+=(const SymbolField& other) {
  if (dimension() != other.dimension()) throw DimensionError("symbol: dimension mismatch");
  if (delta_ != other.delta_) throw WeightError("symbol: weight mismatch");
  deg2_ += other.deg2_;
  for (std::size_t i = 0; i < deg1_.size(); ++i) deg1_[i] += other.deg1_[i];
  deg0_ += other.deg0_;
  return *this;
}

SymbolField SymbolField::scaled(const Rational& s) const {
  SymbolField out = *this;
  out.deg2_ = out.deg2_.scaled(s);
  for (auto& c : out.deg1_) c *= s;
  out.deg0_ *= s;
  return out;
}

std::pair<SymbolField, SymbolField> symbol_split(const SymbolField& t) {
  return {SymbolField::degree2(t.delta(), t.deg2()),
          SymbolField::degree1(t.delta(), t.deg1(), t.deg0())};
}

Connection::Connection(PolyCube gamma) : gamma_(std::move(gamma)) {
  if (gamma_.size() == 0) throw Error("connection: dimension must be positive");
  const std::size_t n = gamma_.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (gamma_(i, j, k) != gamma_(i, k, j))
          throw Error("connection: Christoffel symbols must be symmetric in the lower pair "
                      "(or use Connection::symmetrized)");
}

Connection Connection::symmetrized(const PolyCube& gamma) {
  PolyCube sym(gamma.size());
  for (std::size_t i = 0; i < gamma.size(); ++i)
    for (std::size_t j = 0; j < gamma.size(); ++j)
      for (std::size_t k = 0; k < gamma.size(); ++k)
        sym(i, j, k) = (gamma(i, j, k) + gamma(i, k, j)) * kHalf;
  return Connection(std::move(sym));
}

OneForm connection_trace(const Connection& g) {
  const std::size_t n = g.dimension();
  OneForm trace(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) trace.components[i] += g.gamma(l, i, l);
  return trace;
}

} // namespace pq
