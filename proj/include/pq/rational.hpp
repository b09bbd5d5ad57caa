#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "pq/errors.hpp"

namespace pq {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Kept in lowest terms with a positive denominator,
/// so equality is plain value equality.
class Rational {
public:
  Rational() = default;
  Rational(long long value) : v_(value) {} // NOLINT: integers embed naturally
  Rational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) throw Error("rational: zero denominator");
    v_ = Backing(numerator, denominator);
  }

  /// Parses "p/q" or "p" with decimal integers; reduces to canonical form.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }
  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }

  /// "p/q" with "/q" omitted when q == 1.
  std::string str() const { return v_.str(); }

  Rational operator-() const { return Rational(Backing(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (b.v_ < a.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

private:
  using Backing = boost::multiprecision::cpp_rational;
  explicit Rational(Backing v) : v_(std::move(v)) {}
  Backing v_;
};

inline Rational Rational::parse(std::string_view text) {
  // Strict decimal form: -?digits(/digits)?, nonzero denominator.
  auto bad = [&] { return SchemaError("invalid rational literal: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  std::size_t i = 0;
  if (text[i] == '-') ++i;
  std::size_t num_begin = i;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
  if (i == num_begin) throw bad();
  BigInt num(std::string(text.substr(0, i)));
  if (i == text.size()) return Rational(num, 1);
  if (text[i] != '/') throw bad();
  ++i;
  std::size_t den_begin = i;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
  if (i == den_begin || i != text.size()) throw bad();
  BigInt den(std::string(text.substr(den_begin)));
  if (den == 0) throw bad();
  return Rational(num, den);
}

} // namespace pq
