#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "hyperbelief/eps_poly.hpp"
#include "hyperbelief/rational.hpp"

namespace hyperbelief {

/// Element of the ordered field Q(e), with e a positive infinitesimal.
///
/// Values are ratios of polynomials in e kept in canonical form: the
/// numerator and denominator are coprime over Q and the denominator's
/// lowest-order coefficient is 1. Canonical form is unique, so equality is
/// structural. The order is the one in which e is positive but below every
/// positive rational: the sign of a value is the sign of the lowest-order
/// coefficient of its numerator.
///
/// Immutable once constructed.
class Hyperreal {
 public:
  Hyperreal() : den_(Rational(1)) {}
  Hyperreal(const Rational& value);  // NOLINT(google-explicit-constructor)
  Hyperreal(long value) : Hyperreal(Rational(value)) {}  // NOLINT
  Hyperreal(int value) : Hyperreal(Rational(value)) {}   // NOLINT
  Hyperreal(const EpsPoly& poly);                       // NOLINT
  Hyperreal(EpsPoly num, EpsPoly den);

  /// The infinitesimal itself, or e^k.
  static Hyperreal eps(EpsPoly::Exponent power = 1);

  const EpsPoly& num() const { return num_; }
  const EpsPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  int sign() const;

  Hyperreal operator-() const;
  Hyperreal& operator+=(const Hyperreal& other);
  Hyperreal& operator-=(const Hyperreal& other);
  Hyperreal& operator*=(const Hyperreal& other);
  Hyperreal& operator/=(const Hyperreal& other);

  friend Hyperreal operator+(Hyperreal a, const Hyperreal& b) { return a += b; }
  friend Hyperreal operator-(Hyperreal a, const Hyperreal& b) { return a -= b; }
  friend Hyperreal operator*(Hyperreal a, const Hyperreal& b) { return a *= b; }
  friend Hyperreal operator/(Hyperreal a, const Hyperreal& b) { return a /= b; }

  friend bool operator==(const Hyperreal&, const Hyperreal&) = default;
  friend std::strong_ordering operator<=>(const Hyperreal& a,
                                          const Hyperreal& b);

  /// Nonnegative integer power.
  Hyperreal pow(unsigned exponent) const;

  /// Exact value after substituting a rational for e. Throws DomainError if
  /// the denominator vanishes there.
  Rational evaluate(const Rational& at) const;

  /// Text in the grammar accepted by parse; `symbol` names the infinitesimal.
  std::string to_string(char symbol = 'e') const;

  /// Parses the textual grammar produced by to_string (see README).
  static Hyperreal parse(std::string_view text);

 private:
  void canonicalize();

  EpsPoly num_;
  EpsPoly den_;
};

/// Three-way comparison in the ordered field.
std::strong_ordering compare(const Hyperreal& a, const Hyperreal& b);

/// Order of magnitude: v(num) - v(den). Throws DomainError on zero.
std::int64_t valuation(const Hyperreal& a);

/// Coefficient of the lowest-order term: a = c * e^valuation(a) + ...
Rational leading_coefficient(const Hyperreal& a);

/// Zero, or finite valuation >= 0.
bool is_limited(const Hyperreal& a);
bool is_infinitesimal(const Hyperreal& a);

/// Standard part. Throws DomainError on unlimited input.
Rational st(const Hyperreal& a);

std::ostream& operator<<(std::ostream& os, const Hyperreal& a);

}  // namespace hyperbelief
