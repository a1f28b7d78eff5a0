#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperbelief/rational.hpp"

namespace hyperbelief {

/// Polynomial in the infinitesimal e with rational coefficients.
///
/// Stored sparsely as (exponent, coefficient) pairs with strictly ascending
/// exponents and no zero coefficients; the empty sequence is the zero
/// polynomial.
class EpsPoly {
 public:
  using Exponent = std::uint32_t;

  struct Term {
    Exponent exponent;
    Rational coefficient;

    friend bool operator==(const Term&, const Term&) = default;
  };

  EpsPoly() = default;
  EpsPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  EpsPoly(std::initializer_list<std::pair<Exponent, Rational>> terms);

  /// Builds from arbitrary (exponent, coefficient) pairs; merges duplicates
  /// and drops zeros.
  static EpsPoly from_terms(std::vector<Term> terms);
  static EpsPoly monomial(const Rational& coefficient, Exponent exponent);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// Lowest exponent with a nonzero coefficient. Zero polynomial has none.
  std::optional<Exponent> valuation() const;
  Exponent degree() const;  // 0 for the zero polynomial
  Rational coefficient(Exponent exponent) const;
  const Rational& lowest_coefficient() const;
  const Rational& leading_coefficient() const;

  EpsPoly operator-() const;
  EpsPoly& operator+=(const EpsPoly& other);
  EpsPoly& operator-=(const EpsPoly& other);
  EpsPoly& operator*=(const EpsPoly& other);
  EpsPoly& operator*=(const Rational& factor);

  friend EpsPoly operator+(EpsPoly a, const EpsPoly& b) { return a += b; }
  friend EpsPoly operator-(EpsPoly a, const EpsPoly& b) { return a -= b; }
  friend EpsPoly operator*(const EpsPoly& a, const EpsPoly& b);
  friend EpsPoly operator*(EpsPoly a, const Rational& b) { return a *= b; }
  friend bool operator==(const EpsPoly&, const EpsPoly&) = default;

  /// Euclidean division over Q: returns (quotient, remainder) with
  /// deg(remainder) < deg(divisor). Throws DomainError on a zero divisor.
  std::pair<EpsPoly, EpsPoly> divmod(const EpsPoly& divisor) const;

  /// Divides out the factor e^k. Requires k <= valuation().
  EpsPoly shift_down(Exponent k) const;

  /// Scales so the highest-degree coefficient is 1 (zero stays zero).
  EpsPoly monic() const;

  Rational evaluate(const Rational& at) const;

  /// Human-readable form, e.g. "(1/4)*e^3 + e^5" or "1 - e". `compact` drops
  /// the spaces around the term separators. `symbol` names the variable.
  std::string to_string(bool compact = false, char symbol = 'e') const;

 private:
  std::vector<Term> terms_;
};

/// Monic greatest common divisor over Q; gcd(0, 0) = 0.
EpsPoly gcd(EpsPoly a, EpsPoly b);

}  // namespace hyperbelief
