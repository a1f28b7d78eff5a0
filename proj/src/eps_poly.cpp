#include "hyperbelief/eps_poly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "hyperbelief/errors.hpp"

namespace hyperbelief {

EpsPoly::EpsPoly(const Rational& constant) {
  if (constant != 0) {
    terms_.push_back({0, constant});
    terms_.back().coefficient.canonicalize();
  }
}

EpsPoly::EpsPoly(std::initializer_list<std::pair<Exponent, Rational>> terms) {
  std::vector<Term> raw;
  raw.reserve(terms.size());
  for (const auto& [exp, coef] : terms) raw.push_back({exp, coef});
  *this = from_terms(std::move(raw));
}

EpsPoly EpsPoly::from_terms(std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) {
                     return a.exponent < b.exponent;
                   });
  EpsPoly out;
  for (auto& t : terms) {
    t.coefficient.canonicalize();
    if (!out.terms_.empty() && out.terms_.back().exponent == t.exponent) {
      out.terms_.back().coefficient += t.coefficient;
      if (out.terms_.back().coefficient == 0) out.terms_.pop_back();
    } else if (t.coefficient != 0) {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

EpsPoly EpsPoly::monomial(const Rational& coefficient, Exponent exponent) {
  EpsPoly out;
  if (coefficient != 0) {
    out.terms_.push_back({exponent, coefficient});
    out.terms_.back().coefficient.canonicalize();
  }
  return out;
}

bool EpsPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent == 0);
}

std::optional<EpsPoly::Exponent> EpsPoly::valuation() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().exponent;
}

EpsPoly::Exponent EpsPoly::degree() const {
  return terms_.empty() ? 0 : terms_.back().exponent;
}

Rational EpsPoly::coefficient(Exponent exponent) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), exponent,
      [](const Term& t, Exponent e) { return t.exponent < e; });
  if (it != terms_.end() && it->exponent == exponent) return it->coefficient;
  return Rational(0);
}

const Rational& EpsPoly::lowest_coefficient() const {
  assert(!terms_.empty());
  return terms_.front().coefficient;
}

const Rational& EpsPoly::leading_coefficient() const {
  assert(!terms_.empty());
  return terms_.back().coefficient;
}

EpsPoly EpsPoly::operator-() const {
  EpsPoly out = *this;
  for (auto& t : out.terms_) t.coefficient = -t.coefficient;
  return out;
}

namespace {

// Merge of two ascending term lists, b scaled by `sign`.
std::vector<EpsPoly::Term> merge(const std::vector<EpsPoly::Term>& a,
                                 const std::vector<EpsPoly::Term>& b,
                                 int sign) {
  std::vector<EpsPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exponent < b[j].exponent)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exponent < a[i].exponent) {
      out.push_back({b[j].exponent,
                     sign > 0 ? b[j].coefficient : Rational(-b[j].coefficient)});
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(a[i].coefficient + b[j].coefficient)
                            : Rational(a[i].coefficient - b[j].coefficient);
      if (c != 0) out.push_back({a[i].exponent, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

EpsPoly& EpsPoly::operator+=(const EpsPoly& other) {
  terms_ = merge(terms_, other.terms_, +1);
  return *this;
}

EpsPoly& EpsPoly::operator-=(const EpsPoly& other) {
  terms_ = merge(terms_, other.terms_, -1);
  return *this;
}

EpsPoly operator*(const EpsPoly& a, const EpsPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<EpsPoly::Term> raw;
  raw.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      raw.push_back({x.exponent + y.exponent,
                     Rational(x.coefficient * y.coefficient)});
    }
  }
  return EpsPoly::from_terms(std::move(raw));
}

EpsPoly& EpsPoly::operator*=(const EpsPoly& other) {
  *this = *this * other;
  return *this;
}

EpsPoly& EpsPoly::operator*=(const Rational& factor) {
  if (factor == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coefficient *= factor;
  }
  return *this;
}

std::pair<EpsPoly, EpsPoly> EpsPoly::divmod(const EpsPoly& divisor) const {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  EpsPoly quotient;
  EpsPoly remainder = *this;
  const Exponent d = divisor.degree();
  const Rational& lead = divisor.leading_coefficient();
  std::vector<Term> qterms;
  while (!remainder.is_zero() && remainder.degree() >= d) {
    const Exponent shift = remainder.degree() - d;
    const Rational factor = remainder.leading_coefficient() / lead;
    qterms.push_back({shift, factor});
    remainder -= divisor * monomial(factor, shift);
  }
  quotient = from_terms(std::move(qterms));
  return {std::move(quotient), std::move(remainder)};
}

EpsPoly EpsPoly::shift_down(Exponent k) const {
  EpsPoly out = *this;
  for (auto& t : out.terms_) {
    assert(t.exponent >= k);
    t.exponent -= k;
  }
  return out;
}

EpsPoly EpsPoly::monic() const {
  if (is_zero()) return {};
  EpsPoly out = *this;
  out *= Rational(1) / leading_coefficient();
  return out;
}

Rational EpsPoly::evaluate(const Rational& at) const {
  // Horner over the sparse terms, highest exponent first.
  Rational acc = 0;
  Exponent current = degree();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    for (; current > it->exponent; --current) acc *= at;
    acc += it->coefficient;
  }
  for (; current > 0; --current) acc *= at;
  return acc;
}

std::string EpsPoly::to_string(bool compact, char symbol) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coefficient < 0;
    const Rational magnitude = abs(t.coefficient);
    if (first) {
      if (negative) os << '-';
    } else if (compact) {
      os << (negative ? '-' : '+');
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (t.exponent == 0) {
      os << magnitude.get_str();
      continue;
    }
    if (magnitude != 1) {
      if (magnitude.get_den() == 1) {
        os << magnitude.get_str() << '*';
      } else {
        os << '(' << magnitude.get_str() << ")*";
      }
    }
    os << symbol;
    if (t.exponent != 1) os << '^' << t.exponent;
  }
  return os.str();
}

EpsPoly gcd(EpsPoly a, EpsPoly b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    EpsPoly r = a.divmod(b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

}  // namespace hyperbelief
