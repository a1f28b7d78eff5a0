#include "hyperbelief/hyperreal.hpp"

#include <cctype>
#include <ostream>
#include <string>

#include "hyperbelief/errors.hpp"

namespace hyperbelief {

Hyperreal::Hyperreal(const Rational& value) : num_(value), den_(Rational(1)) {}

Hyperreal::Hyperreal(const EpsPoly& poly) : num_(poly), den_(Rational(1)) {}

Hyperreal::Hyperreal(EpsPoly num, EpsPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

Hyperreal Hyperreal::eps(EpsPoly::Exponent power) {
  return Hyperreal(EpsPoly::monomial(Rational(1), power));
}

void Hyperreal::canonicalize() {
  if (den_.is_zero()) throw DomainError("hyperreal with zero denominator");
  if (num_.is_zero()) {
    den_ = EpsPoly(Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    const EpsPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = num_.divmod(g).first;
      den_ = den_.divmod(g).first;
    }
  }
  const Rational lowest = den_.lowest_coefficient();
  if (lowest != 1) {
    const Rational scale = Rational(1) / lowest;
    num_ *= scale;
    den_ *= scale;
  }
}

int Hyperreal::sign() const {
  return is_zero() ? 0 : sgn(num_.lowest_coefficient());
}

Hyperreal Hyperreal::operator-() const {
  Hyperreal out = *this;
  out.num_ = -out.num_;
  return out;
}

Hyperreal& Hyperreal::operator+=(const Hyperreal& other) {
  if (other.is_zero()) return *this;
  if (den_ == other.den_) {
    num_ += other.num_;
  } else {
    num_ = num_ * other.den_ + other.num_ * den_;
    den_ *= other.den_;
  }
  canonicalize();
  return *this;
}

Hyperreal& Hyperreal::operator-=(const Hyperreal& other) {
  return *this += -other;
}

Hyperreal& Hyperreal::operator*=(const Hyperreal& other) {
  num_ *= other.num_;
  den_ *= other.den_;
  canonicalize();
  return *this;
}

Hyperreal& Hyperreal::operator/=(const Hyperreal& other) {
  if (other.is_zero()) throw DomainError("hyperreal division by zero");
  num_ *= other.den_;
  den_ *= other.num_;
  canonicalize();
  return *this;
}

std::strong_ordering operator<=>(const Hyperreal& a, const Hyperreal& b) {
  const int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Hyperreal Hyperreal::pow(unsigned exponent) const {
  Hyperreal result(1);
  Hyperreal base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

Rational Hyperreal::evaluate(const Rational& at) const {
  const Rational d = den_.evaluate(at);
  if (d == 0) throw DomainError("denominator vanishes at substituted value");
  return num_.evaluate(at) / d;
}

std::string Hyperreal::to_string(char symbol) const {
  if (den_.is_constant()) return num_.to_string(false, symbol);
  std::string out;
  const auto& nt = num_.terms();
  const bool bare_num =
      nt.size() == 1 && nt[0].coefficient.get_den() == 1;
  out += bare_num ? num_.to_string(true, symbol)
                  : "(" + num_.to_string(true, symbol) + ")";
  out += '/';
  out += den_.terms().size() == 1 ? den_.to_string(true, symbol)
                                  : "(" + den_.to_string(true, symbol) + ")";
  return out;
}

namespace {

// Recursive-descent parser over Hyperreal arithmetic:
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' integer)?
//   primary := integer | 'e' | 'g' | '(' expr ')'
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Hyperreal parse() {
    Hyperreal value = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ConfigError("hyperreal parse error at offset " +
                      std::to_string(pos_) + " (" + what + "): '" +
                      std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Integer integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail("expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Hyperreal expr() {
    Hyperreal value = term();
    for (;;) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  Hyperreal term() {
    Hyperreal value = unary();
    for (;;) {
      if (accept('*')) {
        value *= unary();
      } else if (accept('/')) {
        Hyperreal divisor = unary();
        if (divisor.is_zero()) fail("division by zero");
        value /= divisor;
      } else {
        return value;
      }
    }
  }

  Hyperreal unary() {
    if (accept('-')) return -unary();
    return power();
  }

  Hyperreal power() {
    Hyperreal base = primary();
    if (accept('^')) {
      const Integer exponent = integer();
      if (!exponent.fits_uint_p() || exponent > 4096) fail("exponent too large");
      return base.pow(static_cast<unsigned>(exponent.get_ui()));
    }
    return base;
  }

  Hyperreal primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == 'e' || c == 'g') {
      ++pos_;
      return Hyperreal::eps();
    }
    if (c == '(') {
      ++pos_;
      Hyperreal inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Hyperreal(Rational(integer()));
    }
    fail("unexpected character");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Hyperreal Hyperreal::parse(std::string_view text) { return Parser(text).parse(); }

std::strong_ordering compare(const Hyperreal& a, const Hyperreal& b) {
  return a <=> b;
}

std::int64_t valuation(const Hyperreal& a) {
  if (a.is_zero()) throw DomainError("valuation of zero");
  return static_cast<std::int64_t>(*a.num().valuation()) -
         static_cast<std::int64_t>(*a.den().valuation());
}

Rational leading_coefficient(const Hyperreal& a) {
  if (a.is_zero()) return Rational(0);
  return a.num().lowest_coefficient() / a.den().lowest_coefficient();
}

bool is_limited(const Hyperreal& a) { return a.is_zero() || valuation(a) >= 0; }

bool is_infinitesimal(const Hyperreal& a) {
  return a.is_zero() || valuation(a) > 0;
}

Rational st(const Hyperreal& a) {
  if (a.is_zero()) return Rational(0);
  const std::int64_t v = valuation(a);
  if (v < 0) throw DomainError("standard part of unlimited hyperreal " + a.to_string());
  if (v > 0) return Rational(0);
  return leading_coefficient(a);
}

std::ostream& operator<<(std::ostream& os, const Hyperreal& a) {
  return os << a.to_string();
}

}  // namespace hyperbelief
