#include <doctest.h>

#include <sstream>

#include "../support/helpers.hpp"
#include "hyperbelief/errors.hpp"
#include "hyperbelief/hyperreal.hpp"
#include "hyperbelief/random.hpp"

using namespace hyperbelief;
using testing_support::e;
using testing_support::H;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational(" -7/4 ") == Rational(-7, 4));
  CHECK(parse_rational("2/4") == Rational(1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), ConfigError);
  CHECK_THROWS_AS(parse_rational("abc"), ConfigError);
  CHECK_THROWS_AS(parse_rational(""), ConfigError);
  CHECK(to_string(Rational(-3, 6)) == "-1/2");
  CHECK(Hyperreal(Rational(2, 4)) == Hyperreal(Rational(1, 2)));
}

TEST_CASE("polynomial basics") {
  const EpsPoly p{{3, Rational(1, 4)}, {5, Rational(1)}};
  CHECK(p.valuation() == 3U);
  CHECK(p.degree() == 5U);
  CHECK(p.coefficient(4) == 0);
  CHECK(p.to_string() == "(1/4)*e^3 + e^5");
  CHECK(EpsPoly().valuation() == std::nullopt);
  CHECK(EpsPoly::from_terms({{1, Rational(1)}, {1, Rational(-1)}}).is_zero());

  const EpsPoly a{{0, Rational(1)}, {1, Rational(1)}};  // 1 + e
  const EpsPoly b{{0, Rational(1)}, {1, Rational(-1)}};  // 1 - e
  const auto [q, r] = (a * b).divmod(b);
  CHECK(q == a);
  CHECK(r.is_zero());
  CHECK(gcd(a * b, a * a) == a.monic());
  CHECK(gcd(EpsPoly(), EpsPoly()).is_zero());
  CHECK_THROWS_AS(a.divmod(EpsPoly()), DomainError);
  CHECK(a.evaluate(Rational(1, 2)) == Rational(3, 2));
}

TEST_CASE("arithmetic examples") {
  const Hyperreal one_plus = 1 + e;
  CHECK(e / one_plus + 1 / one_plus == Hyperreal(1));
  CHECK((1 - e) * (1 + e) == 1 - e * e);
  const Hyperreal inv = Hyperreal(1) / one_plus;
  CHECK(inv.num() == EpsPoly(Rational(1)));
  CHECK(inv.den() == EpsPoly{{0, Rational(1)}, {1, Rational(1)}});
  CHECK(inv.to_string() == "1/(1+e)");
  CHECK_THROWS_AS(Hyperreal(1) / Hyperreal(0), DomainError);
}

TEST_CASE("comparison examples") {
  CHECK(compare(e * e, e) == std::strong_ordering::less);
  CHECK(compare(e, Hyperreal(Rational(1, 1000000))) == std::strong_ordering::less);
  CHECK(compare(1 - e, Hyperreal(1)) == std::strong_ordering::less);
  CHECK(Hyperreal(-1) < e * e);
  CHECK(Hyperreal(0) < e.pow(9));
  CHECK(Hyperreal(1000000) < Hyperreal(1) / e);
  CHECK((e - e).sign() == 0);
  CHECK((e - e * e).sign() == 1);
}

TEST_CASE("valuation and standard part examples") {
  CHECK(valuation(H("(1/4)*e^3 + e^5")) == 3);
  CHECK(valuation(H("1/(1+e)")) == 0);
  CHECK(valuation(H("e^2/(e+e^3)")) == 1);
  CHECK(valuation(Hyperreal(1) / e) == -1);
  CHECK_THROWS_AS(valuation(Hyperreal(0)), DomainError);

  CHECK(st(H("1/(1+e)")) == Rational(1));
  CHECK(st(H("e^2/(1+e)")) == Rational(0));
  CHECK_THROWS_AS(st(Hyperreal(1) / e), DomainError);
  CHECK(is_limited(H("3 + e")));
  CHECK_FALSE(is_limited(Hyperreal(1) / e));
  CHECK(is_infinitesimal(e));
  CHECK(is_infinitesimal(Hyperreal(0)));
  CHECK_FALSE(is_infinitesimal(H("1/4 + e")));
  CHECK(leading_coefficient(H("(1/4)*e^2 + e^3")) == Rational(1, 4));
}

TEST_CASE("canonical form") {
  // e^2/(e+e^3) reduces to e/(1+e^2).
  const Hyperreal x = H("e^2/(e+e^3)");
  CHECK(x.num() == EpsPoly{{1, Rational(1)}});
  CHECK(x.den() == EpsPoly{{0, Rational(1)}, {2, Rational(1)}});
  // Denominator's lowest coefficient is 1 even when it started elsewhere.
  const Hyperreal y(EpsPoly{{0, Rational(2)}}, EpsPoly{{0, Rational(4)}, {1, Rational(2)}});
  CHECK(y.den().lowest_coefficient() == 1);
  CHECK(y == H("1/(2+e)"));
  CHECK(Hyperreal(y.num(), y.den()) == y);
}

TEST_CASE("text grammar round trip") {
  for (const char* text : {"0", "1", "-3/7", "e", "(1/4)*e^3 + e^5", "1/(1+e)", "1 - e - e^2",
                           "e/(1+e^2)", "-e^4/(2-e)", "(3/2)*e^2/(1/3+e)"}) {
    const Hyperreal x = H(text);
    CHECK_MESSAGE(H(x.to_string()) == x, text);
  }
  CHECK(H("g^2") == e * e);
  CHECK(H("2*(e+1)^2") == 2 + 4 * e + 2 * e * e);
  CHECK(H("--e") == e);
  CHECK(H("e/e") == Hyperreal(1));
  CHECK_THROWS_AS(H("e^"), ConfigError);
  CHECK_THROWS_AS(H("(1+e"), ConfigError);
  CHECK_THROWS_AS(H("x"), ConfigError);
  CHECK_THROWS_AS(H("1/(e-e)"), ConfigError);  // reported as a parse error
  std::ostringstream os;
  os << H("1+e");
  CHECK(os.str() == "1 + e");
}

TEST_CASE("evaluation") {
  CHECK(H("1/(1+e)").evaluate(Rational(1, 2)) == Rational(2, 3));
  CHECK_THROWS_AS(H("1/(1-2*e)").evaluate(Rational(1, 2)), DomainError);
}

TEST_CASE("property: field laws on random samples") {
  Rng rng(testing_support::kSeed);
  for (int i = 0; i < 300; ++i) {
    const Hyperreal a = random_hyperreal(rng);
    const Hyperreal b = random_hyperreal(rng);
    const Hyperreal c = random_hyperreal(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == Hyperreal(0));
    CHECK(a - b == a + (-b));
    if (!a.is_zero()) {
      CHECK(a * (Hyperreal(1) / a) == Hyperreal(1));
      CHECK((b / a) * a == b);
    }
    // Re-canonicalizing is the identity.
    CHECK(Hyperreal(a.num(), a.den()) == a);
  }
}

TEST_CASE("property: order compatibility") {
  Rng rng(testing_support::kSeed + 1);
  for (int i = 0; i < 300; ++i) {
    const Hyperreal a = random_hyperreal(rng);
    const Hyperreal b = random_hyperreal(rng);
    const Hyperreal c = random_hyperreal(rng);
    // Total order, antisymmetric, consistent with subtraction.
    CHECK(((a < b) + (a == b) + (b < a)) == 1);
    CHECK((a < b) == ((b - a).sign() > 0));
    if (a < b) {
      CHECK(a + c < b + c);
      if (c.sign() > 0) CHECK(a * c < b * c);
      if (c.sign() < 0) CHECK(b * c < a * c);
    }
  }
}

TEST_CASE("property: standard part is a ring homomorphism on limited values") {
  Rng rng(testing_support::kSeed + 2);
  int checked = 0;
  for (int i = 0; i < 500; ++i) {
    const Hyperreal a = random_hyperreal(rng);
    const Hyperreal b = random_hyperreal(rng);
    if (!is_limited(a) || !is_limited(b)) continue;
    ++checked;
    CHECK(st(a + b) == st(a) + st(b));
    CHECK(st(a * b) == st(a) * st(b));
  }
  CHECK(checked > 100);
}

TEST_CASE("property: substituting a small rational agrees with the sign") {
  Rng rng(testing_support::kSeed + 3);
  for (const long n : {1000000L, 1000000000L}) {
    const Rational at(1, n);
    for (int i = 0; i < 300; ++i) {
      const Hyperreal a = random_hyperreal(rng);
      // Coefficients stay below 20 and degrees below 10, so 1/n is small
      // enough for the lowest-order term to dominate.
      CHECK(sgn(a.evaluate(at)) == a.sign());
    }
  }
}
