#include <doctest.h>

#include <algorithm>
#include <vector>

#include "../support/helpers.hpp"
#include "hyperbelief/errors.hpp"
#include "hyperbelief/measures.hpp"
#include "hyperbelief/random.hpp"
#include "hyperbelief/revision.hpp"

using namespace hyperbelief;
using testing_support::e;
using testing_support::H;

namespace {

HyperMeasure weights(const OutcomeSpace& s, std::vector<Hyperreal> w) { return HyperMeasure(s, std::move(w)); }

std::vector<Rational> point(std::size_t n, std::size_t at) {
  std::vector<Rational> v(n, Rational(0));
  v[at] = 1;
  return v;
}

}  // namespace

TEST_CASE("measure validation") {
  const auto s = OutcomeSpace::flat(2);
  CHECK_THROWS_AS(weights(s, {H("1/2"), H("1/4")}), ValidationError);
  CHECK_THROWS_AS(weights(s, {H("1+e"), H("-e")}), ValidationError);
  CHECK_THROWS_AS(weights(s, {H("1")}), ValidationError);
  CHECK(weights(s, {1 - e, e}).is_regular());
  CHECK_FALSE(weights(s, {H("1"), H("0")}).is_regular());
}

TEST_CASE("measure_of") {
  const auto s = OutcomeSpace::flat(4);
  const auto u = HyperMeasure::uniform(s);
  CHECK(measure_of(u, Event::from_mask(s, 0b0101)) == H("1/2"));
  CHECK(measure_of(u, s.empty()) == Hyperreal(0));
  CHECK(measure_of(u, s.full()) == Hyperreal(1));
  const auto s2 = OutcomeSpace::flat(2);
  CHECK(measure_of(weights(s2, {1 - e, e}), s2.atom(1)) == e);
}

TEST_CASE("conditioning") {
  const auto s = OutcomeSpace::flat(4);
  const auto u = condition(HyperMeasure::uniform(s), Event::from_mask(s, 0b0110));
  CHECK(u.weights() == std::vector<Hyperreal>{H("0"), H("1/2"), H("1/2"), H("0")});

  const auto s3 = OutcomeSpace::flat(3);
  const auto mu = weights(s3, {1 - e, e * (1 - e), e * e});
  const auto c = condition(mu, Event::from_mask(s3, 0b110));
  CHECK(c.weights() == std::vector<Hyperreal>{H("0"), 1 - e, e});
  CHECK(conditional(mu, s3.atom(2), Event::from_mask(s3, 0b110)) == e);

  const auto point_mass = weights(s3, {H("1"), H("0"), H("0")});
  CHECK_THROWS_AS(condition(point_mass, Event::from_mask(s3, 0b110)), ConditioningError);
  CHECK_THROWS_AS(conditional(point_mass, s3.atom(0), s3.atom(1)), ConditioningError);
}

TEST_CASE("belief sets and revision") {
  const auto s2 = OutcomeSpace::flat(2);
  CHECK(belief_set(HyperMeasure::uniform(s2)) == s2.full());
  CHECK(belief_set(weights(s2, {1 - e, e})) == s2.atom(0));

  const auto s3 = OutcomeSpace::flat(3);
  const auto mu = weights(s3, {1 - e, e * (1 - e), e * e});
  CHECK(revise_by_measure(mu, Event::from_mask(s3, 0b110)) == s3.atom(1));
  CHECK(revise_by_measure(mu, s3.empty()).empty());
  CHECK(revise_by_measure(mu, s3.full()) == belief_set(mu));
}

TEST_CASE("standard-part thresholds") {
  const auto s3 = OutcomeSpace::flat(3);
  const auto mu = weights(s3, {1 - e, e * (1 - e), e * e});
  const std::vector<Event> all = all_events(s3);
  // Threshold 1: the events containing the belief set.
  const auto sure = st_threshold(mu, all, s3.full(), Rational(1));
  for (const auto& a : all) {
    const bool listed = std::find(sure.begin(), sure.end(), a) != sure.end();
    CHECK(listed == a.contains(0));
  }
  // Given {b, c}, b carries standard probability 1.
  const auto given = st_threshold(mu, all, Event::from_mask(s3, 0b110), Rational(1));
  CHECK(std::find(given.begin(), given.end(), s3.atom(1)) != given.end());
  CHECK(std::find(given.begin(), given.end(), s3.atom(2)) == given.end());
  // Threshold 0 admits everything.
  CHECK(st_threshold(mu, all, s3.full(), Rational(0)).size() == all.size());
}

TEST_CASE("lexicographic systems to measures") {
  const auto s3 = OutcomeSpace::flat(3);
  const LexSystem flat(s3, {{Rational(1, 3), Rational(1, 3), Rational(1, 3)}});
  CHECK(lex_to_hyper(flat) == HyperMeasure::uniform(s3));

  const auto s2 = OutcomeSpace::flat(2);
  const LexSystem two(s2, {point(2, 0), point(2, 1)});
  CHECK(lex_to_hyper(two).weights() == std::vector<Hyperreal>{1 - e, e});
  CHECK(belief_set(lex_to_hyper(two)) == s2.atom(0));

  // Direct expansion: mu(a) = 1 - e - e^2, mu(b) = e, mu(c) = e^2.
  const LexSystem three(s3, {point(3, 0), point(3, 1), point(3, 2)});
  const auto mu = lex_to_hyper(three);
  CHECK(mu.weights() == std::vector<Hyperreal>{1 - e - e * e, e, e * e});
  CHECK(revise_by_measure(mu, Event::from_mask(s3, 0b110)) == s3.atom(1));

  CHECK_THROWS_AS(LexSystem(s2, {point(2, 0), point(2, 0)}), ValidationError);
  CHECK_THROWS_AS(LexSystem(s2, {{Rational(1, 2), Rational(1, 3)}}), ValidationError);
  CHECK_THROWS_AS(lex_to_hyper(LexSystem(s3, {point(3, 0)})), ValidationError);
  CHECK(three.is_partitioning());
  CHECK(three.support(1) == s3.atom(1));
}

TEST_CASE("conditional probability functions") {
  const auto s3 = OutcomeSpace::flat(3);
  const ConditionalProbability p(LexSystem(s3, {point(3, 0), {Rational(0), Rational(1, 4), Rational(3, 4)}}));
  const Event bc = Event::from_mask(s3, 0b110);
  CHECK(p(s3.full(), bc) == 1);
  CHECK(p(bc, bc) == 1);
  CHECK(p(s3.atom(2), bc) == Rational(3, 4));
  CHECK(p(s3.atom(0), s3.full()) == 1);
  CHECK(p(s3.atom(1), s3.empty()) == 1);
  CHECK(cond_prob_eval(p, s3.atom(1), bc) == Rational(1, 4));
  CHECK(p.support(bc) == bc);
  CHECK(p.support(s3.full()) == s3.atom(0));
  CHECK_THROWS_AS(ConditionalProbability(LexSystem(s3, {point(3, 0)})), ValidationError);
}

TEST_CASE("operators from conditional probabilities") {
  const auto s2 = OutcomeSpace::flat(2);
  const auto op = cond_to_operator(ConditionalProbability(LexSystem(s2, {point(2, 0), point(2, 1)})));
  const auto all = enumerate_operators(s2, s2.atom(0));
  REQUIRE(all.size() == 1);
  CHECK(op == all[0]);

  const auto s3 = OutcomeSpace::flat(3);
  const auto flat = cond_to_operator(
      ConditionalProbability(LexSystem(s3, {{Rational(1, 3), Rational(1, 3), Rational(1, 3)}})));
  CHECK(flat.belief() == s3.full());
  for (const auto& ev : all_events(s3)) CHECK(flat.revise(ev) == ev);
}

TEST_CASE("operators from measures") {
  const auto s3 = OutcomeSpace::flat(3);
  const auto u = hyper_to_operator(HyperMeasure::uniform(s3));
  CHECK(u.belief() == s3.full());
  for (const auto& ev : all_events(s3)) CHECK(u.revise(ev) == ev);
  CHECK_THROWS_AS(hyper_to_operator(weights(OutcomeSpace::flat(2), {H("1"), H("0")})), ValidationError);

  // The measure of a lex system and the Popper function it backs agree.
  const LexSystem lex(s3, {point(3, 2), {Rational(1, 2), Rational(1, 2), Rational(0)}});
  CHECK(hyper_to_operator(lex_to_hyper(lex)) == cond_to_operator(ConditionalProbability(lex)));
}

TEST_CASE("different measures can induce the same operator") {
  const auto s2 = OutcomeSpace::flat(2);
  const auto mu = weights(s2, {1 - e, e});
  const auto nu = weights(s2, {1 - e * e, e * e});
  CHECK_FALSE(mu == nu);
  CHECK(belief_set(mu) == belief_set(nu));
  CHECK(hyper_to_operator(mu) == hyper_to_operator(nu));
}

TEST_CASE("property: measure axioms on random regular measures") {
  Rng rng(testing_support::kSeed);
  for (int i = 0; i < 200; ++i) {
    const auto s = OutcomeSpace::flat(2 + rng() % 4);
    const auto mu = random_regular_measure(s, rng);
    CHECK(measure_of(mu, s.full()) == Hyperreal(1));
    CHECK(mu.is_regular());
    CHECK_FALSE(belief_set(mu).empty());
    const Event a = random_event(s, rng);
    const Event b = random_event(s, rng) - a;
    CHECK(measure_of(mu, a).sign() >= 0);
    CHECK(measure_of(mu, a | b) == measure_of(mu, a) + measure_of(mu, b));
  }
}

TEST_CASE("property: belief set equals the intersection of sure events") {
  Rng rng(testing_support::kSeed + 1);
  for (int i = 0; i < 60; ++i) {
    const auto s = OutcomeSpace::flat(2 + rng() % 4);
    const auto mu = random_regular_measure(s, rng);
    CHECK(belief_set(mu) == belief_by_intersection(mu, s.full()));
    const Event ev = random_event(s, rng);
    CHECK(revise_by_measure(mu, ev) == belief_by_intersection(mu, ev));
  }
}

TEST_CASE("property: regular measures induce operators satisfying the postulates") {
  Rng rng(testing_support::kSeed + 2);
  for (int i = 0; i < 200; ++i) {
    const auto s = OutcomeSpace::flat(2 + rng() % 4);
    CHECK(satisfies_postulates(hyper_to_operator(random_regular_measure(s, rng))));
  }
}

TEST_CASE("property: Popper functions induce operators satisfying the postulates") {
  Rng rng(testing_support::kSeed + 3);
  for (int i = 0; i < 200; ++i) {
    const auto s = OutcomeSpace::flat(2 + rng() % 4);
    CHECK(satisfies_postulates(cond_to_operator(ConditionalProbability(random_partitioning_lex(s, rng)))));
  }
}

TEST_CASE("property: operator round trips through measures and Popper functions") {
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto s = OutcomeSpace::flat(n);
    for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) {
      for (const auto& op : enumerate_operators(s, Event::from_mask(s, mask))) {
        const auto mu = operator_to_hyper(op);
        CHECK(mu.is_regular());
        CHECK(belief_set(mu) == op.belief());
        CHECK(hyper_to_operator(mu) == op);
        CHECK(cond_to_operator(operator_to_conditional(op)) == op);
        CHECK(hyper_to_operator(lex_to_hyper(order_to_lex(operator_to_order(op)))) == op);
      }
    }
  }
  // Randomized on four atoms.
  Rng rng(testing_support::kSeed + 4);
  const auto s4 = OutcomeSpace::flat(4);
  for (int i = 0; i < 100; ++i) {
    const auto op = induced_operator(random_order(s4, rng));
    CHECK(hyper_to_operator(lex_to_hyper(order_to_lex(operator_to_order(op)))) == op);
  }
}
