#include <doctest.h>

#include <vector>

#include "../support/helpers.hpp"
#include "hyperbelief/fixtures.hpp"
#include "hyperbelief/iterated.hpp"
#include "hyperbelief/random.hpp"
#include "hyperbelief/scenario.hpp"

using namespace hyperbelief;

namespace {

std::vector<Event> two_coin_sequence(const OutcomeSpace& s) {
  return {parse_event(s, "{X1=H1, X2=H2}"), parse_event(s, "{X1=T1, X2=T2}"), parse_event(s, "{X1=H1}")};
}

}  // namespace

TEST_CASE("upgrades on two coins end at heads-heads") {
  const auto s = naive_coin_space();
  const UpgradePolicy policy{PlausibilityOrder::uniform(s)};
  const auto report = check_iterated(policy, two_coin_sequence(s), IteratedPostulate::I2);
  REQUIRE(report.beliefs.size() == 3);
  CHECK(*report.beliefs[0] == parse_event(s, "{X1=H1, X2=H2}"));
  CHECK(*report.beliefs[1] == parse_event(s, "{X1=T1, X2=T2}"));
  CHECK(*report.beliefs[2] == parse_event(s, "{X1=H1, X2=H2}"));
  // Both adjacent pairs are disjoint, so I2 fires twice; upgrades honour the gloss.
  REQUIRE(report.steps.size() == 2);
  CHECK(report.steps[0].fired);
  CHECK(report.steps[1].fired);
  CHECK(report.summary.status == PostulateStatus::holds);
}

TEST_CASE("the literal I2 reading fails on the same sequence") {
  const auto s = naive_coin_space();
  const UpgradePolicy policy{PlausibilityOrder::uniform(s)};
  const auto report = check_iterated(policy, two_coin_sequence(s), IteratedPostulate::I2, I2Reading::literal);
  CHECK(report.summary.postulate == "I2-literal");
  CHECK(report.summary.status == PostulateStatus::violated);
  CHECK(report.summary.witnesses.size() == 2);
}

TEST_CASE("conditioning in the naive space runs into zero probability") {
  const auto s = naive_coin_space();
  const ConditioningPolicy policy{HyperMeasure::uniform(s)};
  const std::vector<Event> evidence{parse_event(s, "{X1=T1, X2=T2}"), parse_event(s, "{X1=H1}")};
  const auto report = check_iterated(policy, evidence, IteratedPostulate::I2);
  CHECK(report.summary.status == PostulateStatus::inapplicable);
  CHECK(report.beliefs[0].has_value());
  CHECK_FALSE(report.beliefs[1].has_value());
  CHECK(report.steps[0].status == PostulateStatus::inapplicable);
}

TEST_CASE("conditioning on the scenario reports: I2 never fires") {
  for (const auto family : {scenario::Family::independent, scenario::Family::dependent, scenario::Family::correlated}) {
    scenario::ScenarioConfig cfg;
    cfg.family = family;
    const auto space = scenario::build_space();
    const ConditioningPolicy policy{scenario::build_prior(space, cfg)};
    const auto evidence = scenario::report_events(space, cfg);
    const auto report = check_iterated(policy, evidence, IteratedPostulate::I2);
    CHECK(report.summary.status == PostulateStatus::vacuous);
    for (const auto& step : report.steps) CHECK_FALSE(step.fired);
    if (family == scenario::Family::independent) {
      const auto coins = scenario::coin_space(space);
      CHECK(project(*report.beliefs.back(), coins) == parse_event(coins, "{X1=heads, X2=tails}"));
    }
  }
}

TEST_CASE("nested evidence under conditioning satisfies I1") {
  const auto space = scenario::build_space();
  const ConditioningPolicy policy{scenario::build_prior(space, {})};
  const std::vector<Event> evidence{parse_event(space, "{X1=heads}"), parse_event(space, "{X1=heads, X2=heads}")};
  const auto report = check_iterated(policy, evidence, IteratedPostulate::I1);
  CHECK(report.summary.status == PostulateStatus::holds);
  CHECK(report.summary.to_line() == "I1\tholds\t-");
}

TEST_CASE("property: conditioning never violates I1") {
  Rng rng(testing_support::kSeed);
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto s = OutcomeSpace::flat(n);
    const auto events = all_events(s);
    for (int trial = 0; trial < 10; ++trial) {
      const ConditioningPolicy policy{random_regular_measure(s, rng)};
      for (const auto& e : events) {
        for (const auto& f : events) {
          if (!is_subset(f, e)) continue;
          const auto report = check_iterated(policy, {e, f}, IteratedPostulate::I1);
          CHECK(report.summary.status != PostulateStatus::violated);
        }
      }
    }
  }
}

TEST_CASE("no antecedent means vacuous") {
  const auto s = naive_coin_space();
  const UpgradePolicy policy{PlausibilityOrder::uniform(s)};
  const auto report = check_iterated(policy, {parse_event(s, "{X1=H1}")}, IteratedPostulate::I1);
  CHECK(report.steps.empty());
  CHECK(report.summary.status == PostulateStatus::vacuous);
}
