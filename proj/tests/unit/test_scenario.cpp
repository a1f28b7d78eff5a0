#include <doctest.h>

#include <string>

#include "../support/helpers.hpp"
#include "hyperbelief/errors.hpp"
#include "hyperbelief/scenario.hpp"

using namespace hyperbelief;
using namespace hyperbelief::scenario;
using testing_support::e;
using testing_support::H;

namespace {

ScenarioConfig family(Family f) {
  ScenarioConfig cfg;
  cfg.family = f;
  return cfg;
}

std::array<Hyperreal, 4> odds(const ScenarioRun& run, int stage) {
  return run.table.columns.at(static_cast<std::size_t>(stage)).odds;
}

std::array<Hyperreal, 4> row(const char* a, const char* b, const char* c, const char* d) {
  return {H(a), H(b), H(c), H(d)};
}

std::string data(const std::string& rel) { return std::string(HYPERBELIEF_DATA_DIR) + "/" + rel; }

}  // namespace

TEST_CASE("space layout") {
  const auto space = build_space();
  CHECK(space.atom_count() == 256);
  std::vector<std::string> names;
  for (const auto& v : space.variables()) {
    names.push_back(v.name);
    CHECK(v.values == std::vector<std::string>{"tails", "heads"});
  }
  CHECK(names == std::vector<std::string>{"X1", "X2", "R11", "R21", "R12", "R22", "R13", "R23"});
  CHECK(cylinder(space, {{"X1", "heads"}}).size() == 128);
}

TEST_CASE("priors") {
  const auto space = build_space();
  const auto prior = build_prior(space, family(Family::independent));
  for (std::size_t r = 0; r < 4; ++r) CHECK(measure_of(prior, hypothesis_event(space, r)) == H("1/4"));
  CHECK(conditional(prior, cylinder(space, {{"R11", "heads"}}), cylinder(space, {{"X1", "heads"}})) ==
        H("1/(1+e)"));
  CHECK(conditional(prior, cylinder(space, {{"R11", "heads"}}), cylinder(space, {{"X1", "tails"}})) ==
        H("e/(1+e)"));
  CHECK(prior.is_regular());

  const auto corr = build_prior(space, family(Family::correlated));
  const Event context = cylinder(space, {{"X1", "heads"}, {"R12", "tails"}, {"R22", "tails"}, {"X2", "heads"}});
  CHECK(conditional(corr, cylinder(space, {{"R13", "heads"}}), context) == H("1/(1+e^2+e^3+e^5)"));
  CHECK(corr.is_regular());
  CHECK(build_prior(space, family(Family::dependent)).is_regular());
  CHECK(build_prior(space, family(Family::footnote4)).is_regular());
}

TEST_CASE("independent table") {
  const auto run = scenario::run(family(Family::independent));
  REQUIRE(run.table.columns.size() == 4);
  CHECK(odds(run, 0) == row("1", "1", "1", "1"));
  CHECK(odds(run, 1) == row("1", "e", "e", "e^2"));
  CHECK(odds(run, 2) == row("e^2", "e", "e", "1"));
  CHECK(odds(run, 3) == row("e", "1", "e^3", "e^2"));
  CHECK(run.table.columns[1].evidence == H("1/4"));
  CHECK(same_leading_term(run.table.columns[2].evidence, H("(1/4)*e^2")));
  CHECK(same_leading_term(run.table.columns[3].evidence, H("(1/4)*e^3")));
  CHECK(run.table.columns[3].argmax == 1);
  CHECK(run.table.columns[3].coin_belief == parse_event(run.coins, "{X1=heads, X2=tails}"));
}

TEST_CASE("dependent table") {
  const auto run = scenario::run(family(Family::dependent));
  CHECK(odds(run, 1) == row("1", "e^2", "e^2", "e^3"));
  CHECK(odds(run, 2) == row("e", "e^2", "e^2", "1"));
  CHECK(odds(run, 3) == row("1", "e", "e^4", "e^2"));
  CHECK(same_leading_term(run.table.columns[2].evidence, H("(1/4)*e^3")));
  CHECK(same_leading_term(run.table.columns[3].evidence, H("(1/4)*e^4")));
}

TEST_CASE("correlated table") {
  const auto run = scenario::run(family(Family::correlated));
  CHECK(odds(run, 2) == row("e^2", "e", "e", "1"));
  CHECK(odds(run, 3) == row("1", "e", "e^2", "e^3"));
  CHECK(same_leading_term(run.table.columns[2].evidence, H("(1/4)*e^2")));
  // P0(S3) = P0(S2) * P0(R13 | S2): the second factor is of order e^2.
  const auto& ev3 = run.table.columns[3].evidence;
  CHECK(same_leading_term(ev3, H("(1/4)*e^4")));
  CHECK(ev3 == measure_of(run.prior, run.table.columns[3].evidence_event));
}

TEST_CASE("box-2 beliefs after stage 3") {
  for (const auto f : {Family::independent, Family::dependent, Family::correlated}) {
    const auto r = scenario::run(family(f));
    const auto post = condition(r.prior, r.table.columns[3].evidence_event);
    const auto x2 = st(measure_of(post, cylinder(r.space, {{"X2", f == Family::independent ? "tails" : "heads"}})));
    CHECK_MESSAGE(x2 == 1, to_string(f));
  }
}

TEST_CASE("conditioning stage by stage equals conditioning once") {
  for (const auto f : {Family::independent, Family::dependent, Family::correlated, Family::footnote4}) {
    const auto space = build_space();
    const auto cfg = family(f);
    const auto prior = build_prior(space, cfg);
    const auto reports = report_events(space, cfg);
    auto step = prior;
    Event all = space.full();
    for (const auto& r : reports) {
      step = condition(step, r);
      all &= r;
    }
    CHECK(step == condition(prior, all));
  }
}

TEST_CASE("rescaling every weight leaves beliefs unchanged") {
  const auto space = build_space();
  const auto prior = build_prior(space, family(Family::dependent));
  for (const auto& c : {H("3/7"), H("5"), H("2+e")}) {
    std::vector<Hyperreal> w;
    Hyperreal total(0);
    for (const auto& x : prior.weights()) {
      w.push_back(x * c);
      total += x * c;
    }
    for (auto& x : w) x /= total;
    const HyperMeasure scaled(space, w);
    CHECK(belief_set(scaled) == belief_set(prior));
    for (const auto& r : report_events(space, family(Family::dependent))) {
      CHECK(revise_by_measure(scaled, r) == revise_by_measure(prior, r));
    }
  }
}

TEST_CASE("numeric mode agrees with the symbolic argmax") {
  for (const auto f : {Family::independent, Family::dependent, Family::correlated}) {
    ScenarioConfig numeric = family(f);
    numeric.gamma = Rational(1, 1000);
    const auto sym = scenario::run(family(f));
    const auto num = scenario::run(numeric);
    for (std::size_t t = 1; t < 4; ++t) {
      CHECK(sym.table.columns[t].argmax == num.table.columns[t].argmax);
      for (std::size_t r = 0; r < 4; ++r) {
        CHECK(sym.table.columns[t].odds[r].evaluate(Rational(1, 1000)) ==
              Hyperreal(num.table.columns[t].odds[r]).evaluate(0));
      }
    }
  }
}

TEST_CASE("fixtures and comparison") {
  const auto fixture = load_fixture(data("fixtures/independent.tsv"));
  CHECK(fixture.size() == 16);
  CHECK(compare_table(scenario::run(family(Family::independent)).table, fixture).ok());

  const auto diff = compare_table(scenario::run(family(Family::dependent)).table, fixture);
  CHECK_FALSE(diff.ok());
  bool flagged = false;
  for (const auto& c : diff.cells) {
    if (c.stage == 1 && c.hypothesis == "X10" && c.column == "odds") {
      flagged = true;
      CHECK(c.expected == "e");
      CHECK(c.actual == "e^2");
    }
  }
  CHECK(flagged);
  CHECK(diff.to_text().find("stage 1\tX10\todds\texpected e\tactual e^2") != std::string::npos);

  const auto parsed = parse_fixture("stage\thypothesis\todds\tevidence\n2\tX00\t1\t-\n");
  REQUIRE(parsed.size() == 1);
  CHECK_FALSE(parsed[0].evidence.has_value());
  CHECK_THROWS_AS(parse_fixture("2\tX00\t1\n"), ConfigError);
  CHECK_THROWS_AS(parse_fixture("stage\thypothesis\todds\tevidence\n2\tX22\t1\t1\n"), ConfigError);
}

TEST_CASE("table rendering") {
  const auto run = scenario::run(family(Family::independent));
  const std::string tsv = run.table.to_tsv();
  CHECK(tsv.rfind("stage\thypothesis\todds\tevidence\n", 0) == 0);
  CHECK(tsv.find("3\tX01\te^3\t") != std::string::npos);
  // The TSV round-trips through the fixture reader.
  CHECK(compare_table(run.table, parse_fixture(tsv)).ok());
  const std::string pretty = run.table.to_pretty();
  CHECK(pretty.find("g^3") != std::string::npos);
  CHECK(pretty.find("Belief") != std::string::npos);
}

TEST_CASE("configuration") {
  const auto cfg = parse_config(R"({"family": "dependent", "gamma": "1/100",
                                    "reports": [["tails","heads"],["heads","heads"],["tails"]]})");
  CHECK(cfg.family == Family::dependent);
  CHECK(cfg.gamma == Rational(1, 100));
  CHECK(cfg.stage1 == std::array<std::size_t, 2>{kTails, kHeads});
  CHECK(cfg.stage3 == kTails);
  CHECK(parse_config("{}").symbolic());
  CHECK(parse_config(R"({"gamma": "eps"})").symbolic());
  CHECK(load_config(data("configs/independent.json")).family == Family::independent);

  auto names_field = [](const char* json, const char* field) {
    try {
      parse_config(json);
    } catch (const ConfigError& err) {
      return std::string(err.what()).find(field) != std::string::npos;
    }
    return false;
  };
  CHECK(names_field(R"({"family": "nosuch"})", "family"));
  CHECK(names_field(R"({"gamma": "2"})", "gamma"));
  CHECK(names_field(R"({"gamma": "0"})", "gamma"));
  CHECK(names_field(R"({"reports": [["heads"]]})", "reports"));
  CHECK(names_field(R"({"reports": [["heads","sideways"],["tails","tails"],["heads"]]})", "reports"));
  CHECK(names_field(R"({"colour": "red"})", "colour"));
  CHECK_THROWS_AS(parse_config("{not json"), ConfigError);
  CHECK_THROWS_AS(load_config(data("configs/missing.json")), ConfigError);
  CHECK_THROWS_AS(parse_family("nosuch"), ConfigError);
  CHECK(parse_family("footnote4") == Family::footnote4);
}
