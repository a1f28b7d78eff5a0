// hyperbelief: scenario tables, postulate verification and enumeration.
//
// Exit status: 0 success, 1 verification failure, 2 usage or config error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hyperbelief/errors.hpp"
#include "hyperbelief/fixtures.hpp"
#include "hyperbelief/iterated.hpp"
#include "hyperbelief/measures.hpp"
#include "hyperbelief/random.hpp"
#include "hyperbelief/revision.hpp"
#include "hyperbelief/scenario.hpp"

#ifndef HYPERBELIEF_DATA_DIR
#define HYPERBELIEF_DATA_DIR "data"
#endif

namespace hb = hyperbelief;
namespace sc = hyperbelief::scenario;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::string data_path(const std::string& relative) {
  return (std::filesystem::path(HYPERBELIEF_DATA_DIR) / relative).string();
}

// Fubini numbers: weak orders on n labelled elements.
std::size_t ordered_bell(std::size_t n) {
  std::vector<std::size_t> a(n + 1, 0);
  a[0] = 1;
  std::vector<std::vector<std::size_t>> binom(n + 1, std::vector<std::size_t>(n + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) {
    binom[i][0] = 1;
    for (std::size_t j = 1; j <= i; ++j) binom[i][j] = binom[i - 1][j - 1] + (j < i ? binom[i - 1][j] : 0);
  }
  for (std::size_t m = 1; m <= n; ++m)
    for (std::size_t k = 1; k <= m; ++k) a[m] += binom[m][k] * a[m - k];
  return a[n];
}

void print_reports(const std::vector<hb::PostulateReport>& reports, bool& all_hold) {
  for (const auto& r : reports) {
    std::cout << r.to_line() << '\n';
    if (r.status == hb::PostulateStatus::violated) all_hold = false;
  }
}

// ---- scenario ----

struct ScenarioOpts {
  std::string config;
  std::string family;
  std::string gamma;
  std::string format = "tsv";
};

sc::ScenarioConfig make_config(const ScenarioOpts& o) {
  sc::ScenarioConfig cfg = o.config.empty() ? sc::ScenarioConfig{} : sc::load_config(o.config);
  if (!o.family.empty()) cfg.family = sc::parse_family(o.family);
  if (!o.gamma.empty()) {
    if (o.gamma == "eps") {
      cfg.gamma.reset();
    } else {
      try {
        cfg.gamma = hb::parse_rational(o.gamma);
      } catch (const hb::ConfigError& e) {
        throw hb::ConfigError(std::string("field 'gamma': ") + e.what());
      }
    }
  }
  cfg.validate();
  return cfg;
}

int scenario_run(const ScenarioOpts& o) {
  const auto run = sc::run(make_config(o));
  std::cout << (o.format == "pretty" ? run.table.to_pretty() : run.table.to_tsv());
  return kOk;
}

int scenario_check(const std::string& family_name, const std::string& fixtures_dir) {
  const sc::Family family = sc::parse_family(family_name);
  const std::string path =
      (std::filesystem::path(fixtures_dir) / (sc::to_string(family) + ".tsv")).string();
  if (!std::filesystem::exists(path)) throw hb::ConfigError("no fixture for family '" + family_name + "' at " + path);
  const auto expected = sc::load_fixture(path);
  sc::ScenarioConfig cfg;
  cfg.family = family;
  const auto run = sc::run(cfg);
  const auto diff = sc::compare_table(run.table, expected);
  for (const auto& col : run.table.columns) {
    std::cout << "stage " << col.stage << "\tevidence " << col.evidence.to_string() << '\n';
  }
  if (!diff.ok()) {
    std::cout << diff.to_text();
    std::cout << "mismatch: " << diff.cells.size() << " cell(s)\n";
    return kFailed;
  }
  std::cout << "match: " << expected.size() << " row(s) of " << path << '\n';
  return kOk;
}

// ---- postulates ----

struct PostulateOpts {
  std::string measure;
  std::string lex;
  std::size_t random = 0;
  std::size_t atoms = 3;
  std::uint64_t seed = 1;
};

int verify_postulates(const PostulateOpts& o) {
  const int sources = !o.measure.empty() + !o.lex.empty() + (o.random > 0);
  if (sources != 1) throw hb::UsageError("give exactly one of --measure, --lex, --random");
  bool all_hold = true;
  if (!o.measure.empty()) {
    const auto mu = hb::parse_measure_fixture(hb::read_file(o.measure));
    if (!mu.is_regular()) throw hb::ConfigError("measure is not regular");
    print_reports(hb::check_postulates(hb::hyper_to_operator(mu)), all_hold);
  } else if (!o.lex.empty()) {
    const hb::ConditionalProbability p(hb::parse_lex_fixture(hb::read_file(o.lex)));
    print_reports(hb::check_postulates(hb::cond_to_operator(p)), all_hold);
  } else {
    if (o.atoms < 2 || o.atoms > hb::RevisionOperator::kMaxAtoms) throw hb::SizeError("--atoms must be in 2..12");
    hb::Rng rng(o.seed);
    const auto space = hb::OutcomeSpace::flat(o.atoms);
    std::size_t passed = 0;
    for (std::size_t i = 0; i < o.random; ++i) {
      const auto op = hb::hyper_to_operator(hb::random_regular_measure(space, rng));
      if (hb::satisfies_postulates(op)) {
        ++passed;
      } else {
        all_hold = false;
        bool ignored = true;
        print_reports(hb::check_postulates(op), ignored);
      }
    }
    std::cout << "random regular measures on " << o.atoms << " atoms: " << passed << '/' << o.random
              << " satisfy *1-*4\n";
  }
  return all_hold ? kOk : kFailed;
}

// ---- propositions ----

std::size_t checked_atoms(std::size_t atoms, std::size_t limit) {
  if (atoms < 2 || atoms > limit) {
    throw hb::SizeError("--atoms must be in 2.." + std::to_string(limit));
  }
  return atoms;
}

// Runs `check` on every operator for every nonempty K; one line per K.
int for_each_belief(std::size_t atoms, const std::string& what,
                    const std::function<bool(const hb::RevisionOperator&)>& check) {
  const auto space = hb::OutcomeSpace::flat(atoms);
  bool ok = true;
  std::size_t total = 0;
  std::size_t total_passed = 0;
  for (std::uint64_t mask = 1; mask < (1ULL << atoms); ++mask) {
    const auto k = hb::Event::from_mask(space, mask);
    const auto ops = hb::enumerate_operators(space, k);
    const std::size_t expected = ordered_bell(atoms - k.size());
    std::size_t passed = 0;
    for (const auto& op : ops) passed += check(op) ? 1 : 0;
    const bool line_ok = ops.size() == expected && passed == ops.size();
    ok = ok && line_ok;
    total += ops.size();
    total_passed += passed;
    std::cout << "K=" << k.to_string() << "\toperators " << ops.size() << " (expected " << expected
              << ")\t" << what << ' ' << passed << '/' << ops.size() << (line_ok ? "" : "\tFAIL") << '\n';
  }
  std::cout << "total operators " << total << ", " << what << ' ' << total_passed << '/' << total << '\n';
  return ok ? kOk : kFailed;
}

int verify_prop1(std::size_t atoms) {
  checked_atoms(atoms, 4);
  const int status = for_each_belief(atoms, "regular-measure", [](const hb::RevisionOperator& op) {
    const auto mu = hb::operator_to_hyper(op);
    return mu.is_regular() && hb::belief_set(mu) == op.belief() && hb::hyper_to_operator(mu) == op;
  });
  if (atoms <= 3) {
    // Raw-table filtering and the preorder image must agree.
    const auto space = hb::OutcomeSpace::flat(atoms);
    bool same = true;
    for (std::uint64_t mask = 1; mask < (1ULL << atoms); ++mask) {
      const auto k = hb::Event::from_mask(space, mask);
      std::vector<hb::RevisionOperator> image;
      for (const auto& order : hb::enumerate_preorders(space, k)) image.push_back(hb::induced_operator(order));
      std::sort(image.begin(), image.end());
      same = same && image == hb::enumerate_operators(space, k);
    }
    std::cout << "candidate tables per K: " << hb::candidate_table_count(atoms)
              << "\tfiltered set equals preorder image: " << (same ? "yes" : "no") << '\n';
    if (!same) return kFailed;
  }
  return status;
}

int verify_prop2(std::size_t atoms, std::size_t samples, std::uint64_t seed) {
  checked_atoms(atoms, 4);
  int status = for_each_belief(atoms, "conditional-round-trip", [](const hb::RevisionOperator& op) {
    return hb::cond_to_operator(hb::operator_to_conditional(op)) == op;
  });
  hb::Rng rng(seed);
  const auto space = hb::OutcomeSpace::flat(atoms);
  std::size_t passed = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const hb::ConditionalProbability p(hb::random_partitioning_lex(space, rng));
    passed += hb::satisfies_postulates(hb::cond_to_operator(p)) ? 1 : 0;
  }
  std::cout << "random conditional probabilities: " << passed << '/' << samples << " satisfy *1-*4\n";
  if (passed != samples) status = kFailed;
  return status;
}

int verify_prop3(std::size_t atoms) {
  checked_atoms(atoms, 4);
  return for_each_belief(atoms, "lex-measure-round-trip", [](const hb::RevisionOperator& op) {
    const auto lex = hb::order_to_lex(hb::operator_to_order(op));
    return hb::hyper_to_operator(hb::lex_to_hyper(lex)) == op;
  });
}

// ---- upgrades and iterated postulates ----

int upgrade_run(const std::string& path) {
  const auto script = hb::parse_upgrade_script(hb::read_file(path));
  auto order = hb::PlausibilityOrder::uniform(script.space);
  std::cout << "initial\tranks " << order.to_string() << "\tbelief " << hb::order_belief(order).to_label_string("")
            << '\n';
  for (std::size_t i = 0; i < script.steps.size(); ++i) {
    order = hb::radical_upgrade(order, script.steps[i]);
    std::cout << "step " << i + 1 << "\tupgrade " << script.steps[i].to_label_string("") << "\tranks "
              << order.to_string() << "\tbelief " << hb::order_belief(order).to_label_string("") << '\n';
  }
  return kOk;
}

struct IteratedOpts {
  std::string postulate;
  std::string policy;
  std::string family;
  std::string script;
  std::vector<std::string> evidence;
  bool i2_literal = false;
};

std::string optional_label(const std::optional<hb::Event>& e) {
  return e ? e->to_label_string("") : "undefined";
}

int iterated_check(const IteratedOpts& o) {
  const auto postulate = o.postulate == "I1" ? hb::IteratedPostulate::I1 : hb::IteratedPostulate::I2;
  const auto reading = o.i2_literal ? hb::I2Reading::literal : hb::I2Reading::gloss;
  if (o.i2_literal && postulate != hb::IteratedPostulate::I2) throw hb::UsageError("--i2-literal needs --postulate I2");

  std::optional<hb::IteratedPolicy> policy;
  std::vector<hb::Event> evidence;
  std::vector<std::string> labels;
  std::function<std::string(const std::optional<hb::Event>&)> describe = optional_label;
  if (o.policy == "conditioning") {
    if (!o.script.empty()) throw hb::UsageError("--script applies to --policy upgrade");
    sc::ScenarioConfig cfg;
    if (!o.family.empty()) cfg.family = sc::parse_family(o.family);
    const auto space = sc::build_space();
    policy = hb::ConditioningPolicy{sc::build_prior(space, cfg)};
    if (o.evidence.empty()) {
      evidence = sc::report_events(space, cfg);
      const auto table = sc::run(cfg).table;
      for (std::size_t i = 1; i < table.columns.size(); ++i) labels.push_back(table.columns[i].label);
    } else {
      for (const auto& text : o.evidence) {
        evidence.push_back(hb::parse_event(space, text));
        labels.push_back(text);
      }
    }
    // 256 atoms are unreadable; show the coin projection and the atom count.
    const auto coins = sc::coin_space(space);
    describe = [coins](const std::optional<hb::Event>& e) {
      if (!e) return std::string("undefined");
      return "coins " + hb::project(*e, coins).to_label_string("/") + " (" + std::to_string(e->size()) + " atoms)";
    };
  } else {
    if (!o.family.empty()) throw hb::UsageError("--family applies to --policy conditioning");
    if (!o.evidence.empty() && !o.script.empty()) throw hb::UsageError("give --script or --evidence, not both");
    hb::UpgradeScript script =
        hb::parse_upgrade_script(hb::read_file(o.script.empty() ? data_path("scripts/two_coins.txt") : o.script));
    if (!o.evidence.empty()) {
      script.steps.clear();
      for (const auto& text : o.evidence) script.steps.push_back(hb::parse_event(script.space, text));
    }
    policy = hb::UpgradePolicy{hb::PlausibilityOrder::uniform(script.space)};
    evidence = script.steps;
    for (const auto& e : evidence) labels.push_back(e.to_label_string(""));
  }

  const auto report = hb::check_iterated(*policy, evidence, postulate, reading);
  for (std::size_t i = 0; i < evidence.size(); ++i) {
    std::cout << "after " << i + 1 << "\tlearned " << labels[i] << "\tbelief " << describe(report.beliefs[i])
              << '\n';
  }
  for (const auto& step : report.steps) {
    std::cout << "pair " << step.index + 1 << ',' << step.index + 2 << '\t'
              << (step.fired ? "fired" : "not-fired") << '\t' << hb::to_string(step.status);
    if (step.fired) {
      std::cout << "\tsequential " << describe(step.sequential) << "\trequired " << describe(step.direct);
    }
    std::cout << '\n';
  }
  std::cout << report.summary.to_line() << '\n';
  return report.summary.status == hb::PostulateStatus::violated ? kFailed : kOk;
}

// ---- enumeration ----

int enumerate(std::size_t atoms, const std::string& belief, bool preorders) {
  checked_atoms(atoms, preorders ? 6 : 4);
  const auto space = hb::OutcomeSpace::flat(atoms);
  std::vector<hb::Event> beliefs;
  if (!belief.empty()) {
    beliefs.push_back(hb::parse_event(space, belief));
    if (beliefs.back().empty()) throw hb::ConfigError("--belief must be nonempty");
  } else {
    for (std::uint64_t mask = 1; mask < (1ULL << atoms); ++mask) beliefs.push_back(hb::Event::from_mask(space, mask));
  }
  for (const auto& k : beliefs) {
    if (preorders) {
      const auto orders = hb::enumerate_preorders(space, k);
      std::cout << "K=" << k.to_string() << "\tpreorders " << orders.size() << '\n';
      for (const auto& order : orders) std::cout << "  " << order.to_string(" ") << '\n';
    } else {
      const auto ops = hb::enumerate_operators(space, k);
      std::cout << "K=" << k.to_string() << "\toperators " << ops.size() << '\n';
      for (const auto& op : ops) std::cout << "  " << hb::operator_to_order(op).to_string(" ") << '\n';
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperreal probability and AGM belief revision toolkit"};
  app.require_subcommand(1);
  int status = kOk;

  ScenarioOpts run_opts;
  auto* run = app.add_subcommand("scenario-run", "Tabulate posterior odds for a two-coin scenario");
  run->add_option("config", run_opts.config, "JSON scenario config")->check(CLI::ExistingFile);
  run->add_option("--family", run_opts.family, "independent|dependent|correlated|footnote4 (overrides config)");
  run->add_option("--gamma", run_opts.gamma, "Reliability parameter: 'eps' or a rational in (0,1)");
  run->add_option("--format", run_opts.format, "Output format")->check(CLI::IsMember({"tsv", "pretty"}));
  run->callback([&] { status = scenario_run(run_opts); });

  std::string check_family;
  std::string fixtures_dir = data_path("fixtures");
  auto* check = app.add_subcommand("scenario-check", "Compare a symbolic run against its shipped fixture");
  check->add_option("--family", check_family, "Scenario family")->required();
  check->add_option("--fixtures", fixtures_dir, "Fixture directory")->capture_default_str();
  check->callback([&] { status = scenario_check(check_family, fixtures_dir); });

  PostulateOpts post;
  auto* verify = app.add_subcommand("verify-postulates", "Check *1-*4 for a measure, lex system or random measures");
  verify->add_option("--measure", post.measure, "Measure fixture")->check(CLI::ExistingFile);
  verify->add_option("--lex", post.lex, "Lexicographic system fixture")->check(CLI::ExistingFile);
  verify->add_option("--random", post.random, "Number of random regular measures");
  verify->add_option("--atoms", post.atoms, "Atoms for --random")->capture_default_str();
  verify->add_option("--seed", post.seed, "Seed for --random")->capture_default_str();
  verify->callback([&] { status = verify_postulates(post); });

  std::size_t atoms = 3;
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  auto* p1 = app.add_subcommand("verify-prop1", "Every operator comes from a regular hyperreal measure");
  p1->add_option("--atoms", atoms, "Number of atoms (2..4)")->capture_default_str();
  p1->callback([&] { status = verify_prop1(atoms); });
  auto* p2 = app.add_subcommand("verify-prop2", "Operators and conditional probability functions correspond");
  p2->add_option("--atoms", atoms, "Number of atoms (2..4)")->capture_default_str();
  p2->add_option("--samples", samples, "Random conditional probabilities")->capture_default_str();
  p2->add_option("--seed", seed, "Seed")->capture_default_str();
  p2->callback([&] { status = verify_prop2(atoms, samples, seed); });
  auto* p3 = app.add_subcommand("verify-prop3", "Operator to lex system to measure to operator");
  p3->add_option("--atoms", atoms, "Number of atoms (2..4)")->capture_default_str();
  p3->callback([&] { status = verify_prop3(atoms); });

  std::string script_path;
  auto* upgrade = app.add_subcommand("upgrade-run", "Apply a script of radical upgrades to the uniform order");
  upgrade->add_option("script", script_path, "Upgrade script")->required()->check(CLI::ExistingFile);
  upgrade->callback([&] { status = upgrade_run(script_path); });

  IteratedOpts it;
  auto* iter = app.add_subcommand("iterated-check", "Check I1 or I2 along an evidence sequence");
  iter->add_option("--postulate", it.postulate, "I1 or I2")->required()->check(CLI::IsMember({"I1", "I2"}));
  iter->add_option("--policy", it.policy, "conditioning or upgrade")
      ->required()
      ->check(CLI::IsMember({"conditioning", "upgrade"}));
  iter->add_option("--family", it.family, "Scenario family (conditioning)");
  iter->add_option("--script", it.script, "Upgrade script (upgrade)")->check(CLI::ExistingFile);
  iter->add_option("--evidence", it.evidence, "Event literal; repeat for a sequence");
  iter->add_flag("--i2-literal", it.i2_literal, "Read I2 as (K*E)*F = K*E");
  iter->callback([&] { status = iterated_check(it); });

  std::size_t enum_atoms = 3;
  std::string belief;
  bool preorders = false;
  auto* en = app.add_subcommand("enumerate", "List revision operators or plausibility orders");
  en->add_option("--atoms", enum_atoms, "Number of atoms")->capture_default_str();
  en->add_option("--belief", belief, "Belief set K as an event literal, e.g. #[0]");
  en->add_flag("--preorders", preorders, "List preorders instead of operators");
  en->callback([&] { status = enumerate(enum_atoms, belief, preorders); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const hb::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const hb::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const hb::SizeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return status;
}
