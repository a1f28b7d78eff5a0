#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperbelief/algebra.hpp"
#include "hyperbelief/hyperreal.hpp"
#include "hyperbelief/measures.hpp"

namespace hyperbelief::scenario {

// Two coins in two boxes, five witness reports over three stages.
//
// Variables, in atom-encoding order: X1, X2 (coins), R11, R21 (stage 1
// reports on boxes 1 and 2), R12, R22 (stage 2), R13, R23 (stage 3). Every
// variable takes values (tails, heads); value index 0 is tails and 1 is
// heads. R23 is never reported on and carries an even split.

inline constexpr std::size_t kTails = 0;
inline constexpr std::size_t kHeads = 1;

enum class Family { independent, dependent, correlated, footnote4 };

std::string to_string(Family family);
/// Throws ConfigError naming the bad value.
Family parse_family(std::string_view name);

struct ScenarioConfig {
  Family family = Family::independent;
  /// nullopt binds the reliability parameter to the infinitesimal e;
  /// otherwise a rational in (0, 1).
  std::optional<Rational> gamma;
  std::array<std::size_t, 2> stage1{kHeads, kHeads};
  std::array<std::size_t, 2> stage2{kTails, kTails};
  std::size_t stage3 = kHeads;  // box 1 only

  Hyperreal gamma_value() const;
  bool symbolic() const { return !gamma.has_value(); }

  /// Throws ConfigError naming the offending field.
  void validate() const;
};

/// JSON document: {"family": "...", "gamma": "eps" | "<rational>",
/// "reports": [["heads","heads"], ["tails","tails"], ["heads"]]}. Every field
/// is optional and defaults to the values above.
ScenarioConfig parse_config(std::string_view json_text);
ScenarioConfig load_config(const std::string& path);

OutcomeSpace build_space();
/// Space of the two coin variables only.
OutcomeSpace coin_space(const OutcomeSpace& space);

/// Joint prior: 1/4 on each coin configuration times the stagewise report
/// likelihoods of the configured family.
HyperMeasure build_prior(const OutcomeSpace& space, const ScenarioConfig& cfg);

/// Row order of the odds tables.
inline constexpr std::array<const char*, 4> kHypotheses{"X11", "X10", "X01", "X00"};

/// Event X^{ik}: coin 1 shows i and coin 2 shows k.
Event hypothesis_event(const OutcomeSpace& space, std::size_t row);

/// Report events of the configured schedule: R_1^{uv}, R_2^{uv}, R_13^u.
std::vector<Event> report_events(const OutcomeSpace& space, const ScenarioConfig& cfg);

struct StageColumn {
  int stage = 0;
  std::string label;       // what was learned, e.g. "R1^11"
  Event evidence_event;    // cumulative S_t
  Hyperreal evidence;      // P0(S_t)
  std::array<Hyperreal, 4> probabilities;  // P_t(X^{ik})
  std::array<Hyperreal, 4> odds;           // divided by the largest
  std::size_t argmax = 0;                  // row of the largest
  Event belief;       // K of P_t over the full space
  Event coin_belief;  // its projection onto the coins
};

struct OddsTable {
  Family family = Family::independent;
  bool symbolic = true;
  std::vector<StageColumn> columns;

  /// Header plus one row per (stage, hypothesis):
  /// stage, hypothesis, odds, evidence (hyperreal grammar).
  std::string to_tsv() const;
  /// Aligned table with powers of the parameter shown as g^k.
  std::string to_pretty() const;
};

struct ScenarioRun {
  OutcomeSpace space;
  OutcomeSpace coins;
  HyperMeasure prior;
  OddsTable table;
};

/// Conditions the prior on S_1, S_2 = S_1 and R_2, S_3 = S_2 and R_13 and
/// tabulates posterior odds, evidence and beliefs for t = 0..3.
/// Throws ConditioningError on zero evidence (numeric mode only).
ScenarioRun run(const ScenarioConfig& cfg);

/// Expected table cells, as read from a fixture file in the to_tsv format.
/// An odds or evidence cell of "-" is not compared.
struct ExpectedCell {
  int stage = 0;
  std::string hypothesis;
  std::optional<Hyperreal> odds;
  std::optional<Hyperreal> evidence;
};

std::vector<ExpectedCell> parse_fixture(std::string_view tsv_text);
std::vector<ExpectedCell> load_fixture(const std::string& path);

struct CellDiff {
  int stage = 0;
  std::string hypothesis;
  std::string column;  // "odds", "evidence" or "missing"
  std::string expected;
  std::string actual;
};

struct TableDiff {
  std::vector<CellDiff> cells;
  bool ok() const { return cells.empty(); }
  std::string to_text() const;
};

/// Odds compared exactly; evidence compared at leading order (e-exponent and
/// its coefficient). Only stages present in `expected` are compared.
TableDiff compare_table(const OddsTable& actual, const std::vector<ExpectedCell>& expected);

/// Leading-order agreement: equal valuation and leading coefficient.
bool same_leading_term(const Hyperreal& a, const Hyperreal& b);

}  // namespace hyperbelief::scenario
