#include "hyperbelief/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "hyperbelief/errors.hpp"

namespace hyperbelief::scenario {

namespace {

constexpr std::size_t kX1 = 0, kX2 = 1, kR11 = 2, kR21 = 3, kR12 = 4, kR22 = 5,
                      kR13 = 6;

const char* value_name(std::size_t v) { return v == kHeads ? "heads" : "tails"; }

std::size_t parse_coin(const nlohmann::json& j, const std::string& field) {
  if (!j.is_string()) throw ConfigError("field '" + field + "': expected \"heads\" or \"tails\"");
  const auto s = j.get<std::string>();
  if (s == "heads") return kHeads;
  if (s == "tails") return kTails;
  throw ConfigError("field '" + field + "': expected \"heads\" or \"tails\", got \"" + s + "\"");
}

}  // namespace

std::string to_string(Family family) {
  switch (family) {
    case Family::independent: return "independent";
    case Family::dependent: return "dependent";
    case Family::correlated: return "correlated";
    case Family::footnote4: return "footnote4";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::independent, Family::dependent, Family::correlated,
                   Family::footnote4}) {
    if (to_string(f) == name) return f;
  }
  throw ConfigError("field 'family': unknown family '" + std::string(name) + "'");
}

Hyperreal ScenarioConfig::gamma_value() const {
  return gamma ? Hyperreal(*gamma) : Hyperreal::eps();
}

void ScenarioConfig::validate() const {
  if (gamma && (*gamma <= 0 || *gamma >= 1)) {
    throw ConfigError("field 'gamma': must lie strictly between 0 and 1");
  }
  for (std::size_t v : {stage1[0], stage1[1], stage2[0], stage2[1], stage3}) {
    if (v > kHeads) throw ConfigError("field 'reports': report values are heads or tails");
  }
}

ScenarioConfig parse_config(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  ScenarioConfig cfg;
  for (const auto& [key, value] : doc.items()) {
    if (key == "family") {
      if (!value.is_string()) throw ConfigError("field 'family': expected a string");
      cfg.family = parse_family(value.get<std::string>());
    } else if (key == "gamma") {
      if (!value.is_string()) {
        throw ConfigError("field 'gamma': expected \"eps\" or a rational string");
      }
      const auto g = value.get<std::string>();
      if (g == "eps" || g == "e") {
        cfg.gamma.reset();
      } else {
        try {
          cfg.gamma = parse_rational(g);
        } catch (const ConfigError&) {
          throw ConfigError("field 'gamma': malformed rational \"" + g + "\"");
        }
      }
    } else if (key == "reports") {
      if (!value.is_array() || value.size() != 3 || !value[0].is_array() ||
          value[0].size() != 2 || !value[1].is_array() || value[1].size() != 2 ||
          !value[2].is_array() || value[2].size() != 1) {
        throw ConfigError(
            "field 'reports': expected [[box1, box2], [box1, box2], [box1]]");
      }
      cfg.stage1 = {parse_coin(value[0][0], "reports"), parse_coin(value[0][1], "reports")};
      cfg.stage2 = {parse_coin(value[1][0], "reports"), parse_coin(value[1][1], "reports")};
      cfg.stage3 = parse_coin(value[2][0], "reports");
    } else {
      throw ConfigError("unknown field '" + key + "'");
    }
  }
  cfg.validate();
  return cfg;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

OutcomeSpace build_space() {
  std::vector<Variable> vars;
  for (const char* name : {"X1", "X2", "R11", "R21", "R12", "R22", "R13", "R23"}) {
    vars.push_back({name, {"tails", "heads"}});
  }
  return OutcomeSpace(std::move(vars));
}

OutcomeSpace coin_space(const OutcomeSpace& space) {
  const std::vector<std::string> names{"X1", "X2"};
  return subspace(space, names);
}

namespace {

// Stagewise report likelihoods of one family, as exact field elements.
class Likelihoods {
 public:
  explicit Likelihoods(const ScenarioConfig& cfg)
      : family_(cfg.family), gamma_(cfg.gamma_value()) {
    for (unsigned k = 0; k <= 8; ++k) powers_.push_back(gamma_.pow(k));
    correlated_norm_ = Hyperreal(1) + powers_[2] + powers_[3] + powers_[5];
  }

  // P(report u on box j at stage t | coin i): the single-report rule.
  Hyperreal single(unsigned t, bool match) const {
    const unsigned k = (family_ == Family::footnote4 && t > 1) ? 2 : t;
    const Hyperreal norm = Hyperreal(1) + powers_[k];
    return (match ? Hyperreal(1) : powers_[k]) / norm;
  }

  // P(R_t^{uv} | X^{ik}) for stages 1 and 2.
  Hyperreal pair(unsigned t, std::size_t i, std::size_t k, std::size_t u,
                 std::size_t v) const {
    if (family_ != Family::dependent) return single(t, u == i) * single(t, v == k);
    const Hyperreal norm = Hyperreal(1) + Hyperreal(2) * powers_[1 + t] + powers_[2 + t];
    const int misses = (u != i) + (v != k);
    const Hyperreal& w = misses == 0 ? powers_[0] : misses == 1 ? powers_[1 + t] : powers_[2 + t];
    return w / norm;
  }

  // P(R_13^u | X^{ik}, R_12^v, R_22^w).
  Hyperreal elmer(std::size_t i, std::size_t k, std::size_t v, std::size_t w,
                  std::size_t u) const {
    if (family_ != Family::correlated) return single(3, u == i);
    // Exactly one value of u is listed for each (i, k, v, w); the other gets
    // the complementary probability.
    const std::size_t listed = i != v ? i : 1 - i;
    const Hyperreal& weight = i != v ? (w != k ? powers_[0] : powers_[2])
                                     : (w != k ? powers_[3] : powers_[5]);
    const Hyperreal p = weight / correlated_norm_;
    return u == listed ? p : Hyperreal(1) - p;
  }

 private:
  Family family_;
  Hyperreal gamma_;
  std::vector<Hyperreal> powers_;
  Hyperreal correlated_norm_;
};

}  // namespace

HyperMeasure build_prior(const OutcomeSpace& space, const ScenarioConfig& cfg) {
  cfg.validate();
  const Likelihoods lik(cfg);
  const Hyperreal quarter(Rational(1, 4));
  const Hyperreal half(Rational(1, 2));

  // Stage factors depend on few coordinates; tabulate them once.
  Hyperreal s1[2][2][2][2], s2[2][2][2][2], s3[2][2][2][2][2];
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t k = 0; k < 2; ++k) {
      for (std::size_t u = 0; u < 2; ++u) {
        for (std::size_t v = 0; v < 2; ++v) {
          s1[i][k][u][v] = quarter * lik.pair(1, i, k, u, v);
          s2[i][k][u][v] = lik.pair(2, i, k, u, v);
          for (std::size_t e = 0; e < 2; ++e) s3[i][k][u][v][e] = half * lik.elmer(i, k, u, v, e);
        }
      }
    }
  }

  std::vector<Hyperreal> weights;
  weights.reserve(space.atom_count());
  for (std::size_t a = 0; a < space.atom_count(); ++a) {
    const auto x = space.decode(a);
    weights.push_back(s1[x[kX1]][x[kX2]][x[kR11]][x[kR21]] *
                      s2[x[kX1]][x[kX2]][x[kR12]][x[kR22]] *
                      s3[x[kX1]][x[kX2]][x[kR12]][x[kR22]][x[kR13]]);
  }
  return HyperMeasure(space, std::move(weights));
}

Event hypothesis_event(const OutcomeSpace& space, std::size_t row) {
  const std::size_t i = row < 2 ? kHeads : kTails;
  const std::size_t k = row % 2 == 0 ? kHeads : kTails;
  return cylinder(space, {{"X1", value_name(i)}, {"X2", value_name(k)}});
}

std::vector<Event> report_events(const OutcomeSpace& space, const ScenarioConfig& cfg) {
  return {
      cylinder(space, {{"R11", value_name(cfg.stage1[0])}, {"R21", value_name(cfg.stage1[1])}}),
      cylinder(space, {{"R12", value_name(cfg.stage2[0])}, {"R22", value_name(cfg.stage2[1])}}),
      cylinder(space, {{"R13", value_name(cfg.stage3)}}),
  };
}

ScenarioRun run(const ScenarioConfig& cfg) {
  cfg.validate();
  OutcomeSpace space = build_space();
  OutcomeSpace coins = coin_space(space);
  HyperMeasure prior = build_prior(space, cfg);
  const auto reports = report_events(space, cfg);
  const std::array<std::string, 4> labels{
      "T",
      "R1^" + std::to_string(cfg.stage1[0]) + std::to_string(cfg.stage1[1]),
      "R2^" + std::to_string(cfg.stage2[0]) + std::to_string(cfg.stage2[1]),
      "R13^" + std::to_string(cfg.stage3)};

  std::vector<Event> hypotheses;
  for (std::size_t r = 0; r < 4; ++r) hypotheses.push_back(hypothesis_event(space, r));

  OddsTable table;
  table.family = cfg.family;
  table.symbolic = cfg.symbolic();
  Event cumulative = space.full();
  HyperMeasure current = prior;
  for (int t = 0; t <= 3; ++t) {
    if (t > 0) {
      cumulative &= reports[t - 1];
      // Stagewise conditioning; equals one-shot conditioning on S_t.
      current = condition(current, reports[t - 1]);
    }
    StageColumn col{t, labels[t], cumulative, measure_of(prior, cumulative), {}, {}, 0,
                    space.empty(), coins.empty()};
    for (std::size_t r = 0; r < 4; ++r) {
      col.probabilities[r] = measure_of(current, hypotheses[r]);
      if (col.probabilities[r] > col.probabilities[col.argmax]) col.argmax = r;
    }
    for (std::size_t r = 0; r < 4; ++r) {
      col.odds[r] = col.probabilities[r] / col.probabilities[col.argmax];
    }
    col.belief = belief_set(current);
    col.coin_belief = project(col.belief, coins);
    table.columns.push_back(std::move(col));
  }
  return ScenarioRun{std::move(space), std::move(coins), std::move(prior), std::move(table)};
}

std::string OddsTable::to_tsv() const {
  std::ostringstream os;
  os << "stage\thypothesis\todds\tevidence\n";
  for (const auto& col : columns) {
    for (std::size_t r = 0; r < 4; ++r) {
      os << col.stage << '\t' << kHypotheses[r] << '\t' << col.odds[r].to_string() << '\t'
         << col.evidence.to_string() << '\n';
    }
  }
  return os.str();
}

namespace {

// Leading term only, e.g. "(1/4)g^2"; exact value in numeric mode.
std::string pretty_cell(const Hyperreal& h, bool symbolic) {
  if (!symbolic) return h.to_string();
  if (h.is_zero()) return "0";
  const Rational c = leading_coefficient(h);
  const auto v = valuation(h);
  std::string out;
  if (c != 1 || v == 0) {
    out = c.get_den() == 1 || v == 0 ? c.get_str() : "(" + c.get_str() + ")";
  }
  if (v != 0) out += v == 1 ? "g" : "g^" + std::to_string(v);
  if (h != Hyperreal(EpsPoly::monomial(c, static_cast<EpsPoly::Exponent>(std::max<std::int64_t>(v, 0))))) {
    out += " + ...";
  }
  return out;
}

}  // namespace

std::string OddsTable::to_pretty() const {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"", "t=0", "t=1", "t=2", "t=3"};
  header.resize(columns.size() + 1);
  for (std::size_t c = 0; c < columns.size(); ++c) header[c + 1] = "t=" + std::to_string(columns[c].stage);
  rows.push_back(header);
  std::vector<std::string> learned{"After learning"};
  for (const auto& col : columns) learned.push_back(col.label);
  rows.push_back(learned);
  for (std::size_t r = 0; r < 4; ++r) {
    std::vector<std::string> row{std::string("Odds for ") + kHypotheses[r]};
    for (const auto& col : columns) row.push_back(pretty_cell(col.odds[r], symbolic));
    rows.push_back(row);
  }
  std::vector<std::string> evidence{"Prob. evidence"};
  for (const auto& col : columns) evidence.push_back(pretty_cell(col.evidence, symbolic));
  rows.push_back(evidence);
  std::vector<std::string> belief{"Belief"};
  for (const auto& col : columns) {
    std::string cell;
    for (std::size_t r = 0; r < 4; ++r) {
      if (!is_disjoint(col.coin_belief, project(hypothesis_event(col.belief.space(), r),
                                                col.coin_belief.space()))) {
        if (!cell.empty()) cell += ",";
        cell += kHypotheses[r];
      }
    }
    belief.push_back(cell);
  }
  rows.push_back(belief);

  std::vector<std::size_t> width(rows[0].size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  os << "family: " << to_string(family) << (symbolic ? " (g infinitesimal)" : " (numeric g)")
     << '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << std::left << std::setw(static_cast<int>(width[c])) << row[c];
      os << (c + 1 == row.size() ? "\n" : "  ");
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------

std::vector<ExpectedCell> parse_fixture(std::string_view tsv_text) {
  std::vector<ExpectedCell> cells;
  std::istringstream in{std::string(tsv_text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#' || line.rfind("stage\t", 0) == 0) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
      const auto tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (fields.size() != 4) {
      throw ConfigError("fixture line " + std::to_string(lineno) + ": expected 4 tab-separated fields");
    }
    ExpectedCell cell;
    try {
      cell.stage = std::stoi(fields[0]);
    } catch (const std::exception&) {
      throw ConfigError("fixture line " + std::to_string(lineno) + ": bad stage");
    }
    cell.hypothesis = fields[1];
    if (std::find(kHypotheses.begin(), kHypotheses.end(), cell.hypothesis) == kHypotheses.end()) {
      throw ConfigError("fixture line " + std::to_string(lineno) + ": unknown hypothesis '" +
                        cell.hypothesis + "'");
    }
    if (fields[2] != "-") cell.odds = Hyperreal::parse(fields[2]);
    if (fields[3] != "-") cell.evidence = Hyperreal::parse(fields[3]);
    cells.push_back(std::move(cell));
  }
  return cells;
}

std::vector<ExpectedCell> load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read fixture '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_fixture(buf.str());
}

bool same_leading_term(const Hyperreal& a, const Hyperreal& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return valuation(a) == valuation(b) && leading_coefficient(a) == leading_coefficient(b);
}

TableDiff compare_table(const OddsTable& actual, const std::vector<ExpectedCell>& expected) {
  TableDiff diff;
  for (const auto& cell : expected) {
    const auto col = std::find_if(actual.columns.begin(), actual.columns.end(),
                                  [&](const StageColumn& c) { return c.stage == cell.stage; });
    if (col == actual.columns.end()) {
      diff.cells.push_back({cell.stage, cell.hypothesis, "missing", "stage present", "absent"});
      continue;
    }
    const auto row = static_cast<std::size_t>(
        std::find(kHypotheses.begin(), kHypotheses.end(), cell.hypothesis) - kHypotheses.begin());
    if (cell.odds && *cell.odds != col->odds[row]) {
      diff.cells.push_back({cell.stage, cell.hypothesis, "odds", cell.odds->to_string(),
                            col->odds[row].to_string()});
    }
    if (cell.evidence && !same_leading_term(*cell.evidence, col->evidence)) {
      diff.cells.push_back({cell.stage, cell.hypothesis, "evidence", cell.evidence->to_string(),
                            col->evidence.to_string()});
    }
  }
  return diff;
}

std::string TableDiff::to_text() const {
  std::ostringstream os;
  for (const auto& c : cells) {
    os << "stage " << c.stage << '\t' << c.hypothesis << '\t' << c.column << "\texpected "
       << c.expected << "\tactual " << c.actual << '\n';
  }
  return os.str();
}

}  // namespace hyperbelief::scenario
