#include "hyperbelief/fixtures.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "hyperbelief/errors.hpp"

namespace hyperbelief {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct Line {
  std::size_t number;
  std::string_view text;
};

// Non-blank, non-comment lines, trimmed. "#[" opens an atom literal, not a comment.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    const auto line = trim(text.substr(start, end == std::string_view::npos ? end : end - start));
    ++number;
    const bool comment = !line.empty() && line.front() == '#' && (line.size() == 1 || line[1] != '[');
    if (!line.empty() && !comment) out.push_back({number, line});
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ConfigError("line " + std::to_string(line) + ": " + what);
}

bool is_header(std::string_view line) {
  return line.substr(0, 6) == "space " || line == "space";
}

std::size_t single_atom(const OutcomeSpace& space, std::string_view literal, std::size_t line) {
  Event e(space);
  try {
    e = parse_event(space, literal);
  } catch (const ConfigError& err) {
    fail(line, err.what());
  }
  if (e.size() != 1) fail(line, "'" + std::string(literal) + "' does not name exactly one atom");
  return e.members().front();
}

std::pair<std::string_view, std::string_view> split_tab(const Line& l) {
  const auto tab = l.text.rfind('\t');
  if (tab == std::string_view::npos) fail(l.number, "expected <atom> TAB <value>");
  return {trim(l.text.substr(0, tab)), trim(l.text.substr(tab + 1))};
}

}  // namespace

OutcomeSpace naive_coin_space() {
  return OutcomeSpace({{"X1", {"H1", "T1"}}, {"X2", {"H2", "T2"}}});
}

OutcomeSpace parse_space_header(std::string_view line) {
  line = trim(line);
  if (!is_header(line)) throw ConfigError("expected 'space ...' header");
  std::istringstream in{std::string(line.substr(5))};
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.size() == 2 && tokens[0] == "flat") {
    std::size_t n = 0;
    try {
      n = std::stoul(tokens[1]);
    } catch (const std::exception&) {
      throw ConfigError("space header: bad atom count '" + tokens[1] + "'");
    }
    return OutcomeSpace::flat(n);
  }
  if (tokens.empty()) throw ConfigError("space header declares no variables");
  std::vector<Variable> vars;
  for (const auto& tok : tokens) {
    const auto colon = tok.find(':');
    if (colon == std::string::npos) throw ConfigError("space header: expected NAME:v1,v2 in '" + tok + "'");
    Variable v{tok.substr(0, colon), {}};
    std::istringstream values(tok.substr(colon + 1));
    for (std::string value; std::getline(values, value, ',');) v.values.push_back(value);
    vars.push_back(std::move(v));
  }
  return OutcomeSpace(std::move(vars));
}

HyperMeasure parse_measure_fixture(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty() || !is_header(lines[0].text)) throw ConfigError("measure fixture needs a space header");
  const OutcomeSpace space = parse_space_header(lines[0].text);
  std::vector<std::optional<Hyperreal>> weights(space.atom_count());
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [atom_text, value_text] = split_tab(lines[i]);
    const std::size_t atom = single_atom(space, atom_text, lines[i].number);
    if (weights[atom]) fail(lines[i].number, "atom listed twice");
    try {
      weights[atom] = Hyperreal::parse(value_text);
    } catch (const ConfigError& err) {
      fail(lines[i].number, err.what());
    }
  }
  std::vector<Hyperreal> out;
  for (auto& w : weights) out.push_back(w.value_or(Hyperreal(0)));
  try {
    return HyperMeasure(space, std::move(out));
  } catch (const ValidationError& err) {
    throw ConfigError(std::string("invalid measure: ") + err.what());
  }
}

LexSystem parse_lex_fixture(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty() || !is_header(lines[0].text)) throw ConfigError("lex fixture needs a space header");
  const OutcomeSpace space = parse_space_header(lines[0].text);
  std::vector<std::vector<Rational>> levels;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].text == "level") {
      levels.emplace_back(space.atom_count(), Rational(0));
      continue;
    }
    if (levels.empty()) fail(lines[i].number, "entry before the first 'level'");
    const auto [atom_text, value_text] = split_tab(lines[i]);
    const std::size_t atom = single_atom(space, atom_text, lines[i].number);
    try {
      levels.back()[atom] = parse_rational(value_text);
    } catch (const ConfigError& err) {
      fail(lines[i].number, err.what());
    }
  }
  try {
    return LexSystem(space, std::move(levels));
  } catch (const ValidationError& err) {
    throw ConfigError(std::string("invalid lexicographic system: ") + err.what());
  }
}

UpgradeScript parse_upgrade_script(std::string_view text) {
  const auto lines = content_lines(text);
  std::size_t first = 0;
  UpgradeScript script{naive_coin_space(), {}, {}};
  if (!lines.empty() && is_header(lines[0].text)) {
    try {
      script.space = parse_space_header(lines[0].text);
    } catch (const ConfigError& err) {
      fail(lines[0].number, err.what());
    }
    first = 1;
  }
  for (std::size_t i = first; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.text.substr(0, 8) != "upgrade ") fail(l.number, "expected 'upgrade <event>'");
    try {
      script.steps.push_back(parse_event(script.space, l.text.substr(8)));
    } catch (const ConfigError& err) {
      fail(l.number, err.what());
    }
    script.line_numbers.push_back(l.number);
  }
  return script;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace hyperbelief
