#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hyperbelief/algebra.hpp"
#include "hyperbelief/measures.hpp"

namespace hyperbelief {

// Line-oriented text fixtures. Blank lines and lines starting with '#' (but
// not '#[') are ignored everywhere; errors are ConfigError messages that name the line.
//
// Space header:   space X1:H1,T1 X2:H2,T2      (or: space flat 3)
// Measure:        <space header>, then  <atom literal> TAB <hyperreal>
// Lex system:     <space header>, then "level" lines each followed by
//                 <atom literal> TAB <rational>
// Upgrade script: optional <space header>, then  upgrade <event literal>
//
// Atom literals are event literals naming exactly one atom, e.g. "#[2]" or
// "{X1=H1, X2=T2}". Atoms not listed carry weight zero.

/// Two-coin space X1 in {H1, T1}, X2 in {H2, T2}; atoms H1H2, H1T2, T1H2,
/// T1T2 in that order.
OutcomeSpace naive_coin_space();

OutcomeSpace parse_space_header(std::string_view line);

HyperMeasure parse_measure_fixture(std::string_view text);
LexSystem parse_lex_fixture(std::string_view text);

struct UpgradeScript {
  OutcomeSpace space;
  std::vector<Event> steps;
  std::vector<std::size_t> line_numbers;
};

/// Defaults to naive_coin_space() without a header.
UpgradeScript parse_upgrade_script(std::string_view text);

/// Whole file as a string; throws ConfigError if unreadable.
std::string read_file(const std::string& path);

}  // namespace hyperbelief
