#include "hyperbelief/algebra.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <set>
#include <sstream>

#include "hyperbelief/errors.hpp"

namespace hyperbelief {

OutcomeSpace::OutcomeSpace(std::vector<Variable> variables) {
  auto impl = std::make_shared<Impl>();
  std::set<std::string, std::less<>> names;
  for (const auto& v : variables) {
    if (v.name.empty()) throw ConfigError("variable with empty name");
    if (!names.insert(v.name).second) {
      throw ConfigError("duplicate variable name '" + v.name + "'");
    }
    if (v.values.size() < 2) {
      throw ConfigError("variable '" + v.name + "' needs at least two values");
    }
    std::set<std::string, std::less<>> labels(v.values.begin(), v.values.end());
    if (labels.size() != v.values.size()) {
      throw ConfigError("duplicate value label in variable '" + v.name + "'");
    }
  }
  impl->strides.assign(variables.size(), 1);
  for (std::size_t i = variables.size(); i-- > 0;) {
    impl->strides[i] = impl->atom_count;
    impl->atom_count *= variables[i].values.size();
    if (impl->atom_count > (std::size_t{1} << 24)) {
      throw SizeError("outcome space too large");
    }
  }
  impl->variables = std::move(variables);
  impl_ = std::move(impl);
}

OutcomeSpace OutcomeSpace::flat(std::size_t atoms, std::string name) {
  Variable v{std::move(name), {}};
  for (std::size_t i = 0; i < atoms; ++i) v.values.push_back("w" + std::to_string(i));
  return OutcomeSpace({std::move(v)});
}

std::size_t OutcomeSpace::variable_index(std::string_view name) const {
  const auto& vars = impl_->variables;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i].name == name) return i;
  }
  throw ConfigError("unknown variable '" + std::string(name) + "'");
}

std::size_t OutcomeSpace::value_index(std::size_t variable,
                                      std::string_view value) const {
  const auto& values = impl_->variables.at(variable).values;
  const auto it = std::find(values.begin(), values.end(), value);
  if (it == values.end()) {
    throw ConfigError("unknown value '" + std::string(value) +
                      "' for variable '" + impl_->variables[variable].name +
                      "'");
  }
  return static_cast<std::size_t>(it - values.begin());
}

std::vector<std::size_t> OutcomeSpace::decode(std::size_t atom) const {
  std::vector<std::size_t> out(impl_->variables.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = value_of(atom, i);
  return out;
}

std::size_t OutcomeSpace::encode(std::span<const std::size_t> values) const {
  std::size_t atom = 0;
  for (std::size_t i = 0; i < values.size(); ++i) atom += values[i] * impl_->strides[i];
  return atom;
}

std::size_t OutcomeSpace::value_of(std::size_t atom, std::size_t variable) const {
  return (atom / impl_->strides[variable]) %
         impl_->variables[variable].values.size();
}

std::string OutcomeSpace::atom_label(std::size_t atom,
                                     std::string_view separator) const {
  std::string out;
  for (std::size_t i = 0; i < impl_->variables.size(); ++i) {
    if (i != 0) out += separator;
    out += impl_->variables[i].values[value_of(atom, i)];
  }
  return out;
}

Event OutcomeSpace::full() const { return ~Event(*this); }
Event OutcomeSpace::empty() const { return Event(*this); }

Event OutcomeSpace::atom(std::size_t index) const {
  Event e(*this);
  e.insert(index);
  return e;
}

// ---------------------------------------------------------------------------

Event::Event(OutcomeSpace space)
    : space_(std::move(space)), words_((space_.atom_count() + 63) / 64, 0) {}

Event Event::from_mask(const OutcomeSpace& space, std::uint64_t mask) {
  if (space.atom_count() > 64) throw SizeError("mask events need <= 64 atoms");
  Event e(space);
  if (space.atom_count() < 64) mask &= (std::uint64_t{1} << space.atom_count()) - 1;
  e.words_[0] = mask;
  return e;
}

Event Event::from_atoms(const OutcomeSpace& space,
                        std::span<const std::size_t> atoms) {
  Event e(space);
  for (std::size_t a : atoms) e.insert(a);
  return e;
}

void Event::insert(std::size_t atom) {
  if (atom >= space_.atom_count()) {
    throw ConfigError("atom index " + std::to_string(atom) + " out of range");
  }
  words_[atom / 64] |= std::uint64_t{1} << (atom % 64);
}

void Event::erase(std::size_t atom) {
  if (atom < space_.atom_count()) words_[atom / 64] &= ~(std::uint64_t{1} << (atom % 64));
}

std::size_t Event::size() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool Event::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

std::vector<std::size_t> Event::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < space_.atom_count(); ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::uint64_t Event::mask() const {
  if (space_.atom_count() > 64) throw SizeError("mask needs <= 64 atoms");
  return words_.empty() ? 0 : words_[0];
}

Event Event::operator~() const {
  Event out = *this;
  for (auto& w : out.words_) w = ~w;
  const std::size_t tail = space_.atom_count() % 64;
  if (tail != 0) out.words_.back() &= (std::uint64_t{1} << tail) - 1;
  return out;
}

void Event::check_same_space(const Event& other) const {
  if (!(space_ == other.space_)) {
    throw UsageError("events belong to different outcome spaces");
  }
}

Event& Event::operator&=(const Event& other) {
  check_same_space(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

Event& Event::operator|=(const Event& other) {
  check_same_space(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

Event& Event::operator-=(const Event& other) {
  check_same_space(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

bool operator==(const Event& a, const Event& b) {
  a.check_same_space(b);
  return a.words_ == b.words_;
}

bool operator<(const Event& a, const Event& b) {
  a.check_same_space(b);
  return std::lexicographical_compare(a.words_.rbegin(), a.words_.rend(),
                                      b.words_.rbegin(), b.words_.rend());
}

std::string Event::to_string() const {
  std::ostringstream os;
  os << "#[";
  bool first = true;
  for (std::size_t a : members()) {
    if (!first) os << ',';
    first = false;
    os << a;
  }
  os << ']';
  return os.str();
}

std::string Event::to_label_string(std::string_view separator) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t a : members()) {
    if (!first) out += ", ";
    first = false;
    out += space_.atom_label(a, separator);
  }
  return out + "}";
}

// ---------------------------------------------------------------------------

Event cylinder(const OutcomeSpace& space, const Assignment& assignments) {
  std::vector<std::pair<std::size_t, std::size_t>> fixed;
  for (const auto& [name, value] : assignments) {
    const std::size_t var = space.variable_index(name);
    fixed.emplace_back(var, space.value_index(var, value));
  }
  Event e(space);
  for (std::size_t a = 0; a < space.atom_count(); ++a) {
    const bool match = std::all_of(fixed.begin(), fixed.end(), [&](const auto& f) {
      return space.value_of(a, f.first) == f.second;
    });
    if (match) e.insert(a);
  }
  return e;
}

Event complement(const Event& e) { return ~e; }
Event intersect(const Event& a, const Event& b) { return a & b; }
Event unite(const Event& a, const Event& b) { return a | b; }
bool is_subset(const Event& a, const Event& b) { return (a - b).empty(); }
bool is_disjoint(const Event& a, const Event& b) { return (a & b).empty(); }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

Event parse_event(const OutcomeSpace& space, std::string_view text) {
  const std::string_view s = trim(text);
  const auto bad = [&](const std::string& why) {
    return ConfigError("malformed event literal '" + std::string(text) + "': " + why);
  };
  if (s.size() >= 3 && s.substr(0, 2) == "#[" && s.back() == ']') {
    Event e(space);
    const std::string_view body = trim(s.substr(2, s.size() - 3));
    if (body.empty()) return e;
    for (auto item : split(body, ',')) {
      if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
          })) {
        throw bad("expected atom index");
      }
      const std::size_t atom = std::stoul(std::string(item));
      if (atom >= space.atom_count()) throw bad("atom index out of range");
      e.insert(atom);
    }
    return e;
  }
  if (s.size() >= 2 && s.front() == '{' && s.back() == '}') {
    Assignment assignments;
    const std::string_view body = trim(s.substr(1, s.size() - 2));
    if (!body.empty()) {
      for (auto item : split(body, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) throw bad("expected name=value");
        const std::string name(trim(item.substr(0, eq)));
        const std::string value(trim(item.substr(eq + 1)));
        if (!assignments.emplace(name, value).second) {
          throw bad("variable '" + name + "' assigned twice");
        }
      }
    }
    return cylinder(space, assignments);
  }
  throw bad("expected {var=value, ...} or #[atoms]");
}

OutcomeSpace subspace(const OutcomeSpace& space,
                      std::span<const std::string> names) {
  std::vector<Variable> vars;
  for (const auto& n : names) vars.push_back(space.variables()[space.variable_index(n)]);
  return OutcomeSpace(std::move(vars));
}

namespace {

// For each variable of `sub`, its index in `space`; validates value lists.
std::vector<std::size_t> embedding(const OutcomeSpace& sub, const OutcomeSpace& space) {
  std::vector<std::size_t> index;
  for (const auto& v : sub.variables()) {
    const std::size_t i = space.variable_index(v.name);
    if (space.variables()[i].values != v.values) {
      throw UsageError("variable '" + v.name + "' has different values in the two spaces");
    }
    index.push_back(i);
  }
  return index;
}

}  // namespace

Event project(const Event& e, const OutcomeSpace& target) {
  const OutcomeSpace& space = e.space();
  const auto index = embedding(target, space);
  Event out(target);
  std::vector<std::size_t> coords(index.size());
  for (std::size_t a : e.members()) {
    for (std::size_t i = 0; i < index.size(); ++i) coords[i] = space.value_of(a, index[i]);
    out.insert(target.encode(coords));
  }
  return out;
}

Event lift(const Event& e, const OutcomeSpace& space) {
  const OutcomeSpace& sub = e.space();
  const auto index = embedding(sub, space);
  Event out(space);
  std::vector<std::size_t> coords(index.size());
  for (std::size_t a = 0; a < space.atom_count(); ++a) {
    for (std::size_t i = 0; i < index.size(); ++i) coords[i] = space.value_of(a, index[i]);
    if (e.contains(sub.encode(coords))) out.insert(a);
  }
  return out;
}

std::vector<Event> all_events(const OutcomeSpace& space) {
  if (space.atom_count() > 20) throw SizeError("event enumeration needs <= 20 atoms");
  const std::uint64_t count = std::uint64_t{1} << space.atom_count();
  std::vector<Event> out;
  out.reserve(count);
  for (std::uint64_t m = 0; m < count; ++m) out.push_back(Event::from_mask(space, m));
  return out;
}

}  // namespace hyperbelief
