#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hyperbelief {

class Event;

struct Variable {
  std::string name;
  std::vector<std::string> values;
};

/// Finite product space of named multi-valued variables.
///
/// Atoms are numbered by mixed-radix encoding of the variable values in the
/// declared order, the first variable being the most significant digit. With
/// variables (X1, X2) over (tails, heads), atom 0 is (tails, tails), atom 1 is
/// (tails, heads), atom 2 is (heads, tails) and atom 3 is (heads, heads).
///
/// Copies share identity: two handles compare equal iff they came from the
/// same construction. Events remember their space and refuse to mix with
/// events of another space.
class OutcomeSpace {
 public:
  explicit OutcomeSpace(std::vector<Variable> variables);

  /// One variable named `name` with values w0..w{n-1}.
  static OutcomeSpace flat(std::size_t atoms, std::string name = "W");

  const std::vector<Variable>& variables() const { return impl_->variables; }
  std::size_t atom_count() const { return impl_->atom_count; }

  /// Throws ConfigError for unknown names.
  std::size_t variable_index(std::string_view name) const;
  std::size_t value_index(std::size_t variable, std::string_view value) const;

  std::vector<std::size_t> decode(std::size_t atom) const;
  std::size_t encode(std::span<const std::size_t> values) const;
  std::size_t value_of(std::size_t atom, std::size_t variable) const;

  /// Value labels of the atom joined by `separator`.
  std::string atom_label(std::size_t atom, std::string_view separator = ",") const;

  Event full() const;
  Event empty() const;
  Event atom(std::size_t index) const;

  friend bool operator==(const OutcomeSpace& a, const OutcomeSpace& b) {
    return a.impl_ == b.impl_;
  }

 private:
  struct Impl {
    std::vector<Variable> variables;
    std::vector<std::size_t> strides;
    std::size_t atom_count = 1;
  };
  std::shared_ptr<const Impl> impl_;
};

/// Subset of the atoms of one OutcomeSpace.
class Event {
 public:
  explicit Event(OutcomeSpace space);

  /// Event whose members are the set bits of `mask` (spaces up to 64 atoms).
  static Event from_mask(const OutcomeSpace& space, std::uint64_t mask);
  static Event from_atoms(const OutcomeSpace& space,
                          std::span<const std::size_t> atoms);

  const OutcomeSpace& space() const { return space_; }

  bool contains(std::size_t atom) const {
    return (words_[atom / 64] >> (atom % 64)) & 1U;
  }
  void insert(std::size_t atom);
  void erase(std::size_t atom);

  std::size_t size() const;
  bool empty() const;
  std::vector<std::size_t> members() const;
  std::uint64_t mask() const;  // requires atom_count <= 64

  Event operator~() const;
  Event& operator&=(const Event& other);
  Event& operator|=(const Event& other);
  Event& operator-=(const Event& other);
  friend Event operator&(Event a, const Event& b) { return a &= b; }
  friend Event operator|(Event a, const Event& b) { return a |= b; }
  friend Event operator-(Event a, const Event& b) { return a -= b; }

  friend bool operator==(const Event& a, const Event& b);
  /// Arbitrary but fixed total order, for sorting and set containers.
  friend bool operator<(const Event& a, const Event& b);

  /// Explicit atom-list literal, e.g. "#[0,3,17]".
  std::string to_string() const;
  /// Atom labels, e.g. "{H1H2, H1T2}".
  std::string to_label_string(std::string_view separator = ",") const;

 private:
  void check_same_space(const Event& other) const;

  OutcomeSpace space_;
  std::vector<std::uint64_t> words_;
};

using Assignment = std::map<std::string, std::string, std::less<>>;

/// Atoms agreeing with every assignment; the empty map gives the full event.
Event cylinder(const OutcomeSpace& space, const Assignment& assignments);

Event complement(const Event& e);
Event intersect(const Event& a, const Event& b);
Event unite(const Event& a, const Event& b);
bool is_subset(const Event& a, const Event& b);
bool is_disjoint(const Event& a, const Event& b);

/// Parses "{X1=heads, R13=heads}" (cylinder, "{}" is the full event) or
/// "#[0,3,17]" (explicit atoms).
Event parse_event(const OutcomeSpace& space, std::string_view text);

/// Space over the named variables of `space`, in the given order.
OutcomeSpace subspace(const OutcomeSpace& space,
                      std::span<const std::string> names);

/// Image of `e` under the coordinate projection onto `target`, whose
/// variables must all occur in e's space with identical value lists.
Event project(const Event& e, const OutcomeSpace& target);

/// Preimage of `e` (over a subspace) in `space`.
Event lift(const Event& e, const OutcomeSpace& space);

/// Every event of the space, indexed by membership mask. At most 20 atoms.
std::vector<Event> all_events(const OutcomeSpace& space);

}  // namespace hyperbelief
