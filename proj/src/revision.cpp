#include "hyperbelief/revision.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>

#include "hyperbelief/errors.hpp"

namespace hyperbelief {

namespace {

void check_materializable(const OutcomeSpace& space) {
  if (space.atom_count() > RevisionOperator::kMaxAtoms) {
    throw SizeError("operator materialization supports at most " +
                    std::to_string(RevisionOperator::kMaxAtoms) + " atoms, got " +
                    std::to_string(space.atom_count()));
  }
}

std::uint64_t full_mask(std::size_t atoms) {
  return (std::uint64_t{1} << atoms) - 1;
}

}  // namespace

RevisionOperator::RevisionOperator(OutcomeSpace space, Event belief,
                                   std::vector<Event> table)
    : space_(std::move(space)), belief_(std::move(belief)), table_(std::move(table)) {
  check_materializable(space_);
  if (!(belief_.space() == space_)) throw UsageError("belief set from another space");
  if (belief_.empty()) throw ValidationError("belief set K must be nonempty");
  if (table_.size() != (std::size_t{1} << space_.atom_count())) {
    throw ValidationError("revision table must have one entry per event");
  }
  for (const auto& e : table_) {
    if (!(e.space() == space_)) throw UsageError("table entry from another space");
  }
}

RevisionOperator RevisionOperator::materialize(
    const OutcomeSpace& space, const std::function<Event(const Event&)>& revise) {
  check_materializable(space);
  return materialize(space, revise(space.full()), revise);
}

RevisionOperator RevisionOperator::materialize(
    const OutcomeSpace& space, const Event& belief,
    const std::function<Event(const Event&)>& revise) {
  check_materializable(space);
  std::vector<Event> table;
  table.reserve(std::size_t{1} << space.atom_count());
  for (auto& e : all_events(space)) table.push_back(revise(e));
  return RevisionOperator(space, belief, std::move(table));
}

const Event& RevisionOperator::revise(const Event& e) const {
  if (!(e.space() == space_)) throw UsageError("event from another space");
  return table_[e.mask()];
}

RevisionOperator RevisionOperator::with_entry(const Event& e, Event result) const {
  RevisionOperator out = *this;
  if (!(e.space() == space_) || !(result.space() == space_)) {
    throw UsageError("event from another space");
  }
  out.table_[e.mask()] = std::move(result);
  return out;
}

bool operator==(const RevisionOperator& a, const RevisionOperator& b) {
  return a.space_ == b.space_ && a.belief_ == b.belief_ && a.table_ == b.table_;
}

bool operator<(const RevisionOperator& a, const RevisionOperator& b) {
  if (a.belief_ < b.belief_) return true;
  if (b.belief_ < a.belief_) return false;
  return std::lexicographical_compare(a.table_.begin(), a.table_.end(),
                                      b.table_.begin(), b.table_.end());
}

std::string to_string(PostulateStatus status) {
  switch (status) {
    case PostulateStatus::holds: return "holds";
    case PostulateStatus::violated: return "violated";
    case PostulateStatus::vacuous: return "vacuous";
    case PostulateStatus::inapplicable: return "inapplicable";
  }
  return "unknown";
}

std::string PostulateReport::to_line() const {
  std::ostringstream os;
  os << postulate << '\t' << to_string(status) << '\t';
  if (witnesses.empty()) {
    os << '-';
  }
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    if (i != 0) os << "; ";
    for (std::size_t j = 0; j < witnesses[i].size(); ++j) {
      if (j != 0) os << ' ';
      os << witnesses[i][j].to_string();
    }
  }
  return os.str();
}

std::vector<PostulateReport> check_postulates(const RevisionOperator& op,
                                              std::size_t max_witnesses) {
  const OutcomeSpace& space = op.space();
  const std::size_t n = space.atom_count();
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<std::uint64_t> t(count);
  for (std::uint64_t m = 0; m < count; ++m) t[m] = op.table()[m].mask();
  const std::uint64_t k = op.belief().mask();
  const auto ev = [&](std::uint64_t m) { return Event::from_mask(space, m); };

  PostulateReport success{"*1", PostulateStatus::holds, {}};
  PostulateReport conditionalization{"*2", PostulateStatus::vacuous, {}};
  PostulateReport consistency{"*3", PostulateStatus::holds, {}};
  PostulateReport arrow{"*4", PostulateStatus::vacuous, {}};

  const auto violate = [&](PostulateReport& r, std::vector<Event> witness) {
    r.status = PostulateStatus::violated;
    if (r.witnesses.size() < max_witnesses) r.witnesses.push_back(std::move(witness));
  };

  for (std::uint64_t e = 0; e < count; ++e) {
    if ((t[e] & ~e) != 0) violate(success, {ev(e), ev(t[e])});
    if ((k & e) != 0) {
      if (conditionalization.status == PostulateStatus::vacuous) {
        conditionalization.status = PostulateStatus::holds;
      }
      if (t[e] != (k & e)) violate(conditionalization, {ev(e), ev(t[e])});
    }
    if (e != 0 && t[e] == 0) violate(consistency, {ev(e)});
  }
  for (std::uint64_t e = 0; e < count; ++e) {
    for (std::uint64_t f = 0; f < count; ++f) {
      const std::uint64_t meet = t[e] & f;
      if (meet == 0) continue;
      if (arrow.status == PostulateStatus::vacuous) arrow.status = PostulateStatus::holds;
      if (meet != t[e & f]) violate(arrow, {ev(e), ev(f)});
    }
  }
  return {success, conditionalization, consistency, arrow};
}

bool satisfies_postulates(const RevisionOperator& op) {
  const auto reports = check_postulates(op, 0);
  return std::none_of(reports.begin(), reports.end(), [](const auto& r) {
    return r.status == PostulateStatus::violated;
  });
}

// ---------------------------------------------------------------------------

PlausibilityOrder::PlausibilityOrder(OutcomeSpace space, std::vector<unsigned> ranks)
    : space_(std::move(space)), ranks_(std::move(ranks)) {
  if (ranks_.size() != space_.atom_count()) {
    throw ValidationError("plausibility order needs one rank per atom");
  }
  std::vector<unsigned> used = ranks_;
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  for (auto& r : ranks_) {
    r = static_cast<unsigned>(std::lower_bound(used.begin(), used.end(), r) - used.begin());
  }
}

PlausibilityOrder PlausibilityOrder::uniform(const OutcomeSpace& space) {
  return PlausibilityOrder(space, std::vector<unsigned>(space.atom_count(), 0));
}

unsigned PlausibilityOrder::max_rank() const {
  return *std::max_element(ranks_.begin(), ranks_.end());
}

Event PlausibilityOrder::block(unsigned rank) const {
  Event e(space_);
  for (std::size_t a = 0; a < ranks_.size(); ++a) {
    if (ranks_[a] == rank) e.insert(a);
  }
  return e;
}

bool operator==(const PlausibilityOrder& a, const PlausibilityOrder& b) {
  return a.space_ == b.space_ && a.ranks_ == b.ranks_;
}

bool operator<(const PlausibilityOrder& a, const PlausibilityOrder& b) {
  return a.ranks_ < b.ranks_;
}

std::string PlausibilityOrder::to_string(std::string_view separator) const {
  std::ostringstream os;
  for (std::size_t a = 0; a < ranks_.size(); ++a) {
    if (a != 0) os << ' ';
    os << space_.atom_label(a, separator) << ':' << ranks_[a];
  }
  return os.str();
}

Event order_belief(const PlausibilityOrder& order) { return order.block(0); }

Event order_revise(const PlausibilityOrder& order, const Event& e) {
  if (!(e.space() == order.space())) throw UsageError("event from another space");
  Event out(order.space());
  unsigned best = ~0U;
  for (std::size_t a : e.members()) best = std::min(best, order.rank(a));
  for (std::size_t a : e.members()) {
    if (order.rank(a) == best) out.insert(a);
  }
  return out;
}

PlausibilityOrder radical_upgrade(const PlausibilityOrder& order, const Event& e) {
  if (!(e.space() == order.space())) throw UsageError("event from another space");
  const unsigned offset = order.max_rank() + 1;
  std::vector<unsigned> raw(order.ranks());
  for (std::size_t a = 0; a < raw.size(); ++a) {
    if (!e.contains(a)) raw[a] += offset;
  }
  return PlausibilityOrder(order.space(), std::move(raw));
}

RevisionOperator induced_operator(const PlausibilityOrder& order) {
  return RevisionOperator::materialize(
      order.space(), order_belief(order),
      [&](const Event& e) { return order_revise(order, e); });
}

PlausibilityOrder operator_to_order(const RevisionOperator& op) {
  const OutcomeSpace& space = op.space();
  std::vector<unsigned> ranks(space.atom_count(), 0);
  Event remaining = space.full();
  unsigned rank = 0;
  while (!remaining.empty()) {
    const Event& block = op.revise(remaining);
    if (block.empty() || !is_subset(block, remaining)) {
      throw ValidationError("operator does not induce a system of spheres at " +
                            remaining.to_string());
    }
    for (std::size_t a : block.members()) ranks[a] = rank;
    remaining -= block;
    ++rank;
  }
  PlausibilityOrder order(space, std::move(ranks));
  // Spheres always exist; they reproduce the operator only if it is one.
  if (!(induced_operator(order) == op)) {
    throw ValidationError("operator is not induced by any plausibility order");
  }
  return order;
}

std::vector<PlausibilityOrder> enumerate_preorders(const OutcomeSpace& space,
                                                   const Event& belief) {
  if (space.atom_count() > 6) throw SizeError("preorder enumeration supports at most 6 atoms");
  if (!(belief.space() == space)) throw UsageError("belief set from another space");
  if (belief.empty()) throw ValidationError("rank-0 block must be nonempty");

  const std::vector<std::size_t> rest = (~belief).members();
  const std::size_t m = rest.size();
  std::vector<PlausibilityOrder> out;
  std::vector<unsigned> digits(m, 1);
  std::vector<unsigned> ranks(space.atom_count(), 0);
  for (;;) {
    // Keep assignments whose image is exactly {1..max}.
    const unsigned top = m == 0 ? 0 : *std::max_element(digits.begin(), digits.end());
    std::vector<bool> seen(top + 1, false);
    for (unsigned d : digits) seen[d] = true;
    if (std::all_of(seen.begin() + 1, seen.end(), [](bool b) { return b; })) {
      for (std::size_t i = 0; i < m; ++i) ranks[rest[i]] = digits[i];
      out.emplace_back(space, ranks);
    }
    std::size_t i = 0;
    while (i < m && digits[i] == m) digits[i++] = 1;
    if (i == m) break;
    ++digits[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t candidate_table_count(std::size_t atoms) {
  std::size_t count = 1;
  for (std::uint64_t e = 1; e < (std::uint64_t{1} << atoms); ++e) {
    count *= (std::size_t{1} << std::popcount(e)) - 1;
  }
  return count;
}

namespace {

bool mask_table_is_operator(std::uint64_t k, const std::vector<std::uint64_t>& t) {
  const std::uint64_t count = t.size();
  for (std::uint64_t e = 0; e < count; ++e) {
    if ((t[e] & ~e) != 0) return false;
    if ((k & e) != 0 && t[e] != (k & e)) return false;
    if (e != 0 && t[e] == 0) return false;
  }
  for (std::uint64_t e = 1; e < count; ++e) {
    for (std::uint64_t f = 1; f < count; ++f) {
      const std::uint64_t meet = t[e] & f;
      if (meet != 0 && meet != t[e & f]) return false;
    }
  }
  return true;
}

std::vector<RevisionOperator> filter_candidate_tables(const OutcomeSpace& space,
                                                      const Event& belief) {
  const std::size_t n = space.atom_count();
  const std::uint64_t count = std::uint64_t{1} << n;
  const std::uint64_t k = belief.mask();

  // choices[e]: nonempty subsets of e; slot[e] is the current pick.
  std::vector<std::vector<std::uint64_t>> choices(count);
  for (std::uint64_t e = 1; e < count; ++e) {
    for (std::uint64_t s = e; s != 0; s = (s - 1) & e) choices[e].push_back(s);
    std::sort(choices[e].begin(), choices[e].end());
  }
  std::vector<std::size_t> slot(count, 0);
  std::vector<std::uint64_t> table(count, 0);

  std::vector<RevisionOperator> out;
  for (;;) {
    for (std::uint64_t e = 1; e < count; ++e) table[e] = choices[e][slot[e]];
    if (table[full_mask(n)] == k && mask_table_is_operator(k, table)) {
      std::vector<Event> events;
      events.reserve(count);
      for (auto m : table) events.push_back(Event::from_mask(space, m));
      out.emplace_back(space, belief, std::move(events));
    }
    std::uint64_t e = 1;
    while (e < count && slot[e] + 1 == choices[e].size()) slot[e++] = 0;
    if (e == count) break;
    ++slot[e];
  }
  return out;
}

}  // namespace

std::vector<RevisionOperator> enumerate_operators(const OutcomeSpace& space,
                                                  const Event& belief) {
  if (!(belief.space() == space)) throw UsageError("belief set from another space");
  if (belief.empty()) throw ValidationError("belief set K must be nonempty");
  std::vector<RevisionOperator> out;
  if (space.atom_count() <= 3) {
    out = filter_candidate_tables(space, belief);
  } else if (space.atom_count() == 4) {
    for (const auto& order : enumerate_preorders(space, belief)) {
      RevisionOperator op = induced_operator(order);
      if (satisfies_postulates(op) && op.revise(space.full()) == belief) {
        out.push_back(std::move(op));
      }
    }
  } else {
    throw SizeError("operator enumeration supports at most 4 atoms");
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

namespace {

void check_partition(const OutcomeSpace& space, const FactorPartition& factors) {
  std::multiset<std::string> named;
  for (const auto& f : factors) {
    if (f.empty()) throw UsageError("empty factor in variable partition");
    named.insert(f.begin(), f.end());
  }
  std::multiset<std::string> actual;
  for (const auto& v : space.variables()) actual.insert(v.name);
  if (named != actual) {
    throw UsageError("factors do not partition the variables of the space");
  }
}

}  // namespace

bool factorizes(const Event& e, const FactorPartition& factors) {
  const OutcomeSpace& space = e.space();
  check_partition(space, factors);
  Event product = space.full();
  for (const auto& f : factors) {
    const OutcomeSpace sub = subspace(space, f);
    product &= lift(project(e, sub), space);
  }
  return product == e;
}

std::optional<std::size_t> first_dependent_stage(
    const std::vector<PlausibilityOrder>& orders, const FactorPartition& factors) {
  for (std::size_t stage = 0; stage < orders.size(); ++stage) {
    const PlausibilityOrder& order = orders[stage];
    const OutcomeSpace& space = order.space();
    check_partition(space, factors);
    std::vector<OutcomeSpace> subs;
    for (const auto& f : factors) subs.push_back(subspace(space, f));

    const Event belief = order_belief(order);
    bool independent = factorizes(belief, factors);
    for (std::size_t f = 0; independent && f < subs.size(); ++f) {
      for (const Event& c : all_events(subs[f])) {
        if (c.empty()) continue;
        const Event revised = order_revise(order, lift(c, space));
        if (!factorizes(revised, factors)) {
          independent = false;
          break;
        }
        for (std::size_t g = 0; g < subs.size(); ++g) {
          if (g == f) continue;
          if (is_disjoint(project(revised, subs[g]), project(belief, subs[g]))) {
            independent = false;
            break;
          }
        }
        if (!independent) break;
      }
    }
    if (!independent) return stage;
  }
  return std::nullopt;
}

bool independence_preserved(const std::vector<PlausibilityOrder>& orders,
                            const FactorPartition& factors) {
  return !first_dependent_stage(orders, factors).has_value();
}

}  // namespace hyperbelief
