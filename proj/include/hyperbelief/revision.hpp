#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hyperbelief/algebra.hpp"

namespace hyperbelief {

/// AGM revision operator for a fixed belief set K, in propositional-model
/// form: a total map from events to events, materialized over every event of
/// a small space (table indexed by membership mask).
class RevisionOperator {
 public:
  static constexpr std::size_t kMaxAtoms = 12;

  /// `table` has one entry per event mask (2^|atoms| entries).
  RevisionOperator(OutcomeSpace space, Event belief, std::vector<Event> table);

  /// Tabulates `revise` over every event; K defaults to revise(full).
  static RevisionOperator materialize(
      const OutcomeSpace& space,
      const std::function<Event(const Event&)>& revise);
  static RevisionOperator materialize(
      const OutcomeSpace& space, const Event& belief,
      const std::function<Event(const Event&)>& revise);

  const OutcomeSpace& space() const { return space_; }
  const Event& belief() const { return belief_; }
  const Event& revise(const Event& e) const;
  const std::vector<Event>& table() const { return table_; }

  /// Copy with one table entry replaced.
  RevisionOperator with_entry(const Event& e, Event result) const;

  friend bool operator==(const RevisionOperator& a, const RevisionOperator& b);
  friend bool operator<(const RevisionOperator& a, const RevisionOperator& b);

 private:
  OutcomeSpace space_;
  Event belief_;
  std::vector<Event> table_;
};

enum class PostulateStatus { holds, violated, vacuous, inapplicable };

std::string to_string(PostulateStatus status);

struct PostulateReport {
  std::string postulate;
  PostulateStatus status = PostulateStatus::holds;
  /// Event tuples exhibiting violations (or, for iterated checks, the pairs
  /// on which the antecedent fired).
  std::vector<std::vector<Event>> witnesses;

  /// `postulate<TAB>status<TAB>witness-events`; tuples are separated by
  /// "; ", events within a tuple by a space, "-" when there are none.
  std::string to_line() const;
};

/// Exhaustive check of (*1) success, (*2) conditionalization, (*3)
/// consistency and (*4) arrow over every event (pairs for (*4)). At most
/// `max_witnesses` witnesses are kept per postulate.
std::vector<PostulateReport> check_postulates(const RevisionOperator& op,
                                              std::size_t max_witnesses = 8);

bool satisfies_postulates(const RevisionOperator& op);

/// Total preorder on atoms as a compacted rank map: lower rank is more
/// plausible, ranks used are exactly 0..max.
class PlausibilityOrder {
 public:
  /// Compacts arbitrary ranks, preserving their order.
  PlausibilityOrder(OutcomeSpace space, std::vector<unsigned> ranks);

  static PlausibilityOrder uniform(const OutcomeSpace& space);

  const OutcomeSpace& space() const { return space_; }
  const std::vector<unsigned>& ranks() const { return ranks_; }
  unsigned rank(std::size_t atom) const { return ranks_[atom]; }
  unsigned max_rank() const;

  /// Atoms of the given rank.
  Event block(unsigned rank) const;

  friend bool operator==(const PlausibilityOrder& a, const PlausibilityOrder& b);
  friend bool operator<(const PlausibilityOrder& a, const PlausibilityOrder& b);

  /// "H1H2:0 H1T2:1 ..." in atom order.
  std::string to_string(std::string_view separator = "") const;

 private:
  OutcomeSpace space_;
  std::vector<unsigned> ranks_;
};

/// Rank-minimal atoms.
Event order_belief(const PlausibilityOrder& order);
/// Rank-minimal atoms of `e`; empty for empty `e`.
Event order_revise(const PlausibilityOrder& order, const Event& e);

/// Promotes every atom of `e` strictly above every atom outside it, keeping
/// the relative order on each side.
PlausibilityOrder radical_upgrade(const PlausibilityOrder& order, const Event& e);

/// Grove operator of the order: E -> order_revise(order, E).
RevisionOperator induced_operator(const PlausibilityOrder& order);

/// Recovers the system of spheres: block m is K * (complement of blocks
/// 0..m-1). Throws ValidationError if `op` is not a revision operator.
PlausibilityOrder operator_to_order(const RevisionOperator& op);

/// Every total preorder whose rank-0 block is exactly `belief`, sorted.
/// At most 6 atoms.
std::vector<PlausibilityOrder> enumerate_preorders(const OutcomeSpace& space,
                                                   const Event& belief);

/// Every operator satisfying (*1)-(*4) with K * full = `belief`, sorted.
/// Up to 3 atoms by filtering all candidate tables; 4 atoms through
/// preorder enumeration with each induced operator re-checked.
std::vector<RevisionOperator> enumerate_operators(const OutcomeSpace& space,
                                                  const Event& belief);

/// Number of candidate tables filtered for `atoms` atoms: the product over
/// nonempty E of (2^|E| - 1).
std::size_t candidate_table_count(std::size_t atoms);

using FactorPartition = std::vector<std::vector<std::string>>;

/// Index of the first order in `orders` at which learning about one factor
/// can overturn beliefs about another factor, or nullopt if none.
///
/// An order is factor-independent when, for the full event and for every
/// nonempty event C that only constrains a single factor f, the revised
/// belief order_revise(order, C) is the product of its per-factor
/// projections, and its projection on every other factor g still meets the
/// prior belief's projection on g.
///
/// Throws UsageError unless `factors` partitions the space's variables.
std::optional<std::size_t> first_dependent_stage(
    const std::vector<PlausibilityOrder>& orders, const FactorPartition& factors);

bool independence_preserved(const std::vector<PlausibilityOrder>& orders,
                            const FactorPartition& factors);

/// True iff `e` equals the intersection of the lifts of its projections
/// onto each factor.
bool factorizes(const Event& e, const FactorPartition& factors);

}  // namespace hyperbelief
