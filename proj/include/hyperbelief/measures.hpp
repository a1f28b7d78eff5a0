#pragma once

#include <cstddef>
#include <vector>

#include "hyperbelief/algebra.hpp"
#include "hyperbelief/hyperreal.hpp"
#include "hyperbelief/rational.hpp"
#include "hyperbelief/revision.hpp"

namespace hyperbelief {

/// Hyperreal-valued probability on the powerset of a finite space, stored as
/// atom weights. Weights are nonnegative and sum to exactly 1.
class HyperMeasure {
 public:
  /// Throws ValidationError on a negative weight, a wrong weight count or a
  /// total other than 1.
  HyperMeasure(OutcomeSpace space, std::vector<Hyperreal> weights);

  static HyperMeasure uniform(const OutcomeSpace& space);

  const OutcomeSpace& space() const { return space_; }
  const std::vector<Hyperreal>& weights() const { return weights_; }
  const Hyperreal& weight(std::size_t atom) const { return weights_[atom]; }

  /// Every atom (hence every nonempty event) has positive probability.
  bool is_regular() const;

  friend bool operator==(const HyperMeasure&, const HyperMeasure&) = default;

 private:
  OutcomeSpace space_;
  std::vector<Hyperreal> weights_;
};

Hyperreal measure_of(const HyperMeasure& mu, const Event& a);

/// Bayesian conditioning. Throws ConditioningError when mu(e) = 0.
HyperMeasure condition(const HyperMeasure& mu, const Event& e);

/// mu(a | e); throws ConditioningError when mu(e) = 0.
Hyperreal conditional(const HyperMeasure& mu, const Event& a, const Event& e);

/// K_mu: atoms whose weight has positive standard part.
Event belief_set(const HyperMeasure& mu);

/// K_mu * E: atoms of E whose conditional weight given E has positive
/// standard part; empty for empty E.
Event revise_by_measure(const HyperMeasure& mu, const Event& e);

/// Members A of `collection` with st(mu(A|E)) >= r when mu(E) > 0, or with
/// st(mu(A)) >= r otherwise.
std::vector<Event> st_threshold(const HyperMeasure& mu,
                                const std::vector<Event>& collection,
                                const Event& e, const Rational& r);

/// Intersection of every event whose probability given E has standard part
/// 1, computed over all 2^|atoms| events; empty for empty E. Reference form
/// of belief_set (E = full) and revise_by_measure for small spaces.
Event belief_by_intersection(const HyperMeasure& mu, const Event& e);

/// The operator E -> revise_by_measure(mu, E), tabulated. Requires a
/// regular mu on at most 12 atoms.
RevisionOperator hyper_to_operator(const HyperMeasure& mu);

/// Sequence of real probability vectors (levels) with pairwise disjoint
/// supports.
class LexSystem {
 public:
  /// Throws ValidationError unless every level is a nonnegative vector over
  /// the atoms summing to 1 and the supports are pairwise disjoint.
  LexSystem(OutcomeSpace space, std::vector<std::vector<Rational>> levels);

  const OutcomeSpace& space() const { return space_; }
  const std::vector<std::vector<Rational>>& levels() const { return levels_; }
  std::size_t size() const { return levels_.size(); }

  Event support(std::size_t level) const;
  Rational level_measure(std::size_t level, const Event& a) const;

  /// Supports cover the space.
  bool is_partitioning() const;

 private:
  OutcomeSpace space_;
  std::vector<std::vector<Rational>> levels_;
};

/// Level m uniform on the rank-m block of the order.
LexSystem order_to_lex(const PlausibilityOrder& order);

/// mu(A) = mu_0(A) + sum over m > 0 of (mu_m(A) - mu_0(A)) e^m. Requires a
/// partitioning system; the result is regular.
HyperMeasure lex_to_hyper(const LexSystem& lex);

/// Popper function represented by a partitioning lexicographic system:
/// P(.|E) is the first level meeting E, conditioned on E.
class ConditionalProbability {
 public:
  /// Throws ValidationError unless `backing` is partitioning.
  explicit ConditionalProbability(LexSystem backing);

  const LexSystem& backing() const { return backing_; }
  const OutcomeSpace& space() const { return backing_.space(); }

  /// P(a | e); P(. | empty) is identically 1.
  Rational operator()(const Event& a, const Event& e) const;

  /// Smallest event of conditional probability 1 given e.
  Event support(const Event& e) const;

 private:
  LexSystem backing_;
};

Rational cond_prob_eval(const ConditionalProbability& p, const Event& a,
                        const Event& e);

/// K_P * E = supp P(.|E), tabulated (at most 12 atoms).
RevisionOperator cond_to_operator(const ConditionalProbability& p);

/// Conditional probability whose levels are the operator's rank blocks.
ConditionalProbability operator_to_conditional(const RevisionOperator& op);

/// Regular hyperreal measure inducing `op`, through its rank blocks.
HyperMeasure operator_to_hyper(const RevisionOperator& op);

}  // namespace hyperbelief
