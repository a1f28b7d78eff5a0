#include "hyperbelief/measures.hpp"

#include <algorithm>

#include "hyperbelief/errors.hpp"

namespace hyperbelief {

namespace {

void check_space(const OutcomeSpace& expected, const Event& e) {
  if (!(e.space() == expected)) throw UsageError("event from another outcome space");
}

Hyperreal sum_weights(const std::vector<Hyperreal>& weights) {
  // Pairwise summation keeps intermediate denominators small when the
  // weights share factors.
  std::vector<Hyperreal> level(weights);
  if (level.empty()) return Hyperreal(0);
  while (level.size() > 1) {
    std::vector<Hyperreal> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(level[i] + level[i + 1]);
    if (level.size() % 2 == 1) next.push_back(level.back());
    level = std::move(next);
  }
  return level.front();
}

}  // namespace

HyperMeasure::HyperMeasure(OutcomeSpace space, std::vector<Hyperreal> weights)
    : space_(std::move(space)), weights_(std::move(weights)) {
  if (weights_.size() != space_.atom_count()) {
    throw ValidationError("measure needs one weight per atom");
  }
  for (std::size_t a = 0; a < weights_.size(); ++a) {
    if (weights_[a].sign() < 0) {
      throw ValidationError("negative weight " + weights_[a].to_string() + " on atom " +
                            std::to_string(a));
    }
  }
  const Hyperreal total = sum_weights(weights_);
  if (total != Hyperreal(1)) {
    throw ValidationError("weights sum to " + total.to_string() + ", not 1");
  }
}

HyperMeasure HyperMeasure::uniform(const OutcomeSpace& space) {
  const Hyperreal w(Rational(1, static_cast<unsigned long>(space.atom_count())));
  return HyperMeasure(space, std::vector<Hyperreal>(space.atom_count(), w));
}

bool HyperMeasure::is_regular() const {
  return std::all_of(weights_.begin(), weights_.end(),
                     [](const Hyperreal& w) { return w.sign() > 0; });
}

Hyperreal measure_of(const HyperMeasure& mu, const Event& a) {
  check_space(mu.space(), a);
  std::vector<Hyperreal> parts;
  for (std::size_t atom : a.members()) parts.push_back(mu.weight(atom));
  return sum_weights(parts);
}

HyperMeasure condition(const HyperMeasure& mu, const Event& e) {
  const Hyperreal evidence = measure_of(mu, e);
  if (evidence.is_zero()) {
    throw ConditioningError("conditioning on an event of probability zero: " + e.to_string());
  }
  std::vector<Hyperreal> weights(mu.space().atom_count(), Hyperreal(0));
  for (std::size_t atom : e.members()) weights[atom] = mu.weight(atom) / evidence;
  return HyperMeasure(mu.space(), std::move(weights));
}

Hyperreal conditional(const HyperMeasure& mu, const Event& a, const Event& e) {
  const Hyperreal evidence = measure_of(mu, e);
  if (evidence.is_zero()) {
    throw ConditioningError("conditioning on an event of probability zero: " + e.to_string());
  }
  return measure_of(mu, a & e) / evidence;
}

Event belief_set(const HyperMeasure& mu) {
  Event k(mu.space());
  for (std::size_t a = 0; a < mu.space().atom_count(); ++a) {
    if (st(mu.weight(a)) > 0) k.insert(a);
  }
  return k;
}

Event revise_by_measure(const HyperMeasure& mu, const Event& e) {
  check_space(mu.space(), e);
  Event out(mu.space());
  if (e.empty()) return out;
  const Hyperreal evidence = measure_of(mu, e);
  if (evidence.is_zero()) {
    // Non-regular measure: st_1 falls back to the unconditional values.
    for (std::size_t a : e.members()) {
      if (st(mu.weight(a)) > 0) out.insert(a);
    }
    return out;
  }
  for (std::size_t a : e.members()) {
    if (st(mu.weight(a) / evidence) > 0) out.insert(a);
  }
  return out;
}

std::vector<Event> st_threshold(const HyperMeasure& mu,
                                const std::vector<Event>& collection,
                                const Event& e, const Rational& r) {
  check_space(mu.space(), e);
  const Hyperreal evidence = measure_of(mu, e);
  std::vector<Event> out;
  for (const Event& a : collection) {
    const Hyperreal p = evidence.sign() > 0 ? measure_of(mu, a & e) / evidence
                                            : measure_of(mu, a);
    if (st(p) >= r) out.push_back(a);
  }
  return out;
}

Event belief_by_intersection(const HyperMeasure& mu, const Event& e) {
  check_space(mu.space(), e);
  if (e.empty()) return mu.space().empty();
  Event out = mu.space().full();
  for (const Event& a : st_threshold(mu, all_events(mu.space()), e, Rational(1))) out &= a;
  return out;
}

RevisionOperator hyper_to_operator(const HyperMeasure& mu) {
  if (!mu.is_regular()) throw ValidationError("hyper_to_operator needs a regular measure");
  return RevisionOperator::materialize(
      mu.space(), belief_set(mu),
      [&](const Event& e) { return revise_by_measure(mu, e); });
}

// ---------------------------------------------------------------------------

LexSystem::LexSystem(OutcomeSpace space, std::vector<std::vector<Rational>> levels)
    : space_(std::move(space)), levels_(std::move(levels)) {
  if (levels_.empty()) throw ValidationError("lexicographic system needs at least one level");
  std::vector<bool> claimed(space_.atom_count(), false);
  for (std::size_t m = 0; m < levels_.size(); ++m) {
    const auto& level = levels_[m];
    if (level.size() != space_.atom_count()) {
      throw ValidationError("level " + std::to_string(m) + " needs one value per atom");
    }
    Rational total = 0;
    for (std::size_t a = 0; a < level.size(); ++a) {
      if (level[a] < 0) throw ValidationError("negative probability in level " + std::to_string(m));
      if (level[a] > 0) {
        if (claimed[a]) {
          throw ValidationError("supports overlap at atom " + std::to_string(a));
        }
        claimed[a] = true;
      }
      total += level[a];
    }
    if (total != 1) {
      throw ValidationError("level " + std::to_string(m) + " sums to " + to_string(total));
    }
  }
}

Event LexSystem::support(std::size_t level) const {
  Event e(space_);
  const auto& values = levels_.at(level);
  for (std::size_t a = 0; a < values.size(); ++a) {
    if (values[a] > 0) e.insert(a);
  }
  return e;
}

Rational LexSystem::level_measure(std::size_t level, const Event& a) const {
  check_space(space_, a);
  Rational total = 0;
  const auto& values = levels_.at(level);
  for (std::size_t atom : a.members()) total += values[atom];
  return total;
}

bool LexSystem::is_partitioning() const {
  Event covered(space_);
  for (std::size_t m = 0; m < levels_.size(); ++m) covered |= support(m);
  return covered == space_.full();
}

LexSystem order_to_lex(const PlausibilityOrder& order) {
  std::vector<std::vector<Rational>> levels;
  for (unsigned r = 0; r <= order.max_rank(); ++r) {
    const Event block = order.block(r);
    const Rational share(1, static_cast<unsigned long>(block.size()));
    std::vector<Rational> level(order.space().atom_count(), Rational(0));
    for (std::size_t a : block.members()) level[a] = share;
    levels.push_back(std::move(level));
  }
  return LexSystem(order.space(), std::move(levels));
}

HyperMeasure lex_to_hyper(const LexSystem& lex) {
  if (!lex.is_partitioning()) {
    throw ValidationError("lex_to_hyper needs supports that cover the space");
  }
  const auto& levels = lex.levels();
  std::vector<Hyperreal> weights;
  weights.reserve(lex.space().atom_count());
  for (std::size_t a = 0; a < lex.space().atom_count(); ++a) {
    const Rational& base = levels[0][a];
    std::vector<EpsPoly::Term> terms{{0, base}};
    for (std::size_t m = 1; m < levels.size(); ++m) {
      terms.push_back({static_cast<EpsPoly::Exponent>(m), Rational(levels[m][a] - base)});
    }
    weights.emplace_back(EpsPoly::from_terms(std::move(terms)));
  }
  return HyperMeasure(lex.space(), std::move(weights));
}

// ---------------------------------------------------------------------------

ConditionalProbability::ConditionalProbability(LexSystem backing)
    : backing_(std::move(backing)) {
  if (!backing_.is_partitioning()) {
    throw ValidationError("conditional probability needs a partitioning lexicographic system");
  }
}

Rational ConditionalProbability::operator()(const Event& a, const Event& e) const {
  check_space(space(), a);
  check_space(space(), e);
  if (e.empty()) return Rational(1);
  for (std::size_t m = 0; m < backing_.size(); ++m) {
    const Rational evidence = backing_.level_measure(m, e);
    if (evidence > 0) return backing_.level_measure(m, a & e) / evidence;
  }
  throw ValidationError("no level meets a nonempty event");  // unreachable when partitioning
}

Event ConditionalProbability::support(const Event& e) const {
  check_space(space(), e);
  if (e.empty()) return space().empty();
  for (std::size_t m = 0; m < backing_.size(); ++m) {
    const Event meet = backing_.support(m) & e;
    if (!meet.empty()) return meet;
  }
  throw ValidationError("no level meets a nonempty event");
}

Rational cond_prob_eval(const ConditionalProbability& p, const Event& a, const Event& e) {
  return p(a, e);
}

RevisionOperator cond_to_operator(const ConditionalProbability& p) {
  return RevisionOperator::materialize(
      p.space(), p.support(p.space().full()),
      [&](const Event& e) { return p.support(e); });
}

ConditionalProbability operator_to_conditional(const RevisionOperator& op) {
  return ConditionalProbability(order_to_lex(operator_to_order(op)));
}

HyperMeasure operator_to_hyper(const RevisionOperator& op) {
  return lex_to_hyper(order_to_lex(operator_to_order(op)));
}

}  // namespace hyperbelief
