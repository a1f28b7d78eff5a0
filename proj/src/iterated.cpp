#include "hyperbelief/iterated.hpp"

#include <type_traits>

#include "hyperbelief/errors.hpp"

namespace hyperbelief {

std::string to_string(IteratedPostulate postulate) {
  return postulate == IteratedPostulate::I1 ? "I1" : "I2";
}

namespace {

// Revision state under either policy; nullopt marks a conditioning dead end.
class State {
 public:
  explicit State(const IteratedPolicy& policy) {
    if (const auto* c = std::get_if<ConditioningPolicy>(&policy)) {
      measure_ = c->prior;
    } else {
      order_ = std::get<UpgradePolicy>(policy).initial;
    }
  }

  std::optional<State> revise(const Event& e) const {
    State next = *this;
    if (measure_) {
      if (measure_of(*measure_, e).is_zero()) return std::nullopt;
      next.measure_ = condition(*measure_, e);
    } else {
      next.order_ = radical_upgrade(*order_, e);
    }
    return next;
  }

  Event belief() const { return measure_ ? belief_set(*measure_) : order_belief(*order_); }

 private:
  std::optional<HyperMeasure> measure_;
  std::optional<PlausibilityOrder> order_;
};

std::optional<Event> belief_after(const std::optional<State>& s) {
  if (!s) return std::nullopt;
  return s->belief();
}

}  // namespace

IteratedReport check_iterated(const IteratedPolicy& policy,
                              const std::vector<Event>& evidence,
                              IteratedPostulate postulate, I2Reading reading) {
  IteratedReport report;
  report.summary.postulate = to_string(postulate);
  if (postulate == IteratedPostulate::I2 && reading == I2Reading::literal) {
    report.summary.postulate += "-literal";
  }

  std::vector<std::optional<State>> prefix;
  prefix.emplace_back(State(policy));
  for (const Event& e : evidence) {
    const auto& last = prefix.back();
    prefix.push_back(last ? last->revise(e) : std::nullopt);
    report.beliefs.push_back(belief_after(prefix.back()));
  }

  bool any_fired = false;
  bool any_violated = false;
  bool any_inapplicable = false;
  for (std::size_t i = 0; i + 1 < evidence.size(); ++i) {
    const Event& first = evidence[i];
    const Event& second = evidence[i + 1];
    IteratedStep step;
    step.index = i;
    step.fired = postulate == IteratedPostulate::I1 ? is_subset(second, first)
                                                    : is_disjoint(first, second);
    if (step.fired) {
      any_fired = true;
      const std::optional<State>& before = prefix[i];
      std::optional<State> after_first = before ? before->revise(first) : std::nullopt;
      std::optional<State> after_both =
          after_first ? after_first->revise(second) : std::nullopt;
      std::optional<State> required =
          (postulate == IteratedPostulate::I2 && reading == I2Reading::literal)
              ? after_first
              : (before ? before->revise(second) : std::nullopt);
      step.sequential = belief_after(after_both);
      step.direct = belief_after(required);
      if (!step.sequential || !step.direct) {
        step.status = PostulateStatus::inapplicable;
        any_inapplicable = true;
        report.summary.witnesses.push_back({first, second});
      } else if (*step.sequential == *step.direct) {
        step.status = PostulateStatus::holds;
      } else {
        step.status = PostulateStatus::violated;
        any_violated = true;
        report.summary.witnesses.push_back({first, second});
      }
    }
    report.steps.push_back(std::move(step));
  }

  if (any_violated) {
    report.summary.status = PostulateStatus::violated;
  } else if (any_inapplicable) {
    report.summary.status = PostulateStatus::inapplicable;
  } else if (any_fired) {
    report.summary.status = PostulateStatus::holds;
  } else {
    report.summary.status = PostulateStatus::vacuous;
  }
  return report;
}

}  // namespace hyperbelief
