#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hyperbelief/algebra.hpp"
#include "hyperbelief/measures.hpp"
#include "hyperbelief/revision.hpp"

namespace hyperbelief {

/// Iterated revision by conditioning the prior on the running intersection
/// of the evidence received so far.
struct ConditioningPolicy {
  HyperMeasure prior;
};

/// Iterated revision by successive radical upgrades of a plausibility order.
struct UpgradePolicy {
  PlausibilityOrder initial;
};

using IteratedPolicy = std::variant<ConditioningPolicy, UpgradePolicy>;

enum class IteratedPostulate { I1, I2 };

/// I2 as glossed and applied to the two-coin example: for disjoint E, F,
/// (K*E)*F = K*F. The literal reading requires (K*E)*F = K*E instead.
enum class I2Reading { gloss, literal };

std::string to_string(IteratedPostulate postulate);

struct IteratedStep {
  std::size_t index = 0;  // pair (evidence[index], evidence[index + 1])
  bool fired = false;     // antecedent of the postulate holds
  PostulateStatus status = PostulateStatus::vacuous;
  std::optional<Event> sequential;  // belief after both revisions
  std::optional<Event> direct;      // belief required by the postulate
};

struct IteratedReport {
  PostulateReport summary;
  std::vector<IteratedStep> steps;
  /// Belief after each prefix of the evidence; nullopt once conditioning
  /// hits a zero-probability intersection.
  std::vector<std::optional<Event>> beliefs;
};

/// For every adjacent pair (E, F) of `evidence`, starting from the state
/// reached after the evidence before E:
///   I1 fires when F is a subset of E and requires (K*E)*F = K*F;
///   I2 fires when E and F are disjoint and requires (K*E)*F = K*F (gloss)
///   or (K*E)*F = K*E (literal).
/// Under conditioning, a zero-probability intersection makes the step
/// `inapplicable` rather than throwing. The summary is violated if any step
/// is violated, otherwise inapplicable if any fired step is, otherwise holds
/// if any step fired, otherwise vacuous.
IteratedReport check_iterated(const IteratedPolicy& policy,
                              const std::vector<Event>& evidence,
                              IteratedPostulate postulate,
                              I2Reading reading = I2Reading::gloss);

}  // namespace hyperbelief
