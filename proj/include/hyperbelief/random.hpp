#pragma once

#include <cstdint>
#include <random>

#include "hyperbelief/algebra.hpp"
#include "hyperbelief/hyperreal.hpp"
#include "hyperbelief/measures.hpp"
#include "hyperbelief/revision.hpp"

namespace hyperbelief {

// Seeded generators for property checks. Deterministic for a given engine
// state; all draws go through the engine passed in.
using Rng = std::mt19937_64;

/// Rational p/q with |p| <= 20, 1 <= q <= 12.
Rational random_rational(Rng& rng);

/// Hyperreal with up to three terms over denominators of up to two terms,
/// exponents in 0..4. Never has a vanishing denominator.
Hyperreal random_hyperreal(Rng& rng);

/// Regular measure: each atom gets a positive weight c * e^k (k in 0..3,
/// sometimes with a higher-order correction), then everything is divided by
/// the total. At least one atom has k = 0.
HyperMeasure random_regular_measure(const OutcomeSpace& space, Rng& rng);

/// Random total preorder, ranks drawn uniformly then compacted.
PlausibilityOrder random_order(const OutcomeSpace& space, Rng& rng);

/// Partitioning system: a random order's blocks, each carrying random
/// positive weights normalized to 1.
LexSystem random_partitioning_lex(const OutcomeSpace& space, Rng& rng);

/// Uniformly random event (space of at most 64 atoms).
Event random_event(const OutcomeSpace& space, Rng& rng);

}  // namespace hyperbelief
