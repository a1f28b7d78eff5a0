#include "hyperbelief/random.hpp"

#include <vector>

namespace hyperbelief {

namespace {

long uniform_int(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

}  // namespace

Rational random_rational(Rng& rng) {
  Rational q(uniform_int(rng, -20, 20), uniform_int(rng, 1, 12));
  q.canonicalize();
  return q;
}

Hyperreal random_hyperreal(Rng& rng) {
  auto poly = [&rng](long terms) {
    std::vector<EpsPoly::Term> t;
    for (long i = 0; i < terms; ++i) {
      t.push_back({static_cast<EpsPoly::Exponent>(uniform_int(rng, 0, 4)), random_rational(rng)});
    }
    return EpsPoly::from_terms(std::move(t));
  };
  EpsPoly num = poly(uniform_int(rng, 0, 3));
  EpsPoly den;
  while (den.is_zero()) den = poly(uniform_int(rng, 1, 2));
  return Hyperreal(num, den);
}

HyperMeasure random_regular_measure(const OutcomeSpace& space, Rng& rng) {
  const std::size_t n = space.atom_count();
  const auto standard = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(n) - 1));
  std::vector<Hyperreal> w;
  Hyperreal total(0);
  for (std::size_t a = 0; a < n; ++a) {
    const auto k = a == standard ? 0U : static_cast<unsigned>(uniform_int(rng, 0, 3));
    Hyperreal x = Hyperreal(Rational(uniform_int(rng, 1, 9))) * Hyperreal::eps(k);
    if (uniform_int(rng, 0, 3) == 0) {
      x += Hyperreal(Rational(uniform_int(rng, 1, 5))) * Hyperreal::eps(k + 1 + uniform_int(rng, 0, 2));
    }
    total += x;
    w.push_back(std::move(x));
  }
  for (auto& x : w) x /= total;
  return HyperMeasure(space, std::move(w));
}

PlausibilityOrder random_order(const OutcomeSpace& space, Rng& rng) {
  const long n = static_cast<long>(space.atom_count());
  std::vector<unsigned> ranks;
  for (long a = 0; a < n; ++a) ranks.push_back(static_cast<unsigned>(uniform_int(rng, 0, n - 1)));
  return PlausibilityOrder(space, std::move(ranks));
}

LexSystem random_partitioning_lex(const OutcomeSpace& space, Rng& rng) {
  const PlausibilityOrder order = random_order(space, rng);
  std::vector<std::vector<Rational>> levels;
  for (unsigned r = 0; r <= order.max_rank(); ++r) {
    std::vector<Rational> level(space.atom_count(), Rational(0));
    Rational total(0);
    for (const std::size_t a : order.block(r).members()) {
      level[a] = Rational(uniform_int(rng, 1, 9));
      total += level[a];
    }
    for (auto& x : level) x /= total;
    levels.push_back(std::move(level));
  }
  return LexSystem(space, std::move(levels));
}

Event random_event(const OutcomeSpace& space, Rng& rng) {
  const std::size_t n = space.atom_count();
  const std::uint64_t all = n == 64 ? ~0ULL : ((1ULL << n) - 1);
  return Event::from_mask(space, rng() & all);
}

}  // namespace hyperbelief
