#ifndef SEMABS_HARNESS_HPP
#define SEMABS_HARNESS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "semabs/latgeo.hpp"
#include "semabs/wordcalc.hpp"

namespace semabs {

// Two same-length step multisets reaching the same vertex with different
// probabilities; probabilities are canonical rational text in exact mode,
// decimal text in float mode.
struct PathWitness {
  Exponents vertex;
  int level = 0;
  std::string path_a;
  std::string path_b;
  std::string prob_a;
  std::string prob_b;
  bool operator==(const PathWitness&) const = default;
};

struct VerificationReport {
  int depth = 0;
  bool passed = false;
  bool exact_arithmetic = true;
  std::vector<PathWitness> witnesses;  // one per failing (vertex, level) group
};

// Enumerates every step multiset of length <= depth, groups by (canonical
// form, length), and checks all groups have constant path probability.
// Exact rational comparison for exact points; 1e-12 relative for float.
// The first violating pair per group (members ordered by the rewrite order)
// becomes a witness.
VerificationReport verify_central(const RewriteSystem& rs, const DistributionPoint& mu,
                                  int depth, std::size_t max_width = 1000000);

// Conditional-measure identity behind shift invariance: for every
// continuation w with |w| <= depth, P(prefix + w) = P(prefix) * P(w).
// The prefix must have positive probability.
bool verify_shift(const RewriteSystem& rs, const DistributionPoint& mu,
                  const Exponents& prefix, int depth, std::size_t max_width = 1000000);

// One seeded walk: the generator index drawn at each step and the canonical
// form of the endpoint.
struct WalkSample {
  std::uint64_t seed = 0;
  std::vector<std::size_t> steps;
  Exponents endpoint;
  bool operator==(const WalkSample&) const = default;
};

WalkSample walk_sample(const RewriteSystem& rs, const DistributionPoint& mu, int steps,
                       std::uint64_t seed);

struct SimulationStats {
  long long trials = 0;
  int steps = 0;
  // Sorted by endpoint; frequencies sum to 1 when trials > 0.
  std::vector<std::pair<Exponents, double>> frequencies;
  // Exact endpoint law at level `steps`; empty when the level is too wide
  // to enumerate or the distribution is float-mode.
  std::vector<std::pair<Exponents, Rat>> exact_probabilities;
  double max_sigma = 0.0;  // largest |freq - p| / sqrt(p(1-p)/trials)
};

// Seeded, reproducible i.i.d. walks. Each trial runs on its own stream
// derived from (seed, trial index), so results do not depend on batching.
SimulationStats simulate(const RewriteSystem& rs, const DistributionPoint& mu, int steps,
                         long long trials, std::uint64_t seed,
                         std::size_t max_width = 1000000);

}  // namespace semabs

#endif
