#ifndef SEMABS_ABSOLUTE_HPP
#define SEMABS_ABSOLUTE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "semabs/latgeo.hpp"
#include "semabs/presentation.hpp"
#include "semabs/wordcalc.hpp"

namespace semabs {

// One monomial identity prod mu(s)^lhs_s = prod mu(s)^rhs_s induced by a
// pair of equal-length words representing the same element. The reduced
// form subtracts the shared part, leaving disjoint supports.
struct CentralityEquation {
  RelationPair pair;
  RelationPair reduced_pair;
  bool operator==(const CentralityEquation&) const = default;
};

std::vector<CentralityEquation> centrality_equations(const CentralPairSet& cp);

// Render as e.g. "mu(a) mu(b) = mu(c)^2"; a constant side renders as "1".
std::string render_equation(const GeneratorSet& gens, const CentralityEquation& eq);

// Does mu satisfy every equation? Products are compared exactly for exact
// points and within 1e-12 for float points; a zero-zero comparison counts
// as satisfied.
bool is_precentral(const std::vector<CentralityEquation>& eqs, const DistributionPoint& mu);

// One piece of the solution set, classified by the exact support of its
// points. The lattice collects the equation differences restricted to the
// support's coordinates.
struct Stratum {
  std::vector<std::size_t> support;  // ascending generator indices
  IntegerLattice lattice;            // in the support's coordinates
  int dimension = 0;                 // |support| - 1 - rank
  DistributionPoint sample;          // exact point with support exactly `support`
  bool is_main = false;              // support = all generators
  bool operator==(const Stratum&) const = default;
};

// Support-by-support decomposition: a support is excluded when some
// equation has exactly one side living inside it (its product would have to
// be positive and zero at once); every other support contributes a stratum.
// Supports are scanned in ascending bitmask order. Guarded against
// exponential blowup by max_generators.
std::vector<Stratum> strata(const std::vector<CentralityEquation>& eqs, std::size_t s_size,
                            std::size_t max_generators = 20);

struct TopologyClaim {
  enum class Kind { ClosedDisk, CompactStratified, Unknown };
  Kind kind = Kind::Unknown;
  int dimension = 0;  // used by ClosedDisk only
  bool operator==(const TopologyClaim&) const = default;
};

// "closed_disk(2)", "compact_stratified", or "unknown".
std::string to_string(const TopologyClaim& claim);

struct DescribeOptions {
  CompletionLimits limits{};
  int fallback_depth = 6;        // enumeration bound when completion is capped
  std::size_t max_generators = 20;  // strata support-loop guard
};

// Everything the solver knows about one instance.
struct AbsoluteDescriptor {
  Presentation presentation;
  CentralPairSet central_pairs;
  IntegerLattice relation_lattice;  // differences of the defining relations
  IntegerLattice central_lattice;   // its sum-zero part
  int dimension = 0;
  ChartBasis chart_basis;
  ProjectedPolytope polytope;
  std::vector<CentralityEquation> equations;
  std::vector<Stratum> strata;
  TopologyClaim topology;
  bool exact = false;  // false when the pair set came from bounded enumeration
};

AbsoluteDescriptor describe_absolute(const Presentation& p, const DescribeOptions& opts = {});

// Multiplicative functional attached to a precentral distribution: its
// value at (element, level) is the probability of any length-`level` path
// from the origin to the element. Element words are normalized internally.
class CharacterTable {
 public:
  CharacterTable(DistributionPoint mu, RewriteSystem rs);

  // Exact path product; PreconditionError when the element has no
  // representative word of the requested length.
  Rat value_at(const Exponents& element, int level) const;

  // Values at the generators themselves (level 1). Sums to 1.
  RatVec generator_values() const;

  const DistributionPoint& base() const { return mu_; }
  const RewriteSystem& system() const { return rs_; }

 private:
  DistributionPoint mu_;
  RewriteSystem rs_;
};

// Validates precentrality (exact arithmetic; the functional would be
// ill-defined otherwise) and builds the table.
CharacterTable character_from(const DistributionPoint& mu, const RewriteSystem& rs);

// The same functional rescaled by factor^level: still multiplicative, no
// longer normalized.
struct ScaledCharacter {
  CharacterTable table;
  Rat factor;

  Rat value_at(const Exponents& element, int level) const;
  RatVec generator_values() const;
};

ScaledCharacter scale_character(const CharacterTable& ct, const Rat& factor);
ScaledCharacter scale_character(const ScaledCharacter& sc, const Rat& factor);

// Do two presentations over the same generator system have the same
// solution set, compared structurally (central lattice and all strata)?
bool compare_quotient(const Presentation& p1, const Presentation& p2);

}  // namespace semabs

#endif
