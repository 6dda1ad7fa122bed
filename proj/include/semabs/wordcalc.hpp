#ifndef SEMABS_WORDCALC_HPP
#define SEMABS_WORDCALC_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "semabs/presentation.hpp"

namespace semabs {

enum class OrderKind { DegRevLex, DegLex, EliminationBlock };

// Total well-order on monomials of a fixed variable set, compatible with
// multiplication. EliminationBlock compares the leading block (variables
// [0, block_split)) degree-reverse-lexicographically first, so monomials free
// of block-1 variables are smaller than any monomial containing one.
struct MonomialOrder {
  OrderKind kind = OrderKind::DegRevLex;
  std::size_t block_split = 0;  // used by EliminationBlock only

  // negative if a < b, 0 if equal, positive if a > b
  int compare(const Exponents& a, const Exponents& b) const;
  bool less(const Exponents& a, const Exponents& b) const { return compare(a, b) < 0; }
};

// Rewriting rule lead -> trail with lead > trail in the system's order.
struct BinomialRule {
  Exponents lead;
  Exponents trail;

  bool operator==(const BinomialRule& other) const = default;
};

struct CompletionLimits {
  std::size_t max_rules = 10000;
  std::size_t max_steps = 1000000;
};

// Confluent (when completion finished) rewriting system deciding the word
// problem of the presented monoid: two words are equal iff their exponent
// vectors share a normal form.
struct RewriteSystem {
  std::vector<BinomialRule> rules;
  MonomialOrder order;
  bool confluent = false;
  std::size_t var_count = 0;
  Presentation source;  // normalized presentation the system was built from
};

// Knuth-Bendix / Buchberger completion on exponent-vector rules. Always
// terminates: either with the reduced confluent system (confluent = true,
// canonical for the order) or at a resource cap (confluent = false, partial
// rules kept).
RewriteSystem complete(const Presentation& p, MonomialOrder order = {},
                       CompletionLimits limits = {});

// Unique normal form under a confluent system; still terminates (order
// decreases) when the system is partial, but uniqueness is then unguaranteed.
Exponents normal_form(const RewriteSystem& rs, Exponents v);

struct CayleyEdge {
  std::size_t source;  // index into the level it leaves
  std::size_t generator;
  std::size_t target;  // index into the next level
};

// Breadth-first expansion of the walk graph: levels[n] holds the canonical
// forms reachable by words of length exactly n, sorted descending by the
// rewrite order (so level 1 follows generator declaration order); edges[n]
// joins level n to level n+1.
struct CayleyLevels {
  int depth = 0;
  std::vector<std::vector<Exponents>> levels;
  std::vector<std::vector<CayleyEdge>> edges;
};

CayleyLevels cayley_levels(const RewriteSystem& rs, int depth,
                           std::size_t max_width = 1000000);

// Pairs (m, n) of equal-length words equal in the monoid; the equations
// prod mu(s)^m_s = prod mu(s)^n_s they induce on the simplex cut out the
// measures with shift-invariant path weights. exact = true means the set
// generates all such pairs (elimination route); otherwise pairs were
// enumerated up to depth_bound.
struct CentralPairSet {
  std::vector<RelationPair> pairs;  // each stored with lhs > rhs in degrevlex
  bool exact = false;
  std::optional<int> depth_bound;
};

// Exact generating set via kernel elimination: present the length-graded
// copy of the monoid with one auxiliary symbol per generator plus a degree
// symbol, complete under a block order eliminating the auxiliaries, and keep
// the surviving rules in original symbols (all homogeneous). Falls back to
// bounded enumeration (exact = false) if completion hits a resource cap.
CentralPairSet central_pairs_exact(const Presentation& p, CompletionLimits limits = {},
                                   int fallback_depth = 6);

// Oracle by direct search: all equal-length pairs with a common normal form
// up to the given word length, thinned to a generating subset.
CentralPairSet central_pairs_enumerated(const RewriteSystem& rs, int depth,
                                        std::size_t max_width = 1000000);

// Whether lhs = rhs follows from the given pairs for every nonnegative
// weight assignment: treats each pair as a two-way replacement on exponent
// vectors and searches the (finite, fixed-degree) reachable set. Replacement
// steps only ever multiply both sides of an equation by the same monomial,
// so a positive answer is valid on all of the simplex, boundary included.
// Gives up (returns false) past max_states visited vectors.
bool pair_generated(const Exponents& lhs, const Exponents& rhs,
                    const std::vector<RelationPair>& pairs,
                    std::size_t max_states = 1 << 18);

// True when every completed rule preserves word length; equivalent to the
// walk graph branching into distinct (element, length) classes.
bool is_branching(const RewriteSystem& rs);

// a, b, c with a != b but a + c == b + c in the monoid.
struct CancellationWitness {
  Exponents a;
  Exponents b;
  Exponents c;
};

// Bounded search over elements within the given word length. A returned
// witness proves non-cancellativity; absence proves nothing beyond the depth.
std::optional<CancellationWitness> cancellativity_witness(const RewriteSystem& rs,
                                                          int depth);

}  // namespace semabs

#endif
