#ifndef SEMABS_LATGEO_HPP
#define SEMABS_LATGEO_HPP

#include <cstddef>
#include <vector>

#include "semabs/numeric.hpp"
#include "semabs/presentation.hpp"

namespace semabs {

// ---------------------------------------------------------------------------
// Integer lattices
// ---------------------------------------------------------------------------

// A sublattice of Z^S held by its canonical basis: the rows of `basis` are
// the nonzero rows of the row-style Hermite normal form (positive pivots,
// zeros below each pivot, entries above reduced into [0, pivot)). Two
// lattices are equal iff their basis matrices are identical.
struct IntegerLattice {
  IntMat basis;  // each row one basis vector; no zero rows
  int rank() const { return static_cast<int>(basis.size()); }
  bool operator==(const IntegerLattice&) const = default;
};

// Row-style Hermite normal form of the lattice spanned by the given rows;
// zero rows are dropped. Canonical: any generating set of the same lattice
// produces the same matrix.
IntMat hermite_normal_form(IntMat rows);

// Canonical lattice spanned by arbitrary generator rows.
IntegerLattice lattice_from_rows(IntMat rows);

// Basis (as HNF rows) of the kernel lattice { x in Z^n : M x = 0 } for the
// matrix whose rows are given. The result is saturated: every integer
// solution is an integer combination of the returned rows.
IntMat integer_kernel(const IntMat& rows, std::size_t n);

// Lattice spanned by the relation differences lhs - rhs of a presentation.
IntegerLattice difference_lattice(const Presentation& p);

// Sublattice of L consisting of its sum-zero vectors. Its rank is rank(L)
// or rank(L) - 1.
IntegerLattice central_sublattice(const IntegerLattice& L);

// Dimension of the set of fully supported i.i.d.-increment measures:
// |S| - 1 - rank(Lc).
int absolute_dimension(const IntegerLattice& Lc, std::size_t s_size);

// Free rank of the group the semigroup embeds into when it can:
// |S| - rank(L) for L the relation-difference lattice.
int group_of_fractions_rank(const IntegerLattice& L, std::size_t s_size);

// ---------------------------------------------------------------------------
// Points of the simplex
// ---------------------------------------------------------------------------

// A probability vector indexed by the generators, carried either as exact
// rationals or as doubles. Exactly one of the two vectors is populated.
struct DistributionPoint {
  RatVec exact;
  std::vector<double> approx;

  bool is_exact() const { return !exact.empty(); }
  std::size_t size() const { return is_exact() ? exact.size() : approx.size(); }
  double value(std::size_t i) const;
  const Rat& rational(std::size_t i) const;  // exact mode only
  std::vector<double> to_doubles() const;
  bool operator==(const DistributionPoint&) const = default;
};

// Validated constructors. Exact points must sum to 1 exactly; float points
// within 1e-12. All weights must be nonnegative.
DistributionPoint make_exact_distribution(RatVec w);
DistributionPoint make_float_distribution(std::vector<double> w);

// Uniform distribution supported on the index set `support` (all indices
// when empty would be meaningless, so support must be nonempty).
DistributionPoint uniform_on(const std::vector<std::size_t>& support, std::size_t n);

// ---------------------------------------------------------------------------
// Interior chart
// ---------------------------------------------------------------------------

// Integer basis of the lattice of vectors orthogonal both to a given
// sum-zero lattice Lc and to the all-ones vector. Its row span is the
// tangent space of the fully supported solution set; the row count is the
// absolute dimension d.
struct ChartBasis {
  IntMat complement_basis;  // d x n, HNF rows, each row sums to zero
  int dimension() const { return static_cast<int>(complement_basis.size()); }
};

ChartBasis chart(const IntegerLattice& Lc, std::size_t s_size);

// w in R^d -> softmax(A^T w): a strictly positive distribution satisfying
// every monomial identity attached to Lc (up to rounding).
DistributionPoint exp_map(const ChartBasis& c, const std::vector<double>& w);

// Inverse of exp_map on fully supported solution points: project the
// mean-centered coordinatewise log of mu onto the chart rows. Zero weights
// are outside the domain.
std::vector<double> log_map(const ChartBasis& c, const DistributionPoint& mu);

// ---------------------------------------------------------------------------
// Projected polytope
// ---------------------------------------------------------------------------

struct FacetInequality {
  IntVec normal;  // primitive integer normal
  Rat offset;     // facet is { x : normal . x = offset }, polytope on the <= side
  bool operator==(const FacetInequality&) const = default;
};

// Image of the simplex under the linear map x -> A x, A the chart basis.
// The images of the unit vectors span it; facets and the set of generators
// landing on hull vertices are computed exactly.
struct ProjectedPolytope {
  IntMat projection;                       // the chart matrix A (d x n)
  RatMat vertex_images;                    // n points in Q^d, one per generator
  std::vector<std::size_t> hull_vertices;  // indices whose image is a hull vertex
  std::vector<FacetInequality> facets;
  int dimension() const { return static_cast<int>(projection.size()); }
};

ProjectedPolytope project_simplex(const IntegerLattice& Lc, std::size_t s_size);

// rho(mu) = A mu for the polytope's projection matrix.
RatVec project_point(const ProjectedPolytope& poly, const RatVec& mu);
std::vector<double> project_point(const ProjectedPolytope& poly,
                                  const std::vector<double>& mu);

// Strictly inside every facet (for dimension 0: equal to the unique point).
bool polytope_interior_contains(const ProjectedPolytope& poly, const RatVec& x);

// ---------------------------------------------------------------------------
// Solvers
// ---------------------------------------------------------------------------

// Unique point on the open segment from a to b where the single monomial
// identity attached to kappa holds. Requires the two sides of the identity
// to separate at the endpoints (one side dominates at a, the other at b);
// found by bisection, residual below 1e-12.
DistributionPoint segment_root(const IntVec& kappa, const DistributionPoint& a,
                               const DistributionPoint& b);

// Unique fully supported solution point in the fiber of rho over `target`,
// i.e. the maximum-entropy distribution with A-moment equal to target.
// Damped Newton on the dual; throws PreconditionError for non-interior
// targets and NumericalError on non-convergence.
DistributionPoint birch_lift(const ProjectedPolytope& poly, const IntegerLattice& Lc,
                             const RatVec& target, double tol = 1e-10,
                             std::size_t max_iterations = 100000);

// Does mu satisfy prod_{k_s > 0} mu_s^{k_s} = prod_{k_s < 0} mu_s^{-k_s} for
// every row kappa? Exact comparison in exact mode, 1e-12 tolerance in float
// mode.
bool lambda_membership(const IntMat& k_vectors, const DistributionPoint& mu);

// Exact rational solution point from positive rational parameters t (one per
// chart dimension): mu_s proportional to prod_j t_j^{A[j][s]}.
DistributionPoint rational_point_on_Lambda(const IntegerLattice& Lc, std::size_t s_size,
                                           const RatVec& t);

}  // namespace semabs

#endif
