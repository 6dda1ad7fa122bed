#ifndef SEMABS_RATLIN_HPP
#define SEMABS_RATLIN_HPP

#include <optional>

#include "semabs/numeric.hpp"

namespace semabs {

// Dense exact linear algebra over the rationals. Sizes here are tiny
// (dimensions bounded by the number of generators), so plain Gaussian
// elimination with cpp_rational entries is both simple and fast enough.

// Rank of the matrix (rows x cols may be anything, including empty).
int rat_rank(RatMat m);

// One solution x of A x = b, or nullopt when the system is inconsistent.
std::optional<RatVec> rat_solve(RatMat a, RatVec b);

// Inverse of a square matrix, or nullopt when singular.
std::optional<RatMat> rat_inverse(RatMat a);

// Basis of { x : A x = 0 }, returned as rows. The basis comes from the
// reduced echelon form (one vector per free column), so it is canonical
// for a given matrix.
RatMat rat_nullspace(RatMat a);

RatVec mat_vec(const RatMat& a, const RatVec& x);
RatMat mat_mul(const RatMat& a, const RatMat& b);

}  // namespace semabs

#endif
