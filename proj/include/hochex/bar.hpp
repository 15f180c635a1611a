#pragma once

#include <cstddef>

#include "hochex/algebra.hpp"
#include "hochex/cocycle.hpp"
#include "hochex/matrix.hpp"

namespace hochex {

// Brute-force (co)homology in degree 2 straight from tuple bases: cochains
// are Hom(A^{tensor k}, D(A)) with coordinates (tuple, dual target) flattened
// as tupleIndex * dim + target; chains are A^{tensor (k+1)} with row-major
// tuple coordinates.  Deliberately a desk-scale oracle: dimensions grow as
// (dim A)^4, so callers must keep dim A small (the CLI refuses dim A > 12).

// Matrix of the degree-k coboundary (k = 2: maps C^1 -> C^2; k = 3: C^2 ->
// C^3), rows = target coordinates, cols = source coordinates.
Matrix bar_coboundary_matrix(const TruncatedAlgebra& A, std::size_t k);

// Matrix of the degree-k chain differential (k = 2: C_2 -> C_1 with
// C_k = A^{tensor (k+1)}; k = 3: C_3 -> C_2).
Matrix bar_chain_matrix(const TruncatedAlgebra& A, std::size_t k);

// dim Ker(coboundary C^2 -> C^3) - rank(coboundary C^1 -> C^2).
std::size_t bar_h2_dim(const TruncatedAlgebra& A);

// dim Ker(chain C_2 -> C_1) - rank(chain C_3 -> C_2).
std::size_t bar_hh2_dim(const TruncatedAlgebra& A);

// Flat C^2 coordinates of a bilinear map, for kernel-membership and class
// independence tests against the matrices above.
Vec bar_cochain_vector(const Cocycle& alpha);

}  // namespace hochex
