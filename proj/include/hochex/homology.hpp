#pragma once

#include <cstddef>
#include <vector>

#include "hochex/algebra.hpp"
#include "hochex/matrix.hpp"
#include "hochex/quiver.hpp"

namespace hochex {

// Degree-q slice of the three relevant terms of the small graded complex
// computing HH_2.  A basis element is a length-q cycle with a designated
// starting arrow; the tensor split sits after `split` arrows (the left factor
// must be an algebra basis path, which bounds the valid degree ranges:
// term 1: 1 <= q <= n, split q-1; term 2: n <= q <= 2n-1, split q-n;
// term 3: n+1 <= q <= 2n, split q-n-1).
struct GradedSlice {
    std::size_t term = 0;
    std::size_t q = 0;
    std::size_t split = 0;
    std::vector<Path> cycles;  // basis order: lex on arrow sequences

    std::size_t size() const { return cycles.size(); }
};

GradedSlice slice_basis(const TruncatedAlgebra& A, std::size_t term,
                        std::size_t q);

// Matrix of the degree-q differential from term 2 to term 1 (rows are term-1
// basis elements, columns term-2).  Nonzero only at q = n, where the column
// of a cycle is the sum of its n backward rotation marks; on the cyclic
// quiver this is the s x s matrix with every entry n/s.
Matrix d2_matrix(const TruncatedAlgebra& A, std::size_t q);

// Matrix of the degree-q differential from term 3 to term 2: a cycle maps to
// itself (same start, split one later) minus its backward rotation.
Matrix d3_matrix(const TruncatedAlgebra& A, std::size_t q);

// dim Ker(d2) - rank(d3) at degree q, computed from the matrices.
std::size_t hh2_dimension(const TruncatedAlgebra& A, std::size_t q);

// Closed-form value of the same dimension: 0 outside n <= q <= 2n-1; the
// orbit count a_q for n+1 <= q <= 2n-1; and at q = n the basic-cycle sum
// sum_{r | n} b_r * (r - 1 + [char K divides n/r]).
std::size_t hh2_formula(const Quiver& q, std::size_t n, std::size_t degree,
                        const FieldSpec& fs);

// Kernel dimension of multiplication by the integer m on K: 1 when m = 0 in
// K (char K divides m; char 0 divides only 0), else 0.
std::size_t ker_scale_dim(unsigned long long m, const FieldSpec& fs);

// Representatives of a basis of the dual of HH_{2,q}: the canonical kernel
// basis of transpose(d3), greedily filtered to be independent modulo the row
// space of d2.  Coordinates are over duals of the term-2 slice basis.
std::vector<Vec> dual_hh2_basis(const TruncatedAlgebra& A, std::size_t q);

}  // namespace hochex
