#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hochex/algebra.hpp"
#include "hochex/homology.hpp"
#include "hochex/matrix.hpp"

namespace hochex {

// Bilinear map A x A -> D(A), stored on basis-path pairs (including trivial
// paths) and extended bilinearly.  values[i * dim + j] is the dual vector
// assigned to the pair of basis paths (i, j); an empty vector means zero.
class Cocycle {
public:
    explicit Cocycle(const TruncatedAlgebra& A);

    const TruncatedAlgebra& algebra() const { return *A_; }
    bool is_zero() const;

    const Vec& value(std::size_t i, std::size_t j) const;
    void set_value(std::size_t i, std::size_t j, Vec v);
    void add_value(std::size_t i, std::size_t j, const Vec& v);
    // Bilinear extension to arbitrary elements.
    Vec evaluate(const Vec& a, const Vec& b) const;

    Cocycle operator+(const Cocycle& o) const;
    Cocycle operator-(const Cocycle& o) const;
    Cocycle scaled(const Scalar& c) const;

private:
    const TruncatedAlgebra* A_;
    Vec empty_;
    std::vector<Vec> values_;
};

// Comparison map from a dual vector over the degree-q term-2 slice to an
// explicit 2-cocycle.  For each slice basis cycle the arrow sequence is
// rotated so it starts at the right tensor factor; a basis-path pair
// (p1, p2) with both lengths >= 1 and n <= |p1| + |p2| <= q maps to the dual
// of the remaining suffix when the plain path-algebra concatenation p1 p2
// (NOT the truncated product) matches the leading arrows, and to the trivial
// dual at the cycle's base vertex when the suffix is empty.
Cocycle theta(const TruncatedAlgebra& A, std::size_t q, const Vec& u);

// Exhaustive check of a.val(b,c) - val(ab,c) + val(a,bc) - val(a,b).c = 0
// over all basis-path triples.
bool cocycle_check(const Cocycle& alpha);

// Linear map A -> D(A) as columns: f[j] is the dual vector f(basis_j).
using LinearMap = std::vector<Vec>;

// Searches f with a.f(b) - f(ab) + f(a).b = alpha(a,b); requires alpha to be
// a cocycle (throws otherwise).  nullopt when alpha is not a coboundary.
std::optional<LinearMap> is_coboundary(const Cocycle& alpha);

// True iff alpha vanishes whenever either basis argument is a trivial path.
bool vanishes_on_idempotents(const Cocycle& alpha);

// True iff all values of alpha on radical basis-path pairs lie in the
// subbimodule J(A)D(A) + D(A)J(A).
bool radical_image_contained(const Cocycle& alpha);

}  // namespace hochex
