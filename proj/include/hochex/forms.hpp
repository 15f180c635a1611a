#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "hochex/algebra.hpp"
#include "hochex/extension.hpp"
#include "hochex/matrix.hpp"

namespace hochex {

// Minimal interface to a finite-dimensional unital algebra over Scalar, so
// that the form machinery runs uniformly over truncated algebras, extension
// algebras and ad-hoc examples.
struct AlgebraView {
    std::size_t dim = 0;
    FieldSpec fs;
    Vec unit;
    std::function<Vec(const Vec&, const Vec&)> multiply;
};

// The returned view holds a reference to the algebra inside its multiply
// closure: the argument must outlive the view (do not pass a temporary).
AlgebraView view_of(const TruncatedAlgebra& A);
AlgebraView view_of(const ExtensionAlgebra& T);

// Solution space of symmetric associative bilinear forms.  On a unital
// algebra every associative form is B(x, y) = lambda(xy) with
// lambda = B(-, 1); symmetry is exactly lambda vanishing on commutators.
// Each member is stored as the functional lambda plus its Gram matrix
// G[i][j] = lambda(b_i b_j).  Construction re-verifies associativity of the
// algebra on all basis triples (which makes the associativity constraint
// family hold for every lambda simultaneously), Gram symmetry, and the
// commutator conditions for every returned member.
struct FormSpace {
    std::vector<Vec> lambdas;
    std::vector<std::vector<Vec>> grams;

    std::size_t dimension() const { return lambdas.size(); }
};

FormSpace form_space(const AlgebraView& T);

// SYMMETRIC: a verified nondegenerate member exists (witness included).
// NOT_SYMMETRIC: certified nonexistence — zero form space, a common radical
// vector of the whole space, exhaustive enumeration over a small finite
// field, or a full deterministic grid sweep (degree argument) found nothing.
// INCONCLUSIVE: bounded random search failed without a certificate.
struct SymmetryVerdict {
    enum Kind { SYMMETRIC, NOT_SYMMETRIC, INCONCLUSIVE };
    Kind kind = INCONCLUSIVE;
    std::vector<Vec> witness_gram;  // nonempty iff SYMMETRIC
    Vec witness_lambda;
    std::size_t space_dim = 0;
    std::size_t samples_tried = 0;
    unsigned long long seed = 0;
    std::size_t degree_bound = 0;  // bound on det degree used by certificates
    std::string method;  // zero-space | common-radical | exhaustive | grid |
                         // random-search
};

SymmetryVerdict symmetry_verdict(const AlgebraView& T,
                                 unsigned long long seed,
                                 std::size_t samples);

}  // namespace hochex
