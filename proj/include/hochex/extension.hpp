#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hochex/algebra.hpp"
#include "hochex/cocycle.hpp"
#include "hochex/matrix.hpp"
#include "hochex/quiver.hpp"

namespace hochex {

// Extension algebra T = A (+) D(A) with multiplication
//   (a, x)(b, y) = (ab, a.y + x.b + alpha(a, b)).
// T-basis: indices 0..dimA-1 are the algebra basis paths (p, 0); indices
// dimA..2dimA-1 are the dual basis functionals (0, p*).  The identity is
// (1, -alpha(1,1)).  Construction verifies the cocycle condition,
// associativity on all basis triples, and the identity law.
class ExtensionAlgebra {
public:
    static ExtensionAlgebra create(const TruncatedAlgebra& A,
                                   const Cocycle& alpha);

    const TruncatedAlgebra& algebra() const { return *A_; }
    const Cocycle& cocycle() const { return *alpha_; }
    const FieldSpec& field() const { return A_->field(); }
    std::size_t dim() const { return 2 * A_->dim(); }

    Vec zero() const { return zero_vec(dim(), field()); }
    const Vec& unit() const { return identity_; }
    Vec basis_vec(std::size_t i) const;
    Vec multiply(const Vec& x, const Vec& y) const;
    // Assemble (a, x) from an algebra element and a dual element.
    Vec from_parts(const Vec& a, const Vec& x) const;
    Vec a_part(const Vec& t) const;
    Vec d_part(const Vec& t) const;
    // Sparse product of basis elements i, j (T coordinates).
    const std::vector<std::pair<std::size_t, Scalar>>& basis_product(
        std::size_t i, std::size_t j) const;

private:
    ExtensionAlgebra() = default;

    const TruncatedAlgebra* A_ = nullptr;
    std::optional<Cocycle> alpha_;
    Vec identity_;
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> table_;
};

// The elements (e_i, 0); verified to be orthogonal idempotents summing to the
// identity.  Requires the cocycle to vanish on idempotents.
std::vector<Vec> lifted_idempotents(const ExtensionAlgebra& T);

// Basis of J(T) = J(A) (+) D(A); verified to be a two-sided nilpotent ideal
// with semisimple basic quotient of dimension s.
std::vector<Vec> radical_basis(const ExtensionAlgebra& T);

// Dimensions of J(T)^1, J(T)^2, ... down to (but excluding) the first zero
// power.  J(T)^k = 0 iff k > result.size().
std::vector<std::size_t> radical_power_dims(const ExtensionAlgebra& T);

// s x s grid of arrow multiplicities N(i, j).
struct ArrowCountMatrix {
    std::size_t size = 0;
    std::vector<std::size_t> counts;  // row-major

    ArrowCountMatrix() = default;
    explicit ArrowCountMatrix(std::size_t s) : size(s), counts(s * s, 0) {}
    std::size_t at(std::size_t i, std::size_t j) const {
        return counts[i * size + j];
    }
    void set(std::size_t i, std::size_t j, std::size_t v) {
        counts[i * size + j] = v;
    }
    bool operator==(const ArrowCountMatrix&) const = default;
};

// Entrywise a(i,j) <= b(i,j).
bool counts_leq(const ArrowCountMatrix& a, const ArrowCountMatrix& b);
// Arrow multiplicities of a plain quiver.
ArrowCountMatrix arrow_counts(const Quiver& q);
std::string counts_str(const ArrowCountMatrix& m);

// N(i,j) = dim e_i J(T) e_j / e_i J(T)^2 e_j computed directly inside T.
ArrowCountMatrix gabriel_quiver_direct(const ExtensionAlgebra& T);
// Same counts via the decomposition N_A(i,j) + dim of the dual corner modulo
// e_i (J(A)D(A) + D(A)J(A) + alpha(J,J)) e_j.
ArrowCountMatrix gabriel_quiver_formula(const ExtensionAlgebra& T);
// Both routes; throws std::logic_error if they disagree.
ArrowCountMatrix gabriel_quiver(const ExtensionAlgebra& T);

// Arrow counts of the trivial extension T_0(A):
// N_A(i,j) + dim e_iD(A)e_j / e_i(J(A)D(A) + D(A)J(A))e_j.
ArrowCountMatrix trivial_extension_counts(const TruncatedAlgebra& A);

struct QuiverVerdict {
    enum Kind { BASE, TRIVIAL_EXT, OTHER };
    Kind kind = OTHER;
    ArrowCountMatrix counts;
    bool zero_class = false;  // the built cocycle is a coboundary
    bool lemma42 = false;     // radical_image_contained on the built cocycle
    std::size_t dim_T = 0;
};

std::string verdict_str(QuiverVerdict::Kind k);

// Builds the cocycle from dual class representatives of degree q on the
// cyclic quiver with s vertices, forms the extension, and classifies its
// quiver against the base quiver and the trivial-extension quiver.
QuiverVerdict theorem44_verdict(std::size_t s, std::size_t n, std::size_t q,
                                const FieldSpec& fs, const Vec& coefficients);
// Mixed-degree variant: the cocycle is the sum of per-degree builds.
QuiverVerdict theorem44_verdict(
    std::size_t s, std::size_t n, const FieldSpec& fs,
    const std::vector<std::pair<std::size_t, Vec>>& components);

// True iff (2n - 1) is divisible by s.
bool corollary46_predicate(std::size_t s, std::size_t n);

// ---- Presentation verification -------------------------------------------

// Template for the image of one presented arrow: an optional algebra path
// part (with a fixed coefficient 1, or a searched coefficient in {0, 1}),
// plus an unknown dual part ranging over the matching dual corner.
struct PresentedArrow {
    std::optional<Path> a_part;
    bool search_scalar = false;
};

struct RelationTerm {
    Scalar coefficient;
    std::vector<std::size_t> word;  // arrow indices of the presented quiver
};
using Relation = std::vector<RelationTerm>;

struct PresentationCase {
    std::string name;
    Quiver qprime;
    std::vector<PresentedArrow> arrows;  // parallel to qprime.arrows
    std::vector<Relation> relations;
};

struct PresentationReport {
    bool ok = false;
    std::string detail;
    std::vector<Vec> images;          // T-coordinates, parallel to arrows
    std::vector<int> scalar_choice;   // chosen path coefficient; -1 = no part
};

// Searches arrow images matching the templates such that (1) the images lie
// in the required corners of J(T), (2) their classes modulo J(T)^2 form a
// basis of J/J^2 with per-corner multiplicities equal to the presented
// quiver's arrow counts, (3) every relation evaluates to zero in T, and
// (4) the span of monomials in the images (seeded by the lifted idempotents)
// is all of T.  Relation words must all have length >= 2 and be composable.
PresentationReport verify_presentation(const ExtensionAlgebra& T,
                                       const PresentationCase& pc);

// Canonical presentation fixtures on the cyclic quiver with three vertices.
// Arrow order: the three base arrows first, then the three added arrows.
PresentationCase presentation_s3n4(const FieldSpec& fs, bool twisted);
PresentationCase presentation_s3n3(const FieldSpec& fs, const Scalar& k1,
                                   const Scalar& k2);
PresentationCase presentation_s3n3_trivial(const FieldSpec& fs);
PresentationCase presentation_s3n2_trivial(const FieldSpec& fs);
// The base cyclic quiver with all length-4 paths as relations.
PresentationCase presentation_s3n2_base(const FieldSpec& fs);

}  // namespace hochex
