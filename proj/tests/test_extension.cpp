#include "hochex/extension.hpp"

#include <cstddef>
#include <utility>
#include <vector>

#include "hochex/algebra.hpp"
#include "hochex/cocycle.hpp"
#include "hochex/homology.hpp"
#include "oracles.hpp"
#include "support.hpp"

using hochex::ArrowCountMatrix;
using hochex::Cocycle;
using hochex::ExtensionAlgebra;
using hochex::FieldSpec;
using hochex::make_field;
using hochex::Path;
using hochex::QuiverVerdict;
using hochex::Scalar;
using hochex::TruncatedAlgebra;
using hochex::Vec;

namespace {

ExtensionAlgebra top_extension(const TruncatedAlgebra& A) {
    const std::size_t q = 2 * A.truncation() - 1;
    const auto duals = hochex::dual_hh2_basis(A, q);
    Vec u = hochex::zero_vec(hochex::slice_basis(A, 2, q).size(), A.field());
    for (const Vec& d : duals) u = hochex::add_vec(u, d);
    return ExtensionAlgebra::create(A, hochex::theta(A, q, u));
}

ArrowCountMatrix counts3(std::initializer_list<std::size_t> cells) {
    ArrowCountMatrix m(3);
    std::size_t k = 0;
    for (std::size_t v : cells) m.counts[k++] = v;
    return m;
}

}  // namespace

int main() {
    const FieldSpec q0 = make_field(0);

    // Structure of the split extension with zero cocycle on K[x]/(x^2):
    // basis (e, x, e*, x*), radical (x, e*, x*), radical square (e*).
    {
        const TruncatedAlgebra A =
            TruncatedAlgebra::create(hochex::cyclic_quiver(1), 2, q0);
        const ExtensionAlgebra T = ExtensionAlgebra::create(A, Cocycle(A));
        REQUIRE(T.dim() == 4);
        REQUIRE(T.dim() == 2 * A.dim());
        // Identity is (1, 0) since the cocycle is zero.
        REQUIRE(T.unit() == T.from_parts(A.unit(), A.zero()));
        for (std::size_t i = 0; i < T.dim(); ++i) {
            REQUIRE(T.multiply(T.unit(), T.basis_vec(i)) == T.basis_vec(i));
            REQUIRE(T.multiply(T.basis_vec(i), T.unit()) == T.basis_vec(i));
        }
        // Part round trips.
        Vec a = A.zero(), x = A.zero();
        a[1] = Scalar::from_int(3, q0);
        x[0] = Scalar::from_int(-2, q0);
        const Vec t = T.from_parts(a, x);
        REQUIRE(T.a_part(t) == a);
        REQUIRE(T.d_part(t) == x);
        // x * x = 0, x * x* = e*, x* * x = e*, duals multiply to zero.
        const std::size_t ix = 1, ixd = 3, ied = 2;
        REQUIRE(T.basis_product(ix, ix).empty());
        REQUIRE(T.basis_product(ixd, ixd).empty());
        {
            const auto& row = T.basis_product(ix, ixd);
            REQUIRE(row.size() == 1);
            REQUIRE(row[0].first == ied && row[0].second.is_one());
        }
        {
            const auto& row = T.basis_product(ixd, ix);
            REQUIRE(row.size() == 1);
            REQUIRE(row[0].first == ied && row[0].second.is_one());
        }
        // e* kills the radical on both sides.
        REQUIRE(T.basis_product(ied, ix).empty());
        REQUIRE(T.basis_product(ix, ied).empty());
        const auto idem = hochex::lifted_idempotents(T);
        REQUIRE(idem.size() == 1);
        REQUIRE(idem[0] == T.unit());
        REQUIRE(hochex::radical_basis(T).size() == 3);
        const auto dims = hochex::radical_power_dims(T);
        REQUIRE(dims.size() == 2);
        REQUIRE(dims[0] == 3 && dims[1] == 1);
    }

    // Associativity of the full multiplication on a nonzero-cocycle
    // extension, plus idempotent behavior.
    {
        const TruncatedAlgebra A =
            TruncatedAlgebra::create(hochex::cyclic_quiver(3), 2, q0);
        const ExtensionAlgebra T = top_extension(A);
        REQUIRE(T.dim() == 12);
        for (std::size_t i = 0; i < T.dim(); ++i)
            for (std::size_t j = 0; j < T.dim(); ++j)
                for (std::size_t k = 0; k < T.dim(); ++k) {
                    const Vec ij_k = T.multiply(
                        T.multiply(T.basis_vec(i), T.basis_vec(j)),
                        T.basis_vec(k));
                    const Vec i_jk = T.multiply(
                        T.basis_vec(i),
                        T.multiply(T.basis_vec(j), T.basis_vec(k)));
                    REQUIRE(ij_k == i_jk);
                }
        const auto idem = hochex::lifted_idempotents(T);
        REQUIRE(idem.size() == 3);
        Vec sum = T.zero();
        for (std::size_t i = 0; i < 3; ++i) {
            sum = hochex::add_vec(sum, idem[i]);
            for (std::size_t j = 0; j < 3; ++j) {
                const Vec prod = T.multiply(idem[i], idem[j]);
                if (i == j)
                    REQUIRE(prod == idem[i]);
                else
                    REQUIRE(hochex::is_zero_vec(prod));
            }
        }
        REQUIRE(sum == T.unit());
        // alpha(a0, a1) = c (a2)* shows up in the product table.
        const std::size_t a0 = *A.path_index(Path{0, {0}});
        const std::size_t a1 = *A.path_index(Path{1, {1}});
        const auto& row = T.basis_product(a0, a1);
        REQUIRE(row.size() == 1);
        REQUIRE(row[0].first >= A.dim());  // a pure dual value
        // The base-algebra product embeds in the a-part.
        const Vec prod = T.multiply(T.basis_vec(a0), T.basis_vec(a0));
        REQUIRE(hochex::is_zero_vec(T.a_part(prod)));  // a0 a0 = 0 in A
    }

    // Construction rejects a bilinear map violating the cocycle identity.
    {
        const TruncatedAlgebra A =
            TruncatedAlgebra::create(hochex::cyclic_quiver(1), 3, q0);
        Cocycle bad(A);
        Vec ed = A.zero();
        ed[A.idempotent_index(0)] = Scalar::one(q0);
        bad.set_value(*A.path_index(Path{0, {0}}),
                      *A.path_index(Path{0, {0, 0}}), ed);
        REQUIRE_THROWS(ExtensionAlgebra::create(A, bad));
    }

    // Arrow-count helpers.
    {
        const ArrowCountMatrix base = hochex::arrow_counts(
            hochex::cyclic_quiver(3));
        REQUIRE(base == counts3({0, 1, 0, 0, 0, 1, 1, 0, 0}));
        REQUIRE(hochex::counts_str(base) == "[0 1 0; 0 0 1; 1 0 0]");
        ArrowCountMatrix bigger = base;
        bigger.set(2, 0, 2);
        REQUIRE(hochex::counts_leq(base, bigger));
        REQUIRE(!hochex::counts_leq(bigger, base));
        REQUIRE(hochex::counts_leq(base, base));
        ArrowCountMatrix other = base;
        other.set(0, 1, 0);
        other.set(2, 1, 5);
        REQUIRE(!hochex::counts_leq(base, other));
        REQUIRE(!hochex::counts_leq(other, base));
    }

    // Quiver of the split extension: both in-T routes agree with each other
    // (gabriel_quiver throws otherwise) and with the direct formula on A.
    for (std::size_t s = 1; s <= 3; ++s)
        for (std::size_t n = 2; n <= 4; ++n)
            for (unsigned long p : {0ul, 3ul}) {
                const FieldSpec fs = make_field(p);
                const TruncatedAlgebra A =
                    TruncatedAlgebra::create(hochex::cyclic_quiver(s), n, fs);
                const ExtensionAlgebra T =
                    ExtensionAlgebra::create(A, Cocycle(A));
                const ArrowCountMatrix got = hochex::gabriel_quiver(T);
                REQUIRE(got == hochex::trivial_extension_counts(A));
                REQUIRE(got == hochex::gabriel_quiver_direct(T));
                REQUIRE(got == hochex::gabriel_quiver_formula(T));
                REQUIRE(hochex::counts_leq(
                    hochex::arrow_counts(A.quiver()), got));
            }

    // Known split-extension quivers on the 3-cycle: added arrows reverse
    // (n = 2), double (n = 3), or loop (n = 4).
    {
        const auto tec = [&](std::size_t n) {
            return hochex::trivial_extension_counts(TruncatedAlgebra::create(
                hochex::cyclic_quiver(3), n, q0));
        };
        REQUIRE(tec(2) == counts3({0, 1, 1, 1, 0, 1, 1, 1, 0}));
        REQUIRE(tec(3) == counts3({0, 2, 0, 0, 0, 2, 2, 0, 0}));
        REQUIRE(tec(4) == counts3({1, 1, 0, 0, 1, 1, 1, 0, 1}));
    }

    // Verdicts: top degree reproduces the base quiver, lower valid degrees
    // the split-extension quiver; the zero pattern is flagged.
    {
        const QuiverVerdict v1 =
            hochex::theorem44_verdict(3, 2, 3, q0, {Scalar::one(q0)});
        REQUIRE(v1.kind == QuiverVerdict::BASE);
        REQUIRE(v1.counts == hochex::arrow_counts(hochex::cyclic_quiver(3)));
        REQUIRE(!v1.zero_class);
        REQUIRE(!v1.lemma42);  // top degree: values escape the subbimodule
        REQUIRE(v1.dim_T == 12);
        REQUIRE(hochex::verdict_str(v1.kind) == "BASE");

        const QuiverVerdict v2 = hochex::theorem44_verdict(
            3, 3, 3, q0, {Scalar::one(q0), Scalar::zero(q0)});
        REQUIRE(v2.kind == QuiverVerdict::TRIVIAL_EXT);
        REQUIRE(!v2.zero_class);
        REQUIRE(v2.lemma42);
        REQUIRE(v2.dim_T == 18);
        REQUIRE(hochex::verdict_str(v2.kind) == "TRIVIAL_EXT");

        const QuiverVerdict v3 = hochex::theorem44_verdict(
            3, 3, 3, q0, {Scalar::zero(q0), Scalar::zero(q0)});
        REQUIRE(v3.kind == QuiverVerdict::TRIVIAL_EXT);
        REQUIRE(v3.zero_class);

        const QuiverVerdict v4 =
            hochex::theorem44_verdict(3, 4, 6, q0, {Scalar::one(q0)});
        REQUIRE(v4.kind == QuiverVerdict::TRIVIAL_EXT);
        REQUIRE(v4.lemma42);

        // Wrong coefficient count is rejected.
        REQUIRE_THROWS(hochex::theorem44_verdict(
            3, 2, 3, q0, {Scalar::one(q0), Scalar::one(q0)}));

        // Mixed-degree sums: the verdict follows the top component.
        const FieldSpec f3 = make_field(3);
        const Scalar one3 = Scalar::one(f3);
        const QuiverVerdict m1 = hochex::theorem44_verdict(
            1, 3, f3, {{3, {one3}}, {5, {one3}}});
        REQUIRE(m1.kind == QuiverVerdict::BASE);
        REQUIRE(!m1.zero_class);
        const QuiverVerdict m2 = hochex::theorem44_verdict(
            1, 3, f3, {{3, {one3}}, {4, {one3}}});
        REQUIRE(m2.kind == QuiverVerdict::TRIVIAL_EXT);
        REQUIRE(!m2.zero_class);
    }

    // corollary46_predicate is exactly "s divides 2n - 1".
    {
        REQUIRE(hochex::corollary46_predicate(3, 2));    // 3 | 3
        REQUIRE(!hochex::corollary46_predicate(3, 3));   // 3 | 5 fails
        REQUIRE(hochex::corollary46_predicate(1, 5));
        REQUIRE(!hochex::corollary46_predicate(2, 4));   // even s never works
        REQUIRE(!hochex::corollary46_predicate(4, 3));
        REQUIRE(hochex::corollary46_predicate(5, 3));    // 5 | 5
    }

    // Presentations.  Positive cases on the matching extension:
    {
        // n = 4: loops quiver, twisted relations on the nonzero class.
        const TruncatedAlgebra A =
            TruncatedAlgebra::create(hochex::cyclic_quiver(3), 4, q0);
        const auto duals = hochex::dual_hh2_basis(A, 6);
        REQUIRE(duals.size() == 1);
        const ExtensionAlgebra Ta =
            ExtensionAlgebra::create(A, hochex::theta(A, 6, duals[0]));
        const ExtensionAlgebra T0 = ExtensionAlgebra::create(A, Cocycle(A));
        const auto twisted = hochex::presentation_s3n4(q0, true);
        const auto plain = hochex::presentation_s3n4(q0, false);
        REQUIRE(hochex::verify_presentation(Ta, twisted).ok);
        REQUIRE(hochex::verify_presentation(T0, plain).ok);
        // Negatives: swapped pairings must fail.
        REQUIRE(!hochex::verify_presentation(T0, twisted).ok);
        REQUIRE(!hochex::verify_presentation(Ta, plain).ok);
    }
    {
        // n = 3: doubled-arrow quiver for every nonzero coefficient pair.
        const TruncatedAlgebra A =
            TruncatedAlgebra::create(hochex::cyclic_quiver(3), 3, q0);
        const auto duals = hochex::dual_hh2_basis(A, 3);
        REQUIRE(duals.size() == 2);
        const auto build = [&](int k1, int k2) {
            const Vec u = hochex::add_vec(
                hochex::scale_vec(Scalar::from_int(k1, q0), duals[0]),
                hochex::scale_vec(Scalar::from_int(k2, q0), duals[1]));
            return ExtensionAlgebra::create(A, hochex::theta(A, 3, u));
        };
        const auto pres = [&](int k1, int k2) {
            return hochex::presentation_s3n3(q0, Scalar::from_int(k1, q0),
                                             Scalar::from_int(k2, q0));
        };
        REQUIRE(hochex::verify_presentation(build(1, 0), pres(1, 0)).ok);
        REQUIRE(hochex::verify_presentation(build(0, 1), pres(0, 1)).ok);
        REQUIRE(hochex::verify_presentation(build(1, 1), pres(1, 1)).ok);
        const ExtensionAlgebra T0 = ExtensionAlgebra::create(A, Cocycle(A));
        REQUIRE(hochex::verify_presentation(
                    T0, hochex::presentation_s3n3_trivial(q0)).ok);
        // A nonzero-class presentation cannot hold in the split extension.
        REQUIRE(!hochex::verify_presentation(T0, pres(1, 0)).ok);
    }
    {
        // n = 2: the base extension is the truncated algebra of the same
        // quiver with doubled truncation length.
        const TruncatedAlgebra A =
            TruncatedAlgebra::create(hochex::cyclic_quiver(3), 2, q0);
        const ExtensionAlgebra Tg = top_extension(A);
        const ExtensionAlgebra T0 = ExtensionAlgebra::create(A, Cocycle(A));
        const auto base = hochex::presentation_s3n2_base(q0);
        REQUIRE(hochex::verify_presentation(Tg, base).ok);
        REQUIRE(hochex::verify_presentation(
                    T0, hochex::presentation_s3n2_trivial(q0)).ok);
        // Falsified variant: adding x0 x1 = 0 must be rejected (that
        // product is a nonzero dual in the top extension).
        auto bogus = base;
        bogus.relations.push_back(
            {hochex::RelationTerm{Scalar::one(q0), {0, 1}}});
        REQUIRE(!hochex::verify_presentation(Tg, bogus).ok);
        // And the split-extension presentation fails on the top extension.
        REQUIRE(!hochex::verify_presentation(
                    Tg, hochex::presentation_s3n2_trivial(q0)).ok);
        // Mismatched vertex sets are rejected outright.
        const TruncatedAlgebra B =
            TruncatedAlgebra::create(hochex::cyclic_quiver(2), 2, q0);
        const ExtensionAlgebra TB = ExtensionAlgebra::create(B, Cocycle(B));
        REQUIRE_THROWS(hochex::verify_presentation(TB, base));
        // Malformed relations are rejected: short word, non-composable word.
        auto short_rel = base;
        short_rel.relations.push_back(
            {hochex::RelationTerm{Scalar::one(q0), {0}}});
        REQUIRE_THROWS(hochex::verify_presentation(Tg, short_rel));
        auto bad_word = base;
        bad_word.relations.push_back(
            {hochex::RelationTerm{Scalar::one(q0), {0, 0}}});
        REQUIRE_THROWS(hochex::verify_presentation(Tg, bad_word));
    }

    // Radical nilpotency degree: J(T)^(2n) always vanishes, and for the
    // top-degree class the bound is attained (size exactly 2n - 1).
    {
        const TruncatedAlgebra A =
            TruncatedAlgebra::create(hochex::cyclic_quiver(3), 2, q0);
        const auto dims_top = hochex::radical_power_dims(top_extension(A));
        REQUIRE(dims_top.size() == 3);  // J^3 != 0, J^4 = 0
        const auto dims_triv = hochex::radical_power_dims(
            ExtensionAlgebra::create(A, Cocycle(A)));
        REQUIRE(dims_triv.size() + 1 <= 4);
        REQUIRE(dims_triv[0] == 9);  // J(A) + D(A) = 3 + 6
    }

    return 0;
}
