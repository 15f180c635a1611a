#include "hochex/forms.hpp"

#include <random>
#include <stdexcept>

namespace hochex {

AlgebraView view_of(const TruncatedAlgebra& A) {
    AlgebraView v;
    v.dim = A.dim();
    v.fs = A.field();
    v.unit = A.unit();
    v.multiply = [&A](const Vec& x, const Vec& y) { return A.multiply(x, y); };
    return v;
}

AlgebraView view_of(const ExtensionAlgebra& T) {
    AlgebraView v;
    v.dim = T.dim();
    v.fs = T.field();
    v.unit = T.unit();
    v.multiply = [&T](const Vec& x, const Vec& y) { return T.multiply(x, y); };
    return v;
}

namespace {

Vec basis_vec(const AlgebraView& T, std::size_t i) {
    Vec v = zero_vec(T.dim, T.fs);
    v[i] = Scalar::one(T.fs);
    return v;
}

Scalar dot(const Vec& a, const Vec& b) {
    Scalar s = Scalar::zero(a.empty() ? make_field(0) : a[0].field());
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

FormSpace form_space(const AlgebraView& T) {
    const std::size_t d = T.dim;
    const FieldSpec& fs = T.fs;
    // Pairwise products of basis elements.
    std::vector<std::vector<Vec>> prod(d, std::vector<Vec>());
    for (std::size_t i = 0; i < d; ++i) {
        Vec bi = basis_vec(T, i);
        for (std::size_t j = 0; j < d; ++j)
            prod[i].push_back(T.multiply(bi, basis_vec(T, j)));
    }
    // Associativity of the algebra on all basis triples: with it, the family
    // B(xy, z) = B(x, yz) holds for every lambda below at once, because both
    // sides equal lambda of the same product vector.
    for (std::size_t i = 0; i < d; ++i) {
        Vec bi = basis_vec(T, i);
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Vec lhs = T.multiply(prod[i][j], basis_vec(T, k));
                Vec rhs = T.multiply(bi, prod[j][k]);
                if (lhs != rhs)
                    throw std::logic_error(
                        "form_space: algebra is not associative");
            }
    }
    // lambda vanishing on all commutators b_i b_j - b_j b_i.
    Matrix m(d * d, d, fs);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec diff = sub_vec(prod[i][j], prod[j][i]);
            for (std::size_t t = 0; t < d; ++t)
                if (!diff[t].is_zero()) m.add(i * d + j, t, diff[t]);
        }
    FormSpace out;
    out.lambdas = m.kernel_basis();
    for (const Vec& lam : out.lambdas) {
        std::vector<Vec> gram;
        for (std::size_t i = 0; i < d; ++i) {
            Vec row = zero_vec(d, fs);
            for (std::size_t j = 0; j < d; ++j) row[j] = dot(lam, prod[i][j]);
            gram.push_back(std::move(row));
        }
        // Verify symmetry of the Gram matrix and the commutator conditions.
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                if (gram[i][j] != gram[j][i])
                    throw std::logic_error("form_space: member not symmetric");
                if (dot(lam, sub_vec(prod[i][j], prod[j][i])) !=
                    Scalar::zero(fs))
                    throw std::logic_error(
                        "form_space: member fails a commutator condition");
            }
        out.grams.push_back(std::move(gram));
    }
    return out;
}

namespace {

// Rank of the Gram matrix of sum_k c_k * grams[k].
std::size_t gram_rank(const FormSpace& space, const Vec& c,
                      std::size_t d, const FieldSpec& fs) {
    Matrix g(d, d, fs);
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k].is_zero()) continue;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                const Scalar& v = space.grams[k][i][j];
                if (!v.is_zero()) g.add(i, j, c[k] * v);
            }
    }
    return g.rank();
}

std::vector<Vec> combined_gram(const FormSpace& space, const Vec& c,
                               std::size_t d, const FieldSpec& fs) {
    std::vector<Vec> g(d, zero_vec(d, fs));
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k].is_zero()) continue;
        for (std::size_t i = 0; i < d; ++i)
            add_scaled(g[i], c[k], space.grams[k][i]);
    }
    return g;
}

Vec combined_lambda(const FormSpace& space, const Vec& c, std::size_t d,
                    const FieldSpec& fs) {
    Vec lam = zero_vec(d, fs);
    for (std::size_t k = 0; k < c.size(); ++k)
        add_scaled(lam, c[k], space.lambdas[k]);
    return lam;
}

}  // namespace

SymmetryVerdict symmetry_verdict(const AlgebraView& T,
                                 unsigned long long seed,
                                 std::size_t samples) {
    const std::size_t d = T.dim;
    const FieldSpec& fs = T.fs;
    FormSpace space = form_space(T);
    SymmetryVerdict out;
    out.seed = seed;
    out.space_dim = space.dimension();
    out.degree_bound = d;  // det of a d x d pencil has degree <= d

    const std::size_t m = space.dimension();
    if (m == 0) {
        out.kind = SymmetryVerdict::NOT_SYMMETRIC;
        out.method = "zero-space";
        return out;
    }
    // A common radical vector v (G_k v = 0 for all k) makes every member
    // degenerate at once.
    {
        Matrix stacked(m * d, d, fs);
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) {
                    const Scalar& v = space.grams[k][i][j];
                    if (!v.is_zero()) stacked.add(k * d + i, j, v);
                }
        if (stacked.rank() < d) {
            out.kind = SymmetryVerdict::NOT_SYMMETRIC;
            out.method = "common-radical";
            return out;
        }
    }
    auto accept = [&](const Vec& c) -> bool {
        if (gram_rank(space, c, d, fs) != d) return false;
        out.kind = SymmetryVerdict::SYMMETRIC;
        out.witness_gram = combined_gram(space, c, d, fs);
        out.witness_lambda = combined_lambda(space, c, d, fs);
        // Re-verify the witness from scratch: symmetry and nondegeneracy of
        // the Gram matrix (associativity holds because B = lambda(xy) and
        // the multiplication was verified associative in form_space).
        Matrix g(d, d, fs);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                if (out.witness_gram[i][j] != out.witness_gram[j][i])
                    throw std::logic_error("symmetry witness not symmetric");
                if (!out.witness_gram[i][j].is_zero())
                    g.add(i, j, out.witness_gram[i][j]);
            }
        if (g.rank() != d)
            throw std::logic_error("symmetry witness degenerate");
        return true;
    };

    const unsigned long long p = fs.characteristic;
    if (p != 0) {
        // Exhaustive enumeration when |K|^m is small.
        unsigned long long total = 1;
        bool small = true;
        for (std::size_t k = 0; k < m && small; ++k) {
            total *= p;
            if (total > 65536) small = false;
        }
        if (small) {
            Vec c = zero_vec(m, fs);
            std::vector<unsigned long long> digits(m, 0);
            for (unsigned long long idx = 1; idx < total; ++idx) {
                std::size_t pos = 0;
                while (pos < m) {
                    digits[pos]++;
                    if (digits[pos] < p) break;
                    digits[pos] = 0;
                    ++pos;
                }
                for (std::size_t k = 0; k < m; ++k)
                    c[k] = Scalar::from_int(
                        static_cast<long long>(digits[k]), fs);
                ++out.samples_tried;
                if (accept(c)) {
                    out.method = "exhaustive";
                    return out;
                }
            }
            out.kind = SymmetryVerdict::NOT_SYMMETRIC;
            out.method = "exhaustive";
            return out;
        }
    }
    // Deterministic grid sweep: det(sum c_k G_k) has degree <= d in each
    // variable, so if it vanishes on {0..d}^m it is the zero polynomial.
    // Valid whenever the field has more than d distinct elements.
    if (p == 0 || p > d) {
        double grid_size = 1;
        for (std::size_t k = 0; k < m && grid_size <= 10000; ++k)
            grid_size *= static_cast<double>(d + 1);
        if (grid_size <= 10000) {
            std::vector<std::size_t> digits(m, 0);
            Vec c = zero_vec(m, fs);
            const std::size_t base = d + 1;
            bool done = false;
            while (!done) {
                bool nonzero = false;
                for (std::size_t k = 0; k < m; ++k) {
                    c[k] = Scalar::from_int(static_cast<long long>(digits[k]),
                                            fs);
                    nonzero = nonzero || digits[k] != 0;
                }
                if (nonzero) {
                    ++out.samples_tried;
                    if (accept(c)) {
                        out.method = "grid";
                        return out;
                    }
                }
                std::size_t pos = 0;
                while (true) {
                    if (pos == m) {
                        done = true;
                        break;
                    }
                    digits[pos]++;
                    if (digits[pos] < base) break;
                    digits[pos] = 0;
                    ++pos;
                }
            }
            out.kind = SymmetryVerdict::NOT_SYMMETRIC;
            out.method = "grid";
            return out;
        }
    }
    // Bounded random search; honest INCONCLUSIVE on failure.
    std::mt19937_64 rng(seed);
    for (std::size_t trial = 0; trial < samples; ++trial) {
        const long long range = 3 + static_cast<long long>(trial / 8);
        Vec c = zero_vec(m, fs);
        bool nonzero = false;
        for (std::size_t k = 0; k < m; ++k) {
            long long r;
            if (p != 0) {
                r = static_cast<long long>(rng() % p);
            } else {
                r = static_cast<long long>(rng() %
                                           (2 * static_cast<unsigned long long>(
                                                    range) +
                                            1)) -
                    range;
            }
            nonzero = nonzero || r != 0;
            c[k] = Scalar::from_int(r, fs);
        }
        if (!nonzero) continue;
        ++out.samples_tried;
        if (accept(c)) {
            out.method = "random-search";
            return out;
        }
    }
    out.kind = SymmetryVerdict::INCONCLUSIVE;
    out.method = "random-search";
    return out;
}

}  // namespace hochex
