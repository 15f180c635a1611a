#include "hochex/bar.hpp"

#include <stdexcept>

namespace hochex {

namespace {

// act_left/act_right of a basis path on a dual basis functional give a single
// dual basis functional (coefficient 1) or zero; tabulate the result index.
struct ActTables {
    std::vector<std::vector<std::size_t>> lact, ract;
};

ActTables act_tables(const TruncatedAlgebra& A) {
    const std::size_t d = A.dim();
    const std::size_t npos = TruncatedAlgebra::npos;
    const Scalar one = Scalar::one(A.field());
    ActTables t{std::vector<std::vector<std::size_t>>(
                    d, std::vector<std::size_t>(d, npos)),
                std::vector<std::vector<std::size_t>>(
                    d, std::vector<std::size_t>(d, npos))};
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t f = 0; f < d; ++f) {
            Vec unit = zero_vec(d, A.field());
            unit[f] = one;
            Vec lv = A.act_left(a, unit);
            Vec rv = A.act_right(unit, a);
            for (std::size_t s = 0; s < d; ++s) {
                if (!lv[s].is_zero()) t.lact[a][f] = s;
                if (!rv[s].is_zero()) t.ract[a][f] = s;
            }
        }
    }
    return t;
}

}  // namespace

Matrix bar_coboundary_matrix(const TruncatedAlgebra& A, std::size_t k) {
    const std::size_t d = A.dim();
    const std::size_t npos = TruncatedAlgebra::npos;
    const FieldSpec& fs = A.field();
    const Scalar one = Scalar::one(fs);
    const ActTables act = act_tables(A);
    if (k == 2) {
        // (df)(a,b) = a f(b) - f(ab) + f(a) b; rows (i,j,t), cols (b,t).
        Matrix m(d * d * d, d * d, fs);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                const std::size_t base = (i * d + j) * d;
                for (std::size_t t = 0; t < d; ++t) {
                    if (act.lact[i][t] != npos)
                        m.add(base + act.lact[i][t], j * d + t, one);
                    if (act.ract[j][t] != npos)
                        m.add(base + act.ract[j][t], i * d + t, one);
                }
                const std::size_t ij = A.mul_index(i, j);
                if (ij != npos)
                    for (std::size_t t = 0; t < d; ++t)
                        m.add(base + t, ij * d + t, -one);
            }
        }
        return m;
    }
    if (k == 3) {
        // (dα)(a,b,c) = a α(b,c) - α(ab,c) + α(a,bc) - α(a,b) c;
        // rows (i,j,l,t), cols ((p,q),t).
        Matrix m(d * d * d * d, d * d * d, fs);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                const std::size_t ij = A.mul_index(i, j);
                for (std::size_t l = 0; l < d; ++l) {
                    const std::size_t base = ((i * d + j) * d + l) * d;
                    for (std::size_t t = 0; t < d; ++t) {
                        if (act.lact[i][t] != npos)
                            m.add(base + act.lact[i][t], (j * d + l) * d + t,
                                  one);
                        if (act.ract[l][t] != npos)
                            m.add(base + act.ract[l][t], (i * d + j) * d + t,
                                  -one);
                    }
                    if (ij != npos)
                        for (std::size_t t = 0; t < d; ++t)
                            m.add(base + t, (ij * d + l) * d + t, -one);
                    const std::size_t jl = A.mul_index(j, l);
                    if (jl != npos)
                        for (std::size_t t = 0; t < d; ++t)
                            m.add(base + t, (i * d + jl) * d + t, one);
                }
            }
        }
        return m;
    }
    throw std::invalid_argument("bar_coboundary_matrix: k must be 2 or 3");
}

Matrix bar_chain_matrix(const TruncatedAlgebra& A, std::size_t k) {
    const std::size_t d = A.dim();
    const std::size_t npos = TruncatedAlgebra::npos;
    const FieldSpec& fs = A.field();
    const Scalar one = Scalar::one(fs);
    if (k == 2) {
        // b(a0,a1,a2) = (a0a1, a2) - (a0, a1a2) + (a2a0, a1);
        // rows (p,q), cols (i,j,l).
        Matrix m(d * d, d * d * d, fs);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                const std::size_t ij = A.mul_index(i, j);
                for (std::size_t l = 0; l < d; ++l) {
                    const std::size_t col = (i * d + j) * d + l;
                    if (ij != npos) m.add(ij * d + l, col, one);
                    const std::size_t jl = A.mul_index(j, l);
                    if (jl != npos) m.add(i * d + jl, col, -one);
                    const std::size_t li = A.mul_index(l, i);
                    if (li != npos) m.add(li * d + j, col, one);
                }
            }
        }
        return m;
    }
    if (k == 3) {
        // b(a0,a1,a2,a3) = (a0a1,a2,a3) - (a0,a1a2,a3) + (a0,a1,a2a3)
        //                  - (a3a0,a1,a2); rows triples, cols quadruples.
        Matrix m(d * d * d, d * d * d * d, fs);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                const std::size_t ij = A.mul_index(i, j);
                for (std::size_t l = 0; l < d; ++l) {
                    const std::size_t jl = A.mul_index(j, l);
                    for (std::size_t r = 0; r < d; ++r) {
                        const std::size_t col = ((i * d + j) * d + l) * d + r;
                        if (ij != npos) m.add((ij * d + l) * d + r, col, one);
                        if (jl != npos) m.add((i * d + jl) * d + r, col, -one);
                        const std::size_t lr = A.mul_index(l, r);
                        if (lr != npos) m.add((i * d + j) * d + lr, col, one);
                        const std::size_t ri = A.mul_index(r, i);
                        if (ri != npos) m.add((ri * d + j) * d + l, col, -one);
                    }
                }
            }
        }
        return m;
    }
    throw std::invalid_argument("bar_chain_matrix: k must be 2 or 3");
}

std::size_t bar_h2_dim(const TruncatedAlgebra& A) {
    const std::size_t d = A.dim();
    const std::size_t c2 = d * d * d;
    const std::size_t rank3 = bar_coboundary_matrix(A, 3).rank();
    const std::size_t rank2 = bar_coboundary_matrix(A, 2).rank();
    return (c2 - rank3) - rank2;
}

std::size_t bar_hh2_dim(const TruncatedAlgebra& A) {
    const std::size_t d = A.dim();
    const std::size_t c2 = d * d * d;
    const std::size_t rank2 = bar_chain_matrix(A, 2).rank();
    const std::size_t rank3 = bar_chain_matrix(A, 3).rank();
    return (c2 - rank2) - rank3;
}

Vec bar_cochain_vector(const Cocycle& alpha) {
    const TruncatedAlgebra& A = alpha.algebra();
    const std::size_t d = A.dim();
    Vec out = zero_vec(d * d * d, A.field());
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const Vec& v = alpha.value(i, j);
            if (v.empty()) continue;
            for (std::size_t t = 0; t < d; ++t)
                if (!v[t].is_zero()) out[(i * d + j) * d + t] = v[t];
        }
    }
    return out;
}

}  // namespace hochex
