#include "hochex/cocycle.hpp"

#include <stdexcept>
#include <utility>

namespace hochex {

Cocycle::Cocycle(const TruncatedAlgebra& A)
    : A_(&A), values_(A.dim() * A.dim()) {}

bool Cocycle::is_zero() const {
    for (const Vec& v : values_)
        if (!v.empty() && !is_zero_vec(v)) return false;
    return true;
}

const Vec& Cocycle::value(std::size_t i, std::size_t j) const {
    return values_[i * A_->dim() + j];
}

void Cocycle::set_value(std::size_t i, std::size_t j, Vec v) {
    values_[i * A_->dim() + j] = std::move(v);
}

void Cocycle::add_value(std::size_t i, std::size_t j, const Vec& v) {
    Vec& slot = values_[i * A_->dim() + j];
    if (slot.empty()) slot = A_->zero();
    slot = add_vec(slot, v);
}

Vec Cocycle::evaluate(const Vec& a, const Vec& b) const {
    const std::size_t d = A_->dim();
    Vec out = A_->zero();
    for (std::size_t i = 0; i < d; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (b[j].is_zero()) continue;
            const Vec& v = value(i, j);
            if (v.empty()) continue;
            add_scaled(out, a[i] * b[j], v);
        }
    }
    return out;
}

Cocycle Cocycle::operator+(const Cocycle& o) const {
    Cocycle out(*A_);
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (!values_[k].empty() && !o.values_[k].empty())
            out.values_[k] = add_vec(values_[k], o.values_[k]);
        else if (!values_[k].empty())
            out.values_[k] = values_[k];
        else
            out.values_[k] = o.values_[k];
    }
    return out;
}

Cocycle Cocycle::operator-(const Cocycle& o) const {
    return *this + o.scaled(Scalar::from_int(-1, A_->field()));
}

Cocycle Cocycle::scaled(const Scalar& c) const {
    Cocycle out(*A_);
    for (std::size_t k = 0; k < values_.size(); ++k)
        if (!values_[k].empty()) out.values_[k] = scale_vec(c, values_[k]);
    return out;
}

Cocycle theta(const TruncatedAlgebra& A, std::size_t q, const Vec& u) {
    const std::size_t n = A.truncation();
    if (q < n || q > 2 * n - 1)
        throw std::invalid_argument("theta: degree outside the term-2 range");
    GradedSlice slice = slice_basis(A, 2, q);
    if (u.size() != slice.size())
        throw std::invalid_argument("theta: coefficient count != slice size");

    Cocycle alpha(A);
    const std::size_t split = slice.split;  // q - n
    const Quiver& quiv = A.quiver();
    for (std::size_t t = 0; t < slice.size(); ++t) {
        const Scalar& c = u[t];
        if (c.is_zero()) continue;
        const Path& cyc = slice.cycles[t];
        // Rotate so the arrow word starts at the right tensor factor.
        std::vector<std::size_t> b(q);
        for (std::size_t i = 0; i < q; ++i)
            b[i] = cyc.arrows[(split + i) % q];
        // Vertex chain: vtx[i] is the source of arrow b[i]; vtx[q] wraps.
        std::vector<std::size_t> vtx(q + 1);
        vtx[0] = split == 0 ? cyc.source
                            : quiv.arrows[cyc.arrows[split - 1]].second;
        for (std::size_t i = 0; i < q; ++i)
            vtx[i + 1] = quiv.arrows[b[i]].second;

        // All factorizations b_1..b_m = p1 p2 with m1, m2 >= 1 and
        // n <= m <= q; both pieces are algebra basis paths (length <= n-1).
        const std::size_t m_hi = std::min(q, 2 * n - 2);
        for (std::size_t m = n; m <= m_hi; ++m) {
            Vec dual = A.zero();
            if (m == q) {
                dual[A.idempotent_index(vtx[0])] = Scalar::one(A.field());
            } else {
                Path suffix{vtx[m], {b.begin() + static_cast<std::ptrdiff_t>(m),
                                     b.end()}};
                dual[*A.path_index(suffix)] = Scalar::one(A.field());
            }
            const std::size_t lo = m >= n ? std::max<std::size_t>(1, m - (n - 1))
                                          : 1;
            for (std::size_t m1 = lo; m1 + 1 <= m && m1 <= n - 1; ++m1) {
                Path p1{vtx[0], {b.begin(),
                                 b.begin() + static_cast<std::ptrdiff_t>(m1)}};
                Path p2{vtx[m1], {b.begin() + static_cast<std::ptrdiff_t>(m1),
                                  b.begin() + static_cast<std::ptrdiff_t>(m)}};
                auto i1 = A.path_index(p1);
                auto i2 = A.path_index(p2);
                alpha.add_value(*i1, *i2, scale_vec(c, dual));
            }
        }
    }
    return alpha;
}

bool cocycle_check(const Cocycle& alpha) {
    const TruncatedAlgebra& A = alpha.algebra();
    const std::size_t d = A.dim();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const std::size_t ij = A.mul_index(i, j);
            const Vec& v_ij = alpha.value(i, j);
            for (std::size_t k = 0; k < d; ++k) {
                Vec acc = A.zero();
                const Vec& v_jk = alpha.value(j, k);
                if (!v_jk.empty()) acc = add_vec(acc, A.act_left(i, v_jk));
                if (ij != TruncatedAlgebra::npos) {
                    const Vec& v = alpha.value(ij, k);
                    if (!v.empty()) acc = sub_vec(acc, v);
                }
                const std::size_t jk = A.mul_index(j, k);
                if (jk != TruncatedAlgebra::npos) {
                    const Vec& v = alpha.value(i, jk);
                    if (!v.empty()) acc = add_vec(acc, v);
                }
                if (!v_ij.empty()) acc = sub_vec(acc, A.act_right(v_ij, k));
                if (!is_zero_vec(acc)) return false;
            }
        }
    }
    return true;
}

std::optional<LinearMap> is_coboundary(const Cocycle& alpha) {
    if (!cocycle_check(alpha))
        throw std::invalid_argument("is_coboundary: input is not a cocycle");
    const TruncatedAlgebra& A = alpha.algebra();
    const FieldSpec& fs = A.field();
    const std::size_t d = A.dim();
    const Scalar one = Scalar::one(fs);

    // Basis path acting on a dual basis functional yields a single dual basis
    // functional or zero; tabulate the index (npos for zero).
    const std::size_t npos = TruncatedAlgebra::npos;
    std::vector<std::vector<std::size_t>> lact(d, std::vector<std::size_t>(d));
    std::vector<std::vector<std::size_t>> ract(d, std::vector<std::size_t>(d));
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t t = 0; t < d; ++t) {
            Vec unit = A.zero();
            unit[t] = one;
            Vec lv = A.act_left(a, unit);
            Vec rv = A.act_right(unit, a);
            lact[a][t] = npos;
            ract[a][t] = npos;
            for (std::size_t s = 0; s < d; ++s) {
                if (!lv[s].is_zero()) lact[a][t] = s;
                if (!rv[s].is_zero()) ract[a][t] = s;
            }
        }
    }

    // Unknowns f_{b,t} (column b*d + t): the t-coordinate of f(basis_b).
    // One equation per (i, j, output coordinate).
    Matrix m(d * d * d, d * d, fs);
    Vec rhs = zero_vec(d * d * d, fs);
    auto row_of = [d](std::size_t i, std::size_t j, std::size_t t) {
        return (i * d + j) * d + t;
    };
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t t = 0; t < d; ++t) {
                if (lact[i][t] != npos)
                    m.add(row_of(i, j, lact[i][t]), j * d + t, one);
                if (ract[j][t] != npos)
                    m.add(row_of(i, j, ract[j][t]), i * d + t, one);
            }
            const std::size_t ij = A.mul_index(i, j);
            if (ij != npos)
                for (std::size_t t = 0; t < d; ++t)
                    m.add(row_of(i, j, t), ij * d + t, -one);
            const Vec& v = alpha.value(i, j);
            if (!v.empty())
                for (std::size_t t = 0; t < d; ++t)
                    if (!v[t].is_zero()) rhs[row_of(i, j, t)] = v[t];
        }
    }
    std::optional<Vec> x = m.solve(rhs);
    if (!x) return std::nullopt;
    LinearMap f(d);
    for (std::size_t b = 0; b < d; ++b) {
        f[b] = A.zero();
        for (std::size_t t = 0; t < d; ++t) f[b][t] = (*x)[b * d + t];
    }
    return f;
}

bool vanishes_on_idempotents(const Cocycle& alpha) {
    const TruncatedAlgebra& A = alpha.algebra();
    const std::size_t d = A.dim();
    for (std::size_t v = 0; v < A.quiver().vertex_count; ++v) {
        const std::size_t e = A.idempotent_index(v);
        for (std::size_t j = 0; j < d; ++j) {
            const Vec& l = alpha.value(e, j);
            const Vec& r = alpha.value(j, e);
            if (!l.empty() && !is_zero_vec(l)) return false;
            if (!r.empty() && !is_zero_vec(r)) return false;
        }
    }
    return true;
}

bool radical_image_contained(const Cocycle& alpha) {
    const TruncatedAlgebra& A = alpha.algebra();
    const std::size_t d = A.dim();
    const Scalar one = Scalar::one(A.field());
    Echelon span(A.field());
    for (std::size_t a : A.radical_power_basis(1)) {
        for (std::size_t t = 0; t < d; ++t) {
            Vec unit = A.zero();
            unit[t] = one;
            span.insert(A.act_left(a, unit));
            span.insert(A.act_right(unit, a));
        }
    }
    const std::vector<std::size_t> rad = A.radical_power_basis(1);
    for (std::size_t i : rad) {
        for (std::size_t j : rad) {
            const Vec& v = alpha.value(i, j);
            if (!v.empty() && !is_zero_vec(v) && !span.contains(v))
                return false;
        }
    }
    return true;
}

}  // namespace hochex
