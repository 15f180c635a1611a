#include "hochex/algebra.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hochex {

TruncatedAlgebra TruncatedAlgebra::create(const Quiver& q, std::size_t n,
                                          const FieldSpec& fs) {
    if (n < 2) throw std::invalid_argument("truncation length must be >= 2");
    if (q.vertex_count == 0) throw std::invalid_argument("empty quiver");
    TruncatedAlgebra A;
    A.quiver_ = q;
    A.n_ = n;
    A.fs_ = fs;
    for (std::size_t len = 0; len < n; ++len)
        for (Path& p : paths_of_length(q, len)) A.basis_.push_back(std::move(p));

    A.targets_.resize(A.basis_.size());
    A.idempotent_.assign(q.vertex_count, npos);
    std::map<Path, std::size_t, decltype(&path_less)> index(&path_less);
    for (std::size_t i = 0; i < A.basis_.size(); ++i) {
        A.targets_[i] = path_target(q, A.basis_[i]);
        index[A.basis_[i]] = i;
        if (A.basis_[i].trivial()) A.idempotent_[A.basis_[i].source] = i;
    }

    const std::size_t d = A.basis_.size();
    A.mul_.assign(d, std::vector<std::size_t>(d, npos));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            if (A.targets_[i] != A.basis_[j].source) continue;
            if (A.basis_[i].length() + A.basis_[j].length() >= n) continue;
            Path prod;
            compose_paths(q, A.basis_[i], A.basis_[j], prod);
            A.mul_[i][j] = index.at(prod);
        }
    }
    return A;
}

std::optional<std::size_t> TruncatedAlgebra::path_index(const Path& p) const {
    auto it = std::lower_bound(basis_.begin(), basis_.end(), p, path_less);
    if (it != basis_.end() && *it == p)
        return static_cast<std::size_t>(it - basis_.begin());
    return std::nullopt;
}

std::size_t TruncatedAlgebra::idempotent_index(std::size_t v) const {
    return idempotent_.at(v);
}

std::size_t TruncatedAlgebra::mul_index(std::size_t i, std::size_t j) const {
    return mul_[i][j];
}

Vec TruncatedAlgebra::unit() const {
    Vec u = zero();
    for (std::size_t v = 0; v < quiver_.vertex_count; ++v)
        u[idempotent_[v]] = Scalar::one(fs_);
    return u;
}

Vec TruncatedAlgebra::basis_vec(std::size_t i) const {
    Vec v = zero();
    v[i] = Scalar::one(fs_);
    return v;
}

Vec TruncatedAlgebra::multiply(const Vec& a, const Vec& b) const {
    if (a.size() != dim() || b.size() != dim())
        throw std::invalid_argument("element size mismatch");
    Vec out = zero();
    for (std::size_t i = 0; i < dim(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (b[j].is_zero()) continue;
            std::size_t k = mul_[i][j];
            if (k != npos) out[k] += a[i] * b[j];
        }
    }
    return out;
}

Vec TruncatedAlgebra::act_left(std::size_t a, const Vec& dual) const {
    // a · p* = (p')* where p' a = p: strip a as a suffix of p.
    Vec out = zero();
    const Path& pa = basis_[a];
    for (std::size_t p = 0; p < dim(); ++p) {
        if (dual[p].is_zero()) continue;
        const Path& pp = basis_[p];
        if (pa.length() > pp.length()) continue;
        std::size_t off = pp.length() - pa.length();
        if (!std::equal(pa.arrows.begin(), pa.arrows.end(),
                        pp.arrows.begin() + off))
            continue;
        Path prefix{pp.source,
                    {pp.arrows.begin(), pp.arrows.begin() + off}};
        if (pa.trivial() && pa.source != targets_[p]) continue;
        auto idx = path_index(prefix);
        out[*idx] += dual[p];
    }
    return out;
}

Vec TruncatedAlgebra::act_right(const Vec& dual, std::size_t a) const {
    // p* · a = (p'')* where a p'' = p: strip a as a prefix of p.
    Vec out = zero();
    const Path& pa = basis_[a];
    for (std::size_t p = 0; p < dim(); ++p) {
        if (dual[p].is_zero()) continue;
        const Path& pp = basis_[p];
        if (pa.length() > pp.length()) continue;
        if (!std::equal(pa.arrows.begin(), pa.arrows.end(), pp.arrows.begin()))
            continue;
        if (pa.source != pp.source) continue;
        std::size_t tail_start = pa.length();
        Path suffix{path_target(quiver_, pa),
                    {pp.arrows.begin() + tail_start, pp.arrows.end()}};
        auto idx = path_index(suffix);
        out[*idx] += dual[p];
    }
    return out;
}

Vec TruncatedAlgebra::act_left_elem(const Vec& a, const Vec& dual) const {
    Vec out = zero();
    for (std::size_t i = 0; i < dim(); ++i) {
        if (a[i].is_zero()) continue;
        Vec part = act_left(i, dual);
        add_scaled(out, a[i], part);
    }
    return out;
}

Vec TruncatedAlgebra::act_right_elem(const Vec& dual, const Vec& a) const {
    Vec out = zero();
    for (std::size_t i = 0; i < dim(); ++i) {
        if (a[i].is_zero()) continue;
        Vec part = act_right(dual, i);
        add_scaled(out, a[i], part);
    }
    return out;
}

std::vector<std::size_t> TruncatedAlgebra::radical_power_basis(
    std::size_t k) const {
    if (k == 0) throw std::invalid_argument("radical power needs k >= 1");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < dim(); ++i)
        if (basis_[i].length() >= k) out.push_back(i);
    return out;
}

std::size_t TruncatedAlgebra::subspace_dim(
    const std::vector<Vec>& vectors) const {
    return span_dim(vectors, fs_);
}

std::vector<std::size_t> TruncatedAlgebra::dual_corner(std::size_t i,
                                                       std::size_t j) const {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < dim(); ++p)
        if (basis_[p].source == j && targets_[p] == i) out.push_back(p);
    return out;
}

}  // namespace hochex
