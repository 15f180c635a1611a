#include "hochex/homology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hochex {

namespace {

bool term_range_ok(std::size_t term, std::size_t q, std::size_t n) {
    switch (term) {
        case 1: return q >= 1 && q <= n;
        case 2: return q >= n && q <= 2 * n - 1;
        case 3: return q >= n + 1 && q <= 2 * n;
        default: throw std::invalid_argument("slice term must be 1, 2 or 3");
    }
}

std::size_t term_split(std::size_t term, std::size_t q, std::size_t n) {
    switch (term) {
        case 1: return q - 1;
        case 2: return q - n;
        default: return q - n - 1;
    }
}

// Rotation of the designated start: left-rotating by k makes arrow k+1 the
// new first arrow.
std::vector<std::size_t> rotate_left(const std::vector<std::size_t>& a,
                                     std::size_t k) {
    std::vector<std::size_t> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out.push_back(a[(i + k) % a.size()]);
    return out;
}

std::map<std::vector<std::size_t>, std::size_t> index_of(
    const GradedSlice& s) {
    std::map<std::vector<std::size_t>, std::size_t> ix;
    for (std::size_t i = 0; i < s.cycles.size(); ++i)
        ix[s.cycles[i].arrows] = i;
    return ix;
}

}  // namespace

GradedSlice slice_basis(const TruncatedAlgebra& A, std::size_t term,
                        std::size_t q) {
    GradedSlice s;
    s.term = term;
    s.q = q;
    std::size_t n = A.truncation();
    if (!term_range_ok(term, q, n)) return s;  // empty outside valid range
    s.split = term_split(term, q, n);
    s.cycles = cycles(A.quiver(), q);
    return s;
}

Matrix d2_matrix(const TruncatedAlgebra& A, std::size_t q) {
    GradedSlice dom = slice_basis(A, 2, q);
    GradedSlice cod = slice_basis(A, 1, q);
    Matrix m(cod.size(), dom.size(), A.field());
    if (dom.size() == 0 || cod.size() == 0) return m;

    // Both slices nonempty only at q = n.  The j-th mark of a cycle
    // a_1..a_q rotates the sequence so the (split+j+1)-th arrow becomes the
    // final (right tensor factor) arrow.
    std::size_t n = A.truncation();
    auto ix = index_of(cod);
    for (std::size_t col = 0; col < dom.size(); ++col) {
        const auto& a = dom.cycles[col].arrows;
        for (std::size_t j = 0; j < n; ++j) {
            auto rotated = rotate_left(a, (dom.split + j + 1) % q);
            m.add(ix.at(rotated), col, Scalar::one(A.field()));
        }
    }
    return m;
}

Matrix d3_matrix(const TruncatedAlgebra& A, std::size_t q) {
    GradedSlice dom = slice_basis(A, 3, q);
    GradedSlice cod = slice_basis(A, 2, q);
    Matrix m(cod.size(), dom.size(), A.field());
    if (dom.size() == 0 || cod.size() == 0) return m;

    auto ix = index_of(cod);
    Scalar one = Scalar::one(A.field());
    for (std::size_t col = 0; col < dom.size(); ++col) {
        const auto& a = dom.cycles[col].arrows;
        m.add(ix.at(a), col, one);  // same start, split one later
        auto back = rotate_left(a, q - 1);  // last arrow moves to the front
        m.add(ix.at(back), col, -one);
    }
    return m;
}

std::size_t hh2_dimension(const TruncatedAlgebra& A, std::size_t q) {
    GradedSlice mid = slice_basis(A, 2, q);
    std::size_t ker = mid.size() - d2_matrix(A, q).rank();
    return ker - d3_matrix(A, q).rank();
}

std::size_t ker_scale_dim(unsigned long long m, const FieldSpec& fs) {
    if (fs.is_rational()) return m == 0 ? 1 : 0;
    return m % fs.characteristic == 0 ? 1 : 0;
}

std::size_t hh2_formula(const Quiver& quiver, std::size_t n,
                        std::size_t degree, const FieldSpec& fs) {
    if (degree < n || degree > 2 * n - 1) return 0;
    if (degree > n) {
        // One copy of K per rotation orbit of length-q cycles.
        auto cs = cycles(quiver, degree);
        return orbit_decomposition(quiver, cs).size();
    }
    // degree = n: each rotation orbit of basic r-cycles with r | n
    // contributes r - 1 plus the kernel of multiplication by n/r on K.
    std::size_t total = 0;
    for (std::size_t r = 1; r <= n; ++r) {
        if (n % r != 0) continue;
        auto cs = cycles(quiver, r);
        if (cs.empty()) continue;
        std::vector<Path> basic;
        for (const Path& c : cs)
            if (is_basic(quiver, c)) basic.push_back(c);
        if (basic.empty()) continue;
        std::size_t b_r = orbit_decomposition(quiver, basic).size();
        total += b_r * (r - 1 + ker_scale_dim(n / r, fs));
    }
    return total;
}

std::vector<Vec> dual_hh2_basis(const TruncatedAlgebra& A, std::size_t q) {
    std::vector<Vec> kernel = d3_matrix(A, q).transpose().kernel_basis();
    // The image of the dualized d2 inside the dual of the term-2 slice is
    // spanned by the rows of d2 (each row is a functional on that slice).
    Matrix d2 = d2_matrix(A, q);
    Echelon image(A.field());
    for (std::size_t r = 0; r < d2.rows(); ++r) {
        Vec row = zero_vec(d2.cols(), A.field());
        for (const auto& [c, v] : d2.row(r)) row[c] = v;
        image.insert(row);
    }
    std::vector<Vec> out;
    for (Vec& v : kernel)
        if (image.insert(v)) out.push_back(std::move(v));
    return out;
}

}  // namespace hochex
