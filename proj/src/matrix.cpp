#include "hochex/matrix.hpp"

#include <algorithm>

namespace hochex {

Vec zero_vec(std::size_t n, const FieldSpec& fs) {
    return Vec(n, Scalar::zero(fs));
}

bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(),
                       [](const Scalar& s) { return s.is_zero(); });
}

Vec add_vec(const Vec& a, const Vec& b) {
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec sub_vec(const Vec& a, const Vec& b) {
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec scale_vec(const Scalar& c, const Vec& v) {
    Vec r = v;
    for (auto& x : r) x *= c;
    return r;
}

void add_scaled(Vec& target, const Scalar& c, const Vec& v) {
    for (std::size_t i = 0; i < target.size(); ++i) target[i] += c * v[i];
}

Matrix::Matrix(std::size_t rows, std::size_t cols, const FieldSpec& fs)
    : rows_(rows), cols_(cols), fs_(fs), data_(rows) {}

void Matrix::add(std::size_t r, std::size_t c, const Scalar& v) {
    if (v.is_zero()) return;
    Row& row = data_[r];
    auto it = std::lower_bound(
        row.begin(), row.end(), c,
        [](const Entry& e, std::size_t col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        it->second += v;
        if (it->second.is_zero()) row.erase(it);
    } else {
        row.insert(it, {c, v});
    }
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) {
    Row& row = data_[r];
    auto it = std::lower_bound(
        row.begin(), row.end(), c,
        [](const Entry& e, std::size_t col) { return e.first < col; });
    if (it != row.end() && it->first == c) row.erase(it);
    if (!v.is_zero()) {
        it = std::lower_bound(
            row.begin(), row.end(), c,
            [](const Entry& e, std::size_t col) { return e.first < col; });
        row.insert(it, {c, v});
    }
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
    for (const Entry& e : data_[r])
        if (e.first == c) return e.second;
    return Scalar::zero(fs_);
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, fs_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (const Entry& e : data_[r]) t.data_[e.first].push_back({r, e.second});
    return t;  // rows visited in increasing r, so each row stays sorted
}

Matrix Matrix::multiply(const Matrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("matrix product dimension mismatch");
    Matrix out(rows_, rhs.cols_, fs_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Vec acc = zero_vec(rhs.cols_, fs_);
        for (const Entry& e : data_[r])
            for (const Entry& f : rhs.data_[e.first])
                acc[f.first] += e.second * f.second;
        for (std::size_t c = 0; c < rhs.cols_; ++c)
            if (!acc[c].is_zero()) out.data_[r].push_back({c, acc[c]});
    }
    return out;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const Row& r) { return r.empty(); });
}

Vec Matrix::apply(const Vec& x) const {
    if (x.size() != cols_)
        throw std::invalid_argument("matrix apply dimension mismatch");
    Vec out = zero_vec(rows_, fs_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (const Entry& e : data_[r]) out[r] += e.second * x[e.first];
    return out;
}

namespace {

using SparseRow = Matrix::Row;

SparseRow sub_scaled_sparse(const SparseRow& a, const Scalar& c,
                            const SparseRow& b, const FieldSpec& fs) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j >= b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i >= a.size() || b[j].first < a[i].first) {
            Scalar v = Scalar::zero(fs) - c * b[j].second;
            if (!v.is_zero()) out.push_back({b[j].first, v});
            ++j;
        } else {
            Scalar v = a[i].second - c * b[j].second;
            if (!v.is_zero()) out.push_back({a[i].first, v});
            ++i;
            ++j;
        }
    }
    return out;
}

// Row echelon elimination; pivot rows are normalized to leading 1 and stored
// ordered by pivot column.  Rows are processed in input order.
struct Eliminator {
    FieldSpec fs;
    // pivot column -> normalized row
    std::vector<std::pair<std::size_t, SparseRow>> pivots;

    explicit Eliminator(const FieldSpec& f) : fs(f) {}

    SparseRow reduce(SparseRow row) const {
        for (const auto& [pc, prow] : pivots) {
            if (row.empty()) break;
            if (row.front().first > pc) continue;
            // entries are sorted; look for pc among them
            auto it = std::lower_bound(
                row.begin(), row.end(), pc,
                [](const Matrix::Entry& e, std::size_t col) {
                    return e.first < col;
                });
            if (it == row.end() || it->first != pc) continue;
            row = sub_scaled_sparse(row, it->second, prow, fs);
        }
        return row;
    }

    bool insert(SparseRow row) {
        row = reduce(std::move(row));
        if (row.empty()) return false;
        Scalar lead = row.front().second;
        if (!lead.is_one()) {
            Scalar inv = lead.inverse();
            for (auto& e : row) e.second *= inv;
        }
        std::size_t pc = row.front().first;
        auto it = std::lower_bound(
            pivots.begin(), pivots.end(), pc,
            [](const auto& p, std::size_t col) { return p.first < col; });
        pivots.insert(it, {pc, std::move(row)});
        return true;
    }

    // Back-substitutes so every pivot column appears in exactly one row.
    void to_rref() {
        for (std::size_t k = pivots.size(); k-- > 0;) {
            const std::size_t pc = pivots[k].first;
            for (std::size_t j = 0; j < k; ++j) {
                auto& row = pivots[j].second;
                auto it = std::lower_bound(
                    row.begin(), row.end(), pc,
                    [](const Matrix::Entry& e, std::size_t col) {
                        return e.first < col;
                    });
                if (it == row.end() || it->first != pc) continue;
                row = sub_scaled_sparse(row, it->second, pivots[k].second, fs);
            }
        }
    }
};

}  // namespace

std::size_t Matrix::rank() const {
    Eliminator e(fs_);
    for (std::size_t r = 0; r < rows_; ++r) e.insert(data_[r]);
    return e.pivots.size();
}

std::vector<Vec> Matrix::kernel_basis() const {
    Eliminator e(fs_);
    for (std::size_t r = 0; r < rows_; ++r) e.insert(data_[r]);
    e.to_rref();

    std::vector<bool> is_pivot(cols_, false);
    for (const auto& [pc, row] : e.pivots) is_pivot[pc] = true;

    std::vector<Vec> basis;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (is_pivot[c]) continue;
        Vec v = zero_vec(cols_, fs_);
        v[c] = Scalar::one(fs_);
        for (const auto& [pc, row] : e.pivots) {
            auto it = std::lower_bound(
                row.begin(), row.end(), c,
                [](const Entry& en, std::size_t col) { return en.first < col; });
            if (it != row.end() && it->first == c) v[pc] = -it->second;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> Matrix::solve(const Vec& b) const {
    if (b.size() != rows_)
        throw std::invalid_argument("solve dimension mismatch");
    // Augmented elimination: the right-hand side rides along as column cols_.
    Eliminator e(fs_);
    for (std::size_t r = 0; r < rows_; ++r) {
        SparseRow row = data_[r];
        if (!b[r].is_zero()) row.push_back({cols_, b[r]});
        e.insert(std::move(row));
    }
    e.to_rref();

    Vec x = zero_vec(cols_, fs_);
    for (const auto& [pc, row] : e.pivots) {
        if (pc == cols_) return std::nullopt;  // 0 = 1 row: inconsistent
        // In RREF with free variables at 0, x[pivot] is the augmented entry.
        auto it = std::lower_bound(
            row.begin(), row.end(), cols_,
            [](const Entry& en, std::size_t col) { return en.first < col; });
        if (it != row.end() && it->first == cols_) {
            // Non-pivot columns of this row multiply free variables (all 0).
            x[pc] = it->second;
        }
    }
    return x;
}

Vec Echelon::reduce(const Vec& v) const {
    Vec r = v;
    for (const auto& [pc, row] : rows_) {
        if (r[pc].is_zero()) continue;
        Scalar c = r[pc];
        for (std::size_t i = 0; i < r.size(); ++i) r[i] -= c * row[i];
    }
    return r;
}

bool Echelon::insert(const Vec& v) {
    Vec r = reduce(v);
    std::size_t pc = r.size();
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (!r[i].is_zero()) {
            pc = i;
            break;
        }
    }
    if (pc == r.size()) return false;
    Scalar inv = r[pc].inverse();
    for (auto& x : r) x *= inv;
    auto it = std::lower_bound(
        rows_.begin(), rows_.end(), pc,
        [](const auto& p, std::size_t col) { return p.first < col; });
    rows_.insert(it, {pc, std::move(r)});
    return true;
}

std::size_t span_dim(const std::vector<Vec>& vectors, const FieldSpec& fs) {
    Echelon e(fs);
    for (const Vec& v : vectors) e.insert(v);
    return e.rank();
}

}  // namespace hochex
