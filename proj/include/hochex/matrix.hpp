#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hochex/scalar.hpp"

namespace hochex {

// Dense coefficient vector over a fixed basis.
using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n, const FieldSpec& fs);
bool is_zero_vec(const Vec& v);
Vec add_vec(const Vec& a, const Vec& b);
Vec sub_vec(const Vec& a, const Vec& b);
Vec scale_vec(const Scalar& c, const Vec& v);
void add_scaled(Vec& target, const Scalar& c, const Vec& v);

// Sparse exact matrix: rows are sorted (column, value) lists.  All results are
// exact over the matrix's field; pivoting always picks the first nonzero
// column so every derived object (rank profile, kernel, solution) is
// deterministic for a given input.
class Matrix {
public:
    using Entry = std::pair<std::size_t, Scalar>;
    using Row = std::vector<Entry>;

    Matrix(std::size_t rows, std::size_t cols, const FieldSpec& fs);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return fs_; }

    // Adds v to entry (r, c); drops the entry if the sum is zero.
    void add(std::size_t r, std::size_t c, const Scalar& v);
    void set(std::size_t r, std::size_t c, const Scalar& v);
    Scalar at(std::size_t r, std::size_t c) const;
    const Row& row(std::size_t r) const { return data_[r]; }

    Matrix transpose() const;
    Matrix multiply(const Matrix& rhs) const;
    bool is_zero() const;
    Vec apply(const Vec& x) const;

    std::size_t rank() const;
    // Canonical kernel basis from the reduced row echelon form: one vector per
    // free column in increasing column order, with a 1 at the free column.
    std::vector<Vec> kernel_basis() const;
    // Some x with m·x = b (free variables 0), or nullopt if inconsistent.
    std::optional<Vec> solve(const Vec& b) const;

private:
    std::size_t rows_, cols_;
    FieldSpec fs_;
    std::vector<Row> data_;
};

// Incremental row-echelon span tracker used for dimension counts, quotient
// filtering and span closures.  Deterministic: pivot is the first nonzero
// coordinate of the inserted vector after reduction.
class Echelon {
public:
    explicit Echelon(const FieldSpec& fs) : fs_(fs) {}

    // Reduces v against the stored rows; returns the residual.
    Vec reduce(const Vec& v) const;
    // Inserts v if independent of the span; returns true when rank grew.
    bool insert(const Vec& v);
    bool contains(const Vec& v) const { return is_zero_vec(reduce(v)); }
    std::size_t rank() const { return rows_.size(); }

private:
    FieldSpec fs_;
    // (pivot column, normalized row) sorted by pivot column.
    std::vector<std::pair<std::size_t, Vec>> rows_;
};

std::size_t span_dim(const std::vector<Vec>& vectors, const FieldSpec& fs);

}  // namespace hochex
