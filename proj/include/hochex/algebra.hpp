#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hochex/matrix.hpp"
#include "hochex/quiver.hpp"
#include "hochex/scalar.hpp"

namespace hochex {

// Truncated quiver algebra: the path algebra modulo all paths of length >= n.
// The basis is every path of length 0..n-1, ordered by length then
// lexicographically on arrow indices.  Elements of the algebra and of its
// linear dual are both coefficient vectors over that basis (a dual vector's
// i-th coordinate multiplies the dual basis functional of basis path i).
class TruncatedAlgebra {
public:
    static TruncatedAlgebra create(const Quiver& q, std::size_t n,
                                   const FieldSpec& fs);

    const Quiver& quiver() const { return quiver_; }
    std::size_t truncation() const { return n_; }
    const FieldSpec& field() const { return fs_; }
    const std::vector<Path>& basis() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }

    std::optional<std::size_t> path_index(const Path& p) const;
    std::size_t source_of(std::size_t i) const { return basis_[i].source; }
    std::size_t target_of(std::size_t i) const { return targets_[i]; }
    // Index of the trivial path at vertex v.
    std::size_t idempotent_index(std::size_t v) const;

    // Product of basis paths i, j; npos when non-composable or truncated.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t mul_index(std::size_t i, std::size_t j) const;

    Vec zero() const { return zero_vec(dim(), fs_); }
    Vec unit() const;
    Vec basis_vec(std::size_t i) const;
    Vec multiply(const Vec& a, const Vec& b) const;

    // Dual bimodule actions, fixed by (a·f)(x) = f(xa) and (f·a)(x) = f(ax).
    // On the dual basis: a · p* = (p with the trailing copy of a removed)*,
    // and p* · a = (p with the leading copy of a removed)*, when the removal
    // is possible, else 0.
    Vec act_left(std::size_t path_idx, const Vec& dual) const;
    Vec act_right(const Vec& dual, std::size_t path_idx) const;
    Vec act_left_elem(const Vec& a, const Vec& dual) const;
    Vec act_right_elem(const Vec& dual, const Vec& a) const;

    // Basis-path indices of J(A)^k: paths of length in [k, n).
    std::vector<std::size_t> radical_power_basis(std::size_t k) const;

    // Exact dimension of the span of the given coefficient vectors.
    std::size_t subspace_dim(const std::vector<Vec>& vectors) const;

    // Indices Delta of basis duals p* lying in the corner e_i D(A) e_j,
    // i.e. paths p with s(p) = j and t(p) = i (the dual actions flip
    // direction).
    std::vector<std::size_t> dual_corner(std::size_t i, std::size_t j) const;

private:
    TruncatedAlgebra() = default;

    Quiver quiver_;
    std::size_t n_ = 0;
    FieldSpec fs_;
    std::vector<Path> basis_;
    std::vector<std::size_t> targets_;
    std::vector<std::size_t> idempotent_;       // vertex -> basis index
    std::vector<std::vector<std::size_t>> mul_;  // basis x basis -> index/npos
};

}  // namespace hochex
