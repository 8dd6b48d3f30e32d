#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <vector>

namespace pfh::gf2 {

using Vec = boost::dynamic_bitset<>;

/// Column-major matrix: cols[j] is column j, each of length `rows`.
struct Matrix {
    std::size_t rows = 0;
    std::vector<Vec> cols;

    std::size_t ncols() const { return cols.size(); }
    bool get(std::size_t r, std::size_t c) const { return cols[c][r]; }
    void set(std::size_t r, std::size_t c) { cols[c].set(r); }
    bool is_zero() const;
};

Matrix zeros(std::size_t rows, std::size_t cols);

/// A * B (A is m x n, B is n x p).
Matrix multiply(const Matrix& a, const Matrix& b);

std::size_t rank(const Matrix& m);

/// Basis of {x : M x = 0}, vectors of length ncols.
std::vector<Vec> kernel_basis(const Matrix& m);

/// Vectors reduced so that pivots (lowest set bit) are pairwise distinct.
/// `pivot_of[i]` is the lowest set bit of `basis[i]`.
struct Echelon {
    std::vector<Vec> basis;
    std::vector<std::size_t> pivot_of;
    std::vector<long> owner; // owner[pos] = basis index whose pivot is pos, or -1

    explicit Echelon(std::size_t length) : owner(length, -1) {}
    /// Reduces v against the basis; true if it was independent (and was added).
    bool insert(Vec v);
    /// Cancels v's leading (lowest) bit while it is some basis pivot.
    Vec reduce_leading(Vec v) const;
    /// Fully reduces v; zero iff v is in the span.
    Vec reduce(Vec v) const;
};

} // namespace pfh::gf2
