#include "pfh/gf2.hpp"

#include <stdexcept>

namespace pfh::gf2 {

bool Matrix::is_zero() const
{
    for (const auto& c : cols)
        if (c.any())
            return false;
    return true;
}

Matrix zeros(std::size_t rows, std::size_t cols)
{
    Matrix m;
    m.rows = rows;
    m.cols.assign(cols, Vec(rows));
    return m;
}

Matrix multiply(const Matrix& a, const Matrix& b)
{
    if (a.ncols() != b.rows)
        throw std::invalid_argument("gf2::multiply: shape mismatch");
    Matrix out = zeros(a.rows, b.ncols());
    for (std::size_t j = 0; j < b.ncols(); ++j)
        for (auto k = b.cols[j].find_first(); k != Vec::npos; k = b.cols[j].find_next(k))
            out.cols[j] ^= a.cols[k];
    return out;
}

bool Echelon::insert(Vec v)
{
    v = reduce(std::move(v));
    if (v.none())
        return false;
    std::size_t p = v.find_first();
    owner[p] = static_cast<long>(basis.size());
    pivot_of.push_back(p);
    basis.push_back(std::move(v));
    return true;
}

Vec Echelon::reduce_leading(Vec v) const
{
    for (std::size_t p = v.find_first(); p != Vec::npos && owner[p] >= 0; p = v.find_first())
        v ^= basis[owner[p]];
    return v;
}

Vec Echelon::reduce(Vec v) const
{
    // Each basis vector has its pivot as lowest bit, so walking upward never
    // reintroduces a bit below the current position.
    for (std::size_t p = v.find_first(); p != Vec::npos;) {
        if (owner[p] >= 0) {
            v ^= basis[owner[p]];
            p = v.find_next(p);
        } else {
            p = v.find_next(p);
        }
    }
    return v;
}

std::size_t rank(const Matrix& m)
{
    Echelon e(m.rows);
    std::size_t r = 0;
    for (const auto& c : m.cols)
        r += e.insert(c);
    return r;
}

std::vector<Vec> kernel_basis(const Matrix& m)
{
    // Column reduction tracking combinations: a column that reduces to zero
    // yields a kernel vector.
    std::size_t n = m.ncols();
    std::vector<Vec> reduced;
    std::vector<Vec> combo;
    std::vector<long> owner(m.rows, -1);
    std::vector<Vec> out;
    for (std::size_t j = 0; j < n; ++j) {
        Vec v = m.cols[j];
        Vec c(n);
        c.set(j);
        for (std::size_t p = v.find_first(); p != Vec::npos;) {
            if (owner[p] >= 0) {
                v ^= reduced[owner[p]];
                c ^= combo[owner[p]];
            }
            p = v.find_next(p);
        }
        if (v.none()) {
            out.push_back(std::move(c));
        } else {
            owner[v.find_first()] = static_cast<long>(reduced.size());
            reduced.push_back(std::move(v));
            combo.push_back(std::move(c));
        }
    }
    return out;
}

} // namespace pfh::gf2
