#pragma once
// Independent reference implementations used only by the tests. They share
// nothing with the library beyond the path data type.

#include "pfh/lattice_path.hpp"
#include "pfh/rational.hpp"

#include <functional>
#include <vector>

namespace oracle {

using pfh::BigInt;
using pfh::Rational;

// Sign of (b - a) x (c - a).
BigInt cross(std::int64_t ax, std::int64_t ay, std::int64_t bx, std::int64_t by, std::int64_t cx, std::int64_t cy);

// -1 below the path, 0 on it, +1 above (for 0 <= x <= d), from segment tests.
int side(const pfh::LatticePath& path, std::int64_t x, std::int64_t y);

struct JCount {
    std::int64_t plus = 0;
    std::int64_t minus = 0;
};
// Scans the bounding box point by point.
JCount scan_j(const pfh::LatticePath& path);

// Lowest lattice point at or above the path in every column, the removed
// corner lifted by one, then Andrew's monotone chain over the whole range.
// Returns the hull vertices.
std::vector<pfh::Vertex> global_rounding_hull(const pfh::LatticePath& path, std::size_t corner);

// Coefficients of prod over slopes p/q in [0, N] (q <= d) of 1/(1 - x^q),
// with (1 + x^q)/(1 - x^q) for interior slopes when labeled; up to x^d.
std::vector<BigInt> shape_series(std::int64_t d, std::int64_t N, bool labeled);

// p - p^2/(2 q N): unit action for h = N (z+1)^2/4, worked out by hand.
Rational quadratic_unit_action(std::int64_t q, std::int64_t p, std::int64_t N);

// Composite Simpson with n (even) panels.
double simpson(const std::function<double(double)>& f, double a, double b, int n);

// Calabi invariant of the r^-4 twist truncated at 1/i, in closed form.
double truncated_inverse_quartic_calabi(int i);

} // namespace oracle
