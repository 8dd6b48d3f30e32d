#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace oracle {

BigInt cross(std::int64_t ax, std::int64_t ay, std::int64_t bx, std::int64_t by, std::int64_t cx, std::int64_t cy)
{
    return BigInt(bx - ax) * (cy - ay) - BigInt(by - ay) * (cx - ax);
}

int side(const pfh::LatticePath& path, std::int64_t x, std::int64_t y)
{
    auto v = path.vertices();
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (x < v[i].x || x > v[i + 1].x)
            continue;
        // segment goes left to right, so positive cross means the point is above
        BigInt c = cross(v[i].x, v[i].y, v[i + 1].x, v[i + 1].y, x, y);
        return c > 0 ? 1 : (c < 0 ? -1 : 0);
    }
    throw std::out_of_range("column outside the path");
}

JCount scan_j(const pfh::LatticePath& path)
{
    JCount j;
    std::int64_t lo = 0, hi = 0;
    for (auto v : path.vertices()) {
        lo = std::min(lo, v.y);
        hi = std::max(hi, v.y);
    }
    for (std::int64_t x = 0; x <= path.degree(); ++x)
        for (std::int64_t y = lo - 1; y <= hi + 1; ++y) {
            int s = side(path, x, y);
            if (y >= 0 && s < 0)
                ++j.plus; // strictly below P, on or above the axis
            if (y < 0 && s >= 0)
                ++j.minus; // on or above P, strictly below the axis
        }
    return j;
}

std::vector<pfh::Vertex> global_rounding_hull(const pfh::LatticePath& path, std::size_t corner)
{
    auto verts = path.vertices();
    std::int64_t lo = 0, hi = 0;
    for (auto v : verts) {
        lo = std::min(lo, v.y);
        hi = std::max(hi, v.y);
    }
    std::vector<pfh::Vertex> pts;
    for (std::int64_t x = 0; x <= path.degree(); ++x) {
        std::int64_t y = lo - 1;
        while (side(path, x, y) < 0)
            ++y;
        if (x == verts[corner].x && y == verts[corner].y)
            ++y;
        pts.push_back({x, y});
    }
    std::vector<pfh::Vertex> hull;
    for (auto p : pts) {
        while (hull.size() >= 2) {
            auto a = hull[hull.size() - 2], b = hull.back();
            if (cross(a.x, a.y, b.x, b.y, p.x, p.y) <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    return hull;
}

std::vector<BigInt> shape_series(std::int64_t d, std::int64_t N, bool labeled)
{
    std::vector<BigInt> s(d + 1, 0);
    s[0] = 1;
    auto times_geometric = [&](std::int64_t q) { // multiply by 1/(1 - x^q)
        for (std::int64_t n = q; n <= d; ++n)
            s[n] += s[n - q];
    };
    for (std::int64_t q = 1; q <= d; ++q)
        for (std::int64_t p = 0; p <= N * q; ++p) {
            if (std::gcd(p, q) != 1)
                continue;
            times_geometric(q);
            if (labeled && p > 0 && p < N * q)
                for (std::int64_t n = d; n >= q; --n) // multiply by 1 + x^q
                    s[n] += s[n - q];
        }
    return s;
}

Rational quadratic_unit_action(std::int64_t q, std::int64_t p, std::int64_t N)
{
    return Rational(p) - Rational(BigInt(p) * p, BigInt(2) * q * N);
}

double simpson(const std::function<double(double)>& f, double a, double b, int n)
{
    double h = (b - a) / n, s = f(a) + f(b);
    for (int i = 1; i < n; ++i)
        s += f(a + i * h) * (i % 2 ? 4 : 2);
    return s * h / 3;
}

double truncated_inverse_quartic_calabi(int i)
{
    double i2 = double(i) * i;
    // outer part: int_{1/i}^1 (r^-2 - 1)/2 r dr; inner disc: F(1/i) plus the constant-twist cap
    double outer = 0.5 * std::log(double(i)) - 0.25 * (1 - 1 / i2);
    double inner = (i2 - 1) / 2 / (2 * i2) + 0.125;
    return outer + inner;
}

} // namespace oracle
