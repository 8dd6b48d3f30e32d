#include "pfh/index_engine.hpp"

#include <cstdlib>

namespace pfh {

IndexReport count_j(const LatticePath& path)
{
    IndexReport r;
    for (std::int64_t c : path.column_ceilings()) {
        if (c > 0)
            r.j_plus += c;
        else if (c < 0)
            r.j_minus -= c; // c = ceil(P) < 0, so -c = floor(-P)
    }
    r.j = r.j_plus - r.j_minus;
    r.h_count = path.h_count();
    r.index = 2 * r.j - path.degree() + r.h_count;
    return r;
}

std::int64_t index(const LatticePath& path)
{
    return count_j(path).index;
}

PickResult pick_check(const LatticePath& path)
{
    PickResult r;
    auto verts = path.vertices();
    std::int64_t y = path.start_y();
    std::int64_t w = path.end_y();
    std::int64_t d = path.degree();

    bool above = true, below = true;
    for (const auto& v : verts) {
        above = above && v.y >= 0;
        below = below && v.y <= 0;
    }
    if (!above && !below) {
        r.status = PickStatus::CrossesAxis;
        return r;
    }

    // Region polygon: path, then down/up to the axis, back along the axis.
    std::vector<Vertex> poly = verts;
    poly.push_back({d, 0});
    poly.push_back({0, 0});
    BigInt twice = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const auto& a = poly[i];
        const auto& b = poly[(i + 1) % poly.size()];
        twice += BigInt(a.x) * b.y - BigInt(b.x) * a.y;
    }
    if (twice < 0)
        twice = -twice;
    r.twice_area = Rational(twice);
    if (twice == 0) {
        r.status = PickStatus::Degenerate;
        return r;
    }

    // Lattice points of the closed region, column by column.
    auto heights = path.column_heights();
    for (const auto& h : heights) {
        if (above)
            r.lattice_points += static_cast<std::int64_t>(floor(h)) + 1;
        else
            r.lattice_points += static_cast<std::int64_t>(floor(Rational(-h))) + 1;
    }
    r.boundary_points = path.total_multiplicity() + d + std::abs(y) + std::abs(w);
    r.rhs = 2 * r.lattice_points - r.boundary_points - 2;
    r.status = (r.twice_area == Rational(r.rhs)) ? PickStatus::Ok : PickStatus::Mismatch;
    return r;
}

std::string to_string(PickStatus s)
{
    switch (s) {
    case PickStatus::Ok:
        return "ok";
    case PickStatus::Mismatch:
        return "mismatch";
    case PickStatus::Degenerate:
        return "degenerate";
    case PickStatus::CrossesAxis:
        return "crosses-axis";
    }
    return "?";
}

} // namespace pfh
