#pragma once

#include "pfh/lattice_path.hpp"

#include <string>

namespace pfh {

struct IndexReport {
    std::int64_t j_plus = 0;
    std::int64_t j_minus = 0;
    std::int64_t j = 0;
    int h_count = 0;
    std::int64_t index = 0;
};

/// j_+ counts lattice points between the axis and the part of P above it,
/// excluding points on P; j_- counts points between P and the axis below
/// it, excluding points on the axis. Column sums of ceil(P(i)).
IndexReport count_j(const LatticePath& path);

/// I = 2j - d + h.
std::int64_t index(const LatticePath& path);

enum class PickStatus { Ok, Mismatch, Degenerate, CrossesAxis };

struct PickResult {
    PickStatus status = PickStatus::Ok;
    Rational twice_area;       // shoelace
    std::int64_t lattice_points = 0; // T, closed region
    std::int64_t boundary_points = 0;
    std::int64_t rhs = 0;      // 2T - B - 2
};

/// Pick's theorem on the region between P and the x-axis, for paths lying
/// entirely on one side of the axis. B = M + d + |y| + |w|.
PickResult pick_check(const LatticePath& path);

std::string to_string(PickStatus s);

} // namespace pfh
