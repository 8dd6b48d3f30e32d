#pragma once

#include <functional>
#include <vector>

namespace pfh {

/// Adaptive Gauss-Kronrod (61 points) over [a, b], split at `cuts`.
/// Each piece is mapped onto [-1, 1] first: the library's stopping test
/// compares an unscaled error with a scaled tolerance, which never passes on
/// short intervals.
double integrate(const std::function<double(double)>& fn, double a, double b,
                 const std::vector<double>& cuts = {}, double rel = 1e-12);

} // namespace pfh
