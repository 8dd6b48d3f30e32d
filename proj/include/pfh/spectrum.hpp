#pragma once

#include "pfh/scalar.hpp"
#include "pfh/spectral.hpp"
#include "pfh/twist_profile.hpp"

#include <string>
#include <vector>

namespace pfh {

/// Order-d action spectrum of H = h/2 inside [lo, hi]: sums of orbit actions
/// over period-d orbit collections, plus integers.
struct SpectrumWindow {
    std::int64_t d = 0;
    double lo = 0.0;
    double hi = 0.0;
    std::vector<Scalar> values; // sorted, distinct
    /// Smallest distance between neighbours (infinity with fewer than two values).
    double min_gap = 0.0;

    bool contains(const Scalar& v, double tolerance = tol::kCrossRoute) const;
};

SpectrumWindow spec_d(const TwistProfile& profile, std::int64_t d, double lo, double hi);

/// Every value of the table lies in the spectrum of its degree. Returns
/// the offending rows, empty when all are spectral.
std::vector<std::string> spectrality_check(const SpectralTable& table, const TwistProfile& profile);

} // namespace pfh
