#pragma once

#include "pfh/scalar.hpp"
#include "pfh/twist_profile.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pfh {

struct GrowthRow {
    std::int64_t d = 0;
    std::int64_t k = 0;
    double slope = 0.0; // estimate of c_{d,k}/d - k/(2(d^2+d)): exact value or bracket lower end
    double lo = 0.0;
    double hi = 0.0;
    std::string method;
};

struct GrowthReport {
    int i = 0; // truncation index, 0 for the untruncated twist
    double calabi = 0.0;
    std::int64_t hprime1 = 0;
    std::vector<GrowthRow> rows;
};

struct GrowthStudy {
    std::string twist;
    bool divergent = false;          // Calabi of the untruncated f
    std::optional<double> base_calabi; // when it converges
    std::vector<std::string> twist_notes;
    std::vector<GrowthReport> reports;
};

/// For each truncation f_i the Calabi invariant and c_{d,-d} estimates over
/// d_list. An empty i_list studies f itself (requires a finite Calabi).
GrowthStudy growth_report(const DiscTwist& f, const std::vector<int>& i_list, const std::vector<std::int64_t>& d_list,
                          int brute_cap = 10, int max_brute_slope = 4);

} // namespace pfh
