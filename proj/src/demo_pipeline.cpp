#include "pfh/demo_pipeline.hpp"

#include "pfh/asymptotics.hpp"
#include "pfh/parallel.hpp"

#include <cmath>

namespace pfh {

GrowthStudy growth_report(const DiscTwist& f, const std::vector<int>& i_list, const std::vector<std::int64_t>& d_list,
                          int brute_cap, int max_brute_slope)
{
    GrowthStudy study;
    study.twist = f.name;
    study.twist_notes = f.check();
    DiscCalabi base = disc_calabi(f);
    study.divergent = !base.converged;
    if (base.converged)
        study.base_calabi = base.value;

    std::vector<int> cells = i_list.empty() ? std::vector<int>{0} : i_list;
    study.reports = parallel_map(cells, [&](int i) {
        DiscTwist t = i > 0 ? f.truncated(i) : f;
        TwistProfile profile = disc_to_sphere(t);
        GrowthReport rep;
        rep.i = i;
        rep.calabi = calabi(profile).value();
        // h = 0 identically (e.g. f_1 of a twist vanishing at r = 1): every
        // spectral value is the trivial one.
        if (std::abs(profile.h1().value()) < 1e-15 && std::abs(profile.hprime1().value()) < 1e-15) {
            for (auto d : d_list)
                rep.rows.push_back({d, -d, 0.0, 0.0, 0.0, "zero-profile"});
            return rep;
        }
        rep.hprime1 = profile.integer_hprime1();
        for (const auto& row : convergence_table(profile, d_list, KRule{}, brute_cap, max_brute_slope))
            rep.rows.push_back({row.d, row.k, row.estimate.value(), row.lo.value(), row.hi.value(), row.method});
        return rep;
    });
    return study;
}

} // namespace pfh
