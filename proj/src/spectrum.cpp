#include "pfh/spectrum.hpp"

#include "pfh/action_engine.hpp"
#include "pfh/shapes.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

namespace pfh {

bool SpectrumWindow::contains(const Scalar& v, double tolerance) const
{
    auto it = std::lower_bound(values.begin(), values.end(), v.value() - tolerance - 1e-300,
                               [](const Scalar& a, double x) { return a.value() < x; });
    for (; it != values.end() && it->value() <= v.value() + tolerance + 1e-300; ++it) {
        if (v.is_exact() && it->is_exact()) {
            if (v.exact() == it->exact())
                return true;
        } else if (approx_equal(*it, v, tolerance)) {
            return true;
        }
    }
    return false;
}

SpectrumWindow spec_d(const TwistProfile& profile, std::int64_t d, double lo, double hi)
{
    SpectrumWindow w;
    w.d = d;
    w.lo = lo;
    w.hi = hi;
    const std::int64_t N = profile.integer_hprime1();
    ActionTable table(profile);
    std::vector<Scalar> raw;
    for_each_shape(d, N, false, [&](const LatticePath& p) {
        Scalar base = table.path(p);
        auto n0 = static_cast<std::int64_t>(std::ceil(lo - base.value() - 1e-12));
        auto n1 = static_cast<std::int64_t>(std::floor(hi - base.value() + 1e-12));
        for (std::int64_t n = n0; n <= n1; ++n) {
            Scalar v = base + Scalar::integer(n);
            if (v.value() >= lo - 1e-12 && v.value() <= hi + 1e-12)
                raw.push_back(v);
        }
    });
    if (profile.is_exact()) {
        std::set<Rational> uniq;
        for (const auto& v : raw)
            if (v.is_exact())
                uniq.insert(v.exact());
        for (const auto& r : uniq)
            w.values.emplace_back(r);
        // irrational z (non-linear h') leaves some values inexact
        for (const auto& v : raw)
            if (!v.is_exact())
                w.values.push_back(v);
    } else {
        w.values = raw;
    }
    std::sort(w.values.begin(), w.values.end(),
              [](const Scalar& a, const Scalar& b) { return compare(a, b, 0.0) < 0; });
    std::vector<Scalar> merged;
    for (const auto& v : w.values)
        if (merged.empty() || !approx_equal(merged.back(), v, 1e-12))
            merged.push_back(v);
    w.values = std::move(merged);
    w.min_gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < w.values.size(); ++i)
        w.min_gap = std::min(w.min_gap, w.values[i].value() - w.values[i - 1].value());
    return w;
}

std::vector<std::string> spectrality_check(const SpectralTable& table, const TwistProfile& profile)
{
    std::vector<std::string> out;
    std::map<std::int64_t, std::vector<const SpectralRow*>> by_d;
    for (const auto& r : table.rows)
        if (r.value)
            by_d[r.d].push_back(&r);
    for (const auto& [d, rows] : by_d) {
        double lo = rows.front()->value->value(), hi = lo;
        for (const auto* r : rows) {
            lo = std::min(lo, r->value->value());
            hi = std::max(hi, r->value->value());
        }
        SpectrumWindow w = spec_d(profile, d, lo - 1.0, hi + 1.0);
        for (const auto* r : rows)
            if (!w.contains(*r->value))
                out.push_back(fmt::format("c_{{{},{}}} = {} is not in Spec_{}", d, r->k, r->value->str(), d));
    }
    return out;
}

} // namespace pfh
