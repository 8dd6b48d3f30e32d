#include "selftest.hpp"

#include "pfh/asymptotics.hpp"
#include "pfh/chain_complex.hpp"
#include "pfh/index_engine.hpp"
#include "pfh/shapes.hpp"
#include "pfh/spectral.hpp"
#include "pfh/spectrum.hpp"

#include <fmt/format.h>

#include <functional>
#include <random>
#include <string>

using namespace pfh;

namespace {

struct Runner {
    std::ostream& out;
    int failures = 0;

    void check(const std::string& name, const std::function<std::string()>& body)
    {
        std::string detail;
        bool ok = true;
        try {
            detail = body();
            if (detail.rfind("FAIL", 0) == 0) {
                ok = false;
                detail = detail.substr(detail.size() > 5 ? 5 : detail.size());
            }
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        failures += !ok;
        out << name << ',' << (ok ? "ok" : "FAIL") << ',' << detail << '\n';
    }
};

std::string fail(const std::string& why)
{
    return "FAIL " + why;
}

} // namespace

int run_selftest(const TwistProfile& profile, int homology_cap, int brute_cap, std::ostream& out)
{
    Runner r{out};
    const std::int64_t N = profile.integer_hprime1();
    ActionTable table(profile);

    r.check("profile", [&] {
        auto v = profile.check(profile.is_exact());
        return v.empty() ? std::string("invariants hold") : fail(v.front());
    });

    r.check("slope-inverse", [&] {
        double worst = 0.0;
        for (int i = 1; i < 50; ++i) {
            double s = N * i / 50.0;
            worst = std::max(worst, std::abs(profile.hprime(z_of_slope(profile, s)) - s));
        }
        return worst <= 1e-9 ? fmt::format("max residual {}", format_double(worst))
                             : fail(fmt::format("residual {}", format_double(worst)));
    });

    r.check("shift-laws", [&] {
        std::mt19937_64 rng(7);
        for (int i = 0; i < 300; ++i) {
            LatticePath p = random_path(6, N, 4, rng);
            LatticePath q = shift(p, 1);
            if (index(q) - index(p) != 2 * p.degree() + 2)
                return fail("index shift on " + serialize(p));
            if (!approx_equal(table.path(q), table.path(p) + Scalar::integer(1)))
                return fail("action shift on " + serialize(p));
        }
        return std::string("300 random paths");
    });

    r.check("pick", [&] {
        std::mt19937_64 rng(11);
        int checked = 0;
        for (int i = 0; i < 100; ++i) {
            LatticePath p = random_path(6, N, 0, rng);
            for (std::int64_t y : {std::int64_t(1), -p.rise() - 1}) {
                PickResult res = pick_check(shift(p, y));
                if (res.status == PickStatus::Mismatch)
                    return fail("on " + serialize(shift(p, y)));
                checked += res.status == PickStatus::Ok;
            }
        }
        return fmt::format("{} regions", checked);
    });

    for (int d = 1; d <= homology_cap; ++d) {
        r.check(fmt::format("complex-d{}", d), [&] {
            ChainComplex cc(d, profile);
            auto [lo, hi] = cc.default_window();
            for (auto k = lo; k <= hi; ++k) {
                if (!cc.square_zero(k))
                    return fail(fmt::format("d^2 != 0 at k = {}", k));
                std::int64_t want = ((k - d) % 2 == 0) ? 1 : 0;
                if (cc.homology_rank(k) != want)
                    return fail(fmt::format("rank {} at k = {}", cc.homology_rank(k), k));
                if (want == 1 && d <= std::min(brute_cap, 4)) {
                    Scalar mm = cc.min_max(k), ex = c_dk_exact(d, k, profile, brute_cap);
                    if (!approx_equal(mm, ex))
                        return fail(fmt::format("min-max {} vs max {} at k = {}", mm.str(), ex.str(), k));
                }
            }
            return fmt::format("gradings {}..{}", lo, hi);
        });
    }

    for (int d = 1; d <= std::min(brute_cap, 6); ++d) {
        r.check(fmt::format("spectral-laws-d{}", d), [&] {
            SpectralSolver s(d, profile, brute_cap);
            auto a = shift_law_check(s, -3 * d - 2, 3 * d + 2);
            auto b = monotonicity_check(s, -3 * d - 2, 3 * d + 2);
            if (!a.ok())
                return fail(a.violations.front());
            if (!b.ok())
                return fail(b.violations.front());
            SpectralTable t;
            for (auto k : s.gradings(-d - 1, d + 1))
                t.rows.push_back({d, k, SpectralMethod::Brute, s.value(k).value, {}, {}});
            auto v = spectrality_check(t, profile);
            if (!v.empty())
                return fail(v.front());
            return fmt::format("{} shift, {} monotone", a.checked, b.checked);
        });
    }

    r.check("isoperimetric", [&] {
        auto rep = isoperimetric_report(profile, 100, 8, 3);
        if (rep.boundary_rel_error > 1e-6)
            return fail(fmt::format("boundary length rel error {}", format_double(rep.boundary_rel_error)));
        if (rep.worst_length_rel_error > 1e-6)
            return fail(fmt::format("length identity rel error {}", format_double(rep.worst_length_rel_error)));
        if (rep.isoperimetric_violations || rep.step2_violations)
            return fail(fmt::format("{} isoperimetric, {} step-2 violations", rep.isoperimetric_violations,
                                    rep.step2_violations));
        return fmt::format("{} paths", rep.paths);
    });

    r.check("bracket", [&] {
        for (int d = 1; d <= std::min(brute_cap, 6); ++d)
            (void)c_dk_bracket(d, -d, profile, true, brute_cap);
        return std::string("brackets contain exact values");
    });

    return r.failures;
}
