// One line per acceptance criterion: PASS/FAIL, timing, detail.

#include "oracles.hpp"

#include "pfh/action_engine.hpp"
#include "pfh/asymptotics.hpp"
#include "pfh/chain_complex.hpp"
#include "pfh/demo_pipeline.hpp"
#include "pfh/errors.hpp"
#include "pfh/index_engine.hpp"
#include "pfh/spectral.hpp"
#include "pfh/spectrum.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <iostream>

using namespace pfh;

namespace {

struct Outcome {
    bool ok;
    std::string detail;
};

int failures = 0;

void criterion(int n, const char* name, double limit_s, const std::function<Outcome()>& body)
{
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = o.ok && s < limit_s;
    if (o.ok && !ok)
        o.detail += fmt::format("; too slow (limit {} s)", limit_s);
    failures += !ok;
    std::cout << fmt::format("[{}] {:2d} {:<28} {:9.4f} s  {}", ok ? "PASS" : "FAIL", n, name, s, o.detail)
              << std::endl;
}

} // namespace

int main()
{
    const auto quad = TwistProfile::quadratic();

    criterion(1, "index of the figure path", 1e-3, [] {
        auto p = LatticePath(-2, {{3, 1, 1, Label::H}, {3, 4, 1, Label::E}});
        auto r = count_j(p);
        bool ok = r.j_plus == 6 && r.j_minus == 5 && p.degree() == 6 && r.h_count == 1 && r.j == 1 && r.index == -3;
        return Outcome{ok, fmt::format("j+={} j-={} d={} h={} j={} I={}", r.j_plus, r.j_minus, p.degree(), r.h_count,
                                       r.j, r.index)};
    });

    criterion(2, "shift laws", 1.0, [&] {
        std::mt19937_64 rng(2024);
        ActionTable table(quad);
        int bad = 0;
        for (int i = 0; i < 1000; ++i) {
            auto p = random_path(8, 2, 5, rng);
            auto s = shift(p, 1);
            bad += index(s) - index(p) != 2 * p.degree() + 2;
            bad += (table.path(s) - table.path(p)).exact() != Rational(1);
        }
        return Outcome{bad == 0, fmt::format("1000 paths, {} violations", bad)};
    });

    criterion(3, "d^2 = 0, d <= 5", 120, [&] {
        int bad = 0, checked = 0;
        for (std::int64_t d = 1; d <= 5; ++d) {
            ChainComplex cc(d, quad);
            auto [lo, hi] = cc.default_window();
            for (auto k = lo; k <= hi; ++k, ++checked)
                bad += !cc.square_zero(k);
        }
        return Outcome{bad == 0, fmt::format("{} gradings, {} nonzero", checked, bad)};
    });

    criterion(4, "homology ranks, d <= 4", 120, [&] {
        int bad = 0, checked = 0;
        for (std::int64_t d = 1; d <= 4; ++d) {
            ChainComplex cc(d, quad);
            auto [lo, hi] = cc.default_window();
            for (auto k = lo; k <= hi; ++k, ++checked)
                bad += cc.homology_rank(k) != ((k - d) % 2 == 0 ? 1 : 0);
        }
        return Outcome{bad == 0, fmt::format("{} gradings, {} wrong", checked, bad)};
    });

    criterion(5, "min-max = max action, d <= 4", 300, [&] {
        int bad = 0, checked = 0;
        for (std::int64_t d = 1; d <= 4; ++d) {
            ChainComplex cc(d, quad);
            auto [lo, hi] = cc.default_window();
            for (auto k = lo; k <= hi; ++k) {
                ++checked;
                if ((k - d) % 2 != 0) {
                    bool none = false;
                    try {
                        c_dk_exact(d, k, quad);
                    } catch (const EmptyGrading&) {
                        none = true;
                    }
                    bad += !none || cc.homology_rank(k) != 0;
                    continue;
                }
                bad += cc.min_max(k).exact() != c_dk_exact(d, k, quad).exact();
            }
        }
        return Outcome{bad == 0, fmt::format("{} gradings, {} mismatches", checked, bad)};
    });

    criterion(6, "spectral laws, d <= 8", 300, [&] {
        std::size_t checked = 0, bad = 0;
        for (std::int64_t d = 1; d <= 8; ++d) {
            SpectralSolver s(d, quad);
            auto a = shift_law_check(s, -d - 1, d + 1);
            auto b = monotonicity_check(s, -d - 1, d + 1);
            checked += a.checked + b.checked;
            bad += a.violations.size() + b.violations.size();
        }
        return Outcome{bad == 0, fmt::format("{} checks, {} violations", checked, bad)};
    });

    criterion(7, "spectrality, d <= 4", 60, [&] {
        SpectralTable t{"quadratic", {}};
        for (std::int64_t d = 1; d <= 4; ++d) {
            SpectralSolver s(d, quad);
            for (auto k : s.gradings(-d - 1, d + 1))
                t.rows.push_back({d, k, SpectralMethod::Brute, s.value(k).value, {}, {}});
        }
        auto bad = spectrality_check(t, quad);
        return Outcome{bad.empty(), fmt::format("{} values, {} outside the spectrum", t.rows.size(), bad.size())};
    });

    criterion(8, "isoperimetric identities", 30, [&] {
        auto r = isoperimetric_report(quad, 100, 8, 1);
        bool ok = r.boundary_rel_error <= 1e-6 && r.worst_length_rel_error <= 1e-6 &&
                  r.isoperimetric_violations == 0 && r.step2_violations == 0;
        return Outcome{ok, fmt::format("boundary rel err {:.2e}, length rel err {:.2e}, {} inequality violations",
                                       r.boundary_rel_error, r.worst_length_rel_error, r.isoperimetric_violations)};
    });

    criterion(9, "Calabi convergence", 600, [&] {
        // Cal = I/4 by plain Simpson quadrature of h
        double cal = oracle::simpson([&](double z) { return quad.h(z); }, -1, 1, 1000) / 4;
        bool ok = std::abs(cal - 1.0 / 3) < 1e-10 && std::abs(calabi(quad).value() - cal) < 1e-10;
        std::vector<double> err(11);
        for (std::int64_t d = 1; d <= 10; ++d)
            err[d] = std::abs(calabi_estimate(c_dk_exact(d, -d, quad), d, -d).value() - cal);
        ok = ok && err[10] < err[2];
        auto b = c_dk_bracket(200, -200, quad);
        double lo = calabi_estimate(b.lo, 200, -200).value();
        double hi = calabi_estimate(b.hi, 200, -200).value();
        ok = ok && hi - lo < 0.05 && lo <= cal && cal <= hi;
        return Outcome{ok, fmt::format("Cal={:.12f} err(2)={:.4f} err(10)={:.4f} bracket(200)=[{:.6f}, {:.6f}]", cal,
                                       err[2], err[10], lo, hi)};
    });

    criterion(10, "infinite-twist dichotomy", 300, [&] {
        auto f = DiscTwist::parse("power:4");
        std::vector<double> cal;
        bool ok = true;
        for (int i : {2, 4, 8, 16, 32}) {
            cal.push_back(disc_calabi(f.truncated(i)).value);
            if (cal.size() > 1)
                ok = ok && cal.back() > cal[cal.size() - 2];
        }
        ok = ok && cal.back() > 3 * cal.front();
        auto lin = growth_report(DiscTwist::parse("linear:2"), {}, {200});
        const auto& row = lin.reports.at(0).rows.back();
        double target = *lin.base_calabi;
        ok = ok && std::abs(row.slope - target) <= row.hi - row.lo;
        return Outcome{ok, fmt::format("Cal_i = {:.4f} .. {:.4f} (x{:.2f}); linear: |{:.6f} - {:.6f}| <= {:.6f}",
                                       cal.front(), cal.back(), cal.back() / cal.front(), row.slope, target,
                                       row.hi - row.lo)};
    });

    std::cout << (failures ? fmt::format("{} criteria failed", failures) : std::string("all criteria passed"))
              << std::endl;
    return failures ? 1 : 0;
}
