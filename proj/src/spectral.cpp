#include "pfh/spectral.hpp"

#include "pfh/asymptotics.hpp"
#include "pfh/index_engine.hpp"
#include "pfh/shapes.hpp"

#include <fmt/format.h>

namespace pfh {

ShapeCatalog::ShapeCatalog(std::int64_t d, const TwistProfile& profile) : d_(d)
{
    std::int64_t N = profile.integer_hprime1();
    ActionTable table(profile);
    for_each_shape(d, N, true, [&](const LatticePath& p) {
        IndexReport r = count_j(p);
        records_.push_back({p, r.j, r.index, table.path(p)});
    });
}

SpectralSolver::SpectralSolver(std::int64_t d, const TwistProfile& profile, int cap)
    : catalog_((d > cap || d < 1) ? throw std::invalid_argument(fmt::format(
                                        "degree {} outside the enumeration range 1..{}", d, cap))
                                  : d,
               profile)
{
}

SpectralValue SpectralSolver::value(std::int64_t k) const
{
    const std::int64_t d = catalog_.degree();
    const std::int64_t period = 2 * d + 2;
    std::optional<SpectralValue> best_e, best_any;
    for (const auto& r : catalog_.records()) {
        std::int64_t diff = k - r.index0;
        if (diff % period != 0)
            continue;
        std::int64_t y = diff / period;
        Scalar a = r.action0 + Scalar::integer(y);
        if (!best_any || compare(a, best_any->value, 0.0) > 0)
            best_any = SpectralValue{a, shift(r.path, y)};
        if (r.path.h_count() == 0 && (!best_e || compare(a, best_e->value, 0.0) > 0))
            best_e = SpectralValue{a, shift(r.path, y)};
    }
    if (!best_e)
        throw EmptyGrading(fmt::format("no all-E path of degree {} and index {}", d, k));
    if (!approx_equal(best_e->value, best_any->value, tol::kAction))
        throw InvariantViolation(fmt::format("c_{{{},{}}}: all-E max {} differs from labeled max {}", d, k,
                                             best_e->value.str(), best_any->value.str()));
    return *best_e;
}

std::vector<std::int64_t> SpectralSolver::gradings(std::int64_t lo, std::int64_t hi) const
{
    std::vector<std::int64_t> out;
    const std::int64_t d = catalog_.degree();
    for (std::int64_t k = lo; k <= hi; ++k)
        if (((k - d) % 2 + 2) % 2 == 0)
            out.push_back(k);
    return out;
}

Scalar c_dk_exact(std::int64_t d, std::int64_t k, const TwistProfile& profile, int cap)
{
    return SpectralSolver(d, profile, cap).value(k).value;
}

LawReport shift_law_check(const SpectralSolver& solver, std::int64_t lo, std::int64_t hi)
{
    LawReport rep;
    const std::int64_t d = solver.degree();
    for (std::int64_t k : solver.gradings(lo, hi)) {
        Scalar a = solver.value(k).value;
        Scalar b = solver.value(k + 2 * d + 2).value;
        ++rep.checked;
        if (!approx_equal(b, a + Scalar::integer(1), tol::kAction))
            rep.violations.push_back(fmt::format("c_{{{},{}}} = {} but c_{{{},{}}} = {}", d, k + 2 * d + 2, b.str(),
                                                 d, k, a.str()));
    }
    return rep;
}

LawReport monotonicity_check(const SpectralSolver& solver, std::int64_t lo, std::int64_t hi)
{
    LawReport rep;
    const std::int64_t d = solver.degree();
    for (std::int64_t k : solver.gradings(lo, hi)) {
        Scalar a = solver.value(k).value;
        Scalar b = solver.value(k + 2).value;
        ++rep.checked;
        if (compare(a, b, tol::kAction) > 0)
            rep.violations.push_back(
                fmt::format("c_{{{},{}}} = {} > c_{{{},{}}} = {}", d, k, a.str(), d, k + 2, b.str()));
    }
    return rep;
}

Bracket c_dk_bracket(std::int64_t d, std::int64_t k, const TwistProfile& profile, bool confirm, int cap)
{
    if (((k - d) % 2 + 2) % 2 != 0)
        throw EmptyGrading(fmt::format("grading {} has the wrong parity for degree {}", k, d));
    const std::int64_t period = 2 * d + 2;
    ActionTable table(profile);
    Bracket b;
    bool first = true;
    // Each candidate moves down into a grading <= k; c is monotone in k.
    for (const LatticePath& p : step1_family(d, profile)) {
        std::int64_t kp = index(p);
        std::int64_t t = floor_div(k - kp, period);
        LatticePath w = shift(p, t);
        Scalar a = table.path(w);
        if (first || compare(a, b.lo, 0.0) > 0) {
            b.witness = std::move(w);
            b.witness_grading = kp + t * period;
            b.lo = a;
            first = false;
        }
    }

    Scalar D = Scalar::integer(d);
    Scalar quarter_I = calabi(profile);
    b.hi = D * quarter_I + Scalar(make_rational(k + d, 2 * (d + 1)));
    b.slack = Scalar(make_rational(d, 2 * (d + 1)));

    if (confirm) {
        Scalar c = c_dk_exact(d, k, profile, cap);
        b.exact = c;
        if (compare(b.lo, c, tol::kAction) > 0 || compare(c, b.hi, tol::kAction) > 0)
            throw InvariantViolation(fmt::format("c_{{{},{}}} = {} outside bracket [{}, {}]", d, k, c.str(),
                                                 b.lo.str(), b.hi.str()));
    }
    return b;
}

Scalar calabi_estimate(const Scalar& c, std::int64_t d, std::int64_t k)
{
    return c * Scalar(make_rational(1, d)) - Scalar(make_rational(k, 2 * (d * d + d)));
}

std::string to_string(SpectralMethod m)
{
    switch (m) {
    case SpectralMethod::Brute:
        return "brute";
    case SpectralMethod::MinMax:
        return "minmax";
    case SpectralMethod::Bracket:
        return "bracket";
    }
    return "?";
}

} // namespace pfh
