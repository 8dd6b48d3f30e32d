#include "pfh/asymptotics.hpp"

#include "pfh/action_engine.hpp"
#include "pfh/index_engine.hpp"
#include "pfh/parallel.hpp"
#include "pfh/quadrature.hpp"
#include "pfh/shapes.hpp"
#include "pfh/spectral.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <map>

namespace pfh {

// -------------------------------------------------------------- DualRegion

DualRegion::DualRegion(const TwistProfile& profile, std::optional<double> top)
    : profile_(&profile), top_(top.value_or(profile.h1().value()))
{
    if (top_ < profile.h1().value() - 1e-12)
        throw std::invalid_argument("region top must be at least h(1)");
}

double DualRegion::dual_norm(Vec2 v) const
{
    const double h1 = profile_->h1().value();
    double best = std::max({-v.x, -v.x + v.y * top_, v.x + v.y * top_, v.x + v.y * h1});
    if (v.y < 0.0) {
        // v.(x, h(x)) is concave in x; stationary where h'(x) = -v.x/v.y.
        double s = -v.x / v.y;
        double N = profile_->hprime1().value();
        if (s > 0.0 && s < N) {
            double z = z_of_slope(*profile_, s);
            best = std::max(best, v.x * z + v.y * profile_->h(z));
        }
    }
    return best;
}

double DualRegion::rotated_dual_norm(Vec2 v) const
{
    // Rotating the region clockwise by R turns w into R w, and v . R w = (R^T v) . w.
    return dual_norm({-v.y, v.x});
}

double DualRegion::area() const
{
    return 2.0 * top_ - profile_->integral().value();
}

double DualRegion::rotated_boundary_length() const
{
    // Boundary of Omega counterclockwise: the graph, up the right side, along
    // the top, down the left side. Each tangent rotated clockwise.
    auto arc = [&](double x) { return dual_norm({profile_->hprime(x), -1.0}); };
    double total = integrate(arc, -1.0, 1.0, profile_->breakpoints(), 1e-12);
    const double h1 = profile_->h1().value();
    total += dual_norm({top_ - h1, 0.0});
    total += dual_norm({0.0, 2.0});
    total += dual_norm({-top_, 0.0});
    return total;
}

// ---------------------------------------------------------------- polygons

double length(const ClosedPolygon& poly, const DualRegion& region)
{
    double total = 0.0;
    const auto& v = poly.vertices;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Vec2& a = v[i];
        const Vec2& b = v[(i + 1) % v.size()];
        total += region.dual_norm({b.x - a.x, b.y - a.y});
    }
    return total;
}

double area(const ClosedPolygon& poly)
{
    double twice = 0.0;
    const auto& v = poly.vertices;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Vec2& a = v[i];
        const Vec2& b = v[(i + 1) % v.size()];
        twice += a.x * b.y - b.x * a.y;
    }
    return std::abs(twice) / 2.0;
}

namespace {

Vec2 rotate_cw(double x, double y)
{
    return {y, -x};
}

} // namespace

ClosedPolygon lambda_polygon(const LatticePath& path)
{
    ClosedPolygon out;
    for (const auto& v : path.vertices())
        out.vertices.push_back(rotate_cw(double(v.x), double(v.y)));
    out.vertices.push_back(rotate_cw(double(path.degree()), double(path.start_y())));
    return out;
}

ClosedPolygon lambda_e_polygon(const LatticePath& path, double E)
{
    ClosedPolygon out;
    for (const auto& v : path.vertices())
        out.vertices.push_back(rotate_cw(double(v.x), double(v.y)));
    double d = double(path.degree());
    double top = double(path.start_y()) + d * E / 2.0;
    out.vertices.push_back(rotate_cw(d, top));
    out.vertices.push_back(rotate_cw(0.0, top));
    return out;
}

Rational area_above_start(const LatticePath& path)
{
    Rational a = 0;
    std::int64_t rise = 0;
    for (const auto& e : path.edges()) {
        // trapezoid of width m q between heights rise and rise + m p
        a += Rational(e.m * e.q) * (Rational(rise) + make_rational(e.m * e.p, 2));
        rise += e.m * e.p;
    }
    return a;
}

// ------------------------------------------------------------------ Step 1

namespace {

// Ceilings of g(X) = (d/2) h(2X/d - 1) and the gaps ceil(g) - g.
void step1_ceilings(std::int64_t d, const TwistProfile& profile, std::vector<std::int64_t>& L,
                    std::vector<double>& gap)
{
    L.assign(d + 1, 0);
    gap.assign(d + 1, 0.0);
    for (std::int64_t X = 0; X <= d; ++X) {
        if (profile.is_exact()) {
            Rational z = make_rational(2 * X, d) - 1;
            Rational g = make_rational(d, 2) * profile.poly()(z);
            L[X] = static_cast<std::int64_t>(ceil(g));
            gap[X] = to_double(Rational(Rational(L[X]) - g));
        } else {
            double g = 0.5 * double(d) * profile.h(2.0 * double(X) / double(d) - 1.0);
            L[X] = static_cast<std::int64_t>(std::ceil(g - 1e-9));
            gap[X] = std::max(0.0, double(L[X]) - g);
        }
    }
}

LatticePath hull_path(std::vector<std::int64_t> L, std::int64_t N)
{
    // Round-off in numeric profiles (and ties when lowering columns) can put a
    // step outside [0, N] by one; clamp so the hull stays a valid path.
    for (std::size_t X = 1; X < L.size(); ++X)
        L[X] = std::clamp(L[X], L[X - 1], L[X - 1] + N);
    LatticePath path = path_from_vertices(lower_hull(L, 0, static_cast<std::int64_t>(L.size()) - 1));
    if (auto bad = validate(path, Rational(N)); !bad.empty())
        throw InvariantViolation("step-1 path is not a valid generator: " + bad.front());
    return path;
}

} // namespace

LatticePath step1_lattice_path(std::int64_t d, const TwistProfile& profile)
{
    if (d < 1)
        throw std::invalid_argument("degree must be >= 1");
    std::vector<std::int64_t> L;
    std::vector<double> gap;
    step1_ceilings(d, profile, L, gap);
    L[0] = std::max<std::int64_t>(L[0], 0);
    return hull_path(L, profile.integer_hprime1());
}

std::vector<LatticePath> step1_family(std::int64_t d, const TwistProfile& profile)
{
    if (d < 1)
        throw std::invalid_argument("degree must be >= 1");
    const std::int64_t N = profile.integer_hprime1();
    std::vector<std::int64_t> L;
    std::vector<double> gap;
    step1_ceilings(d, profile, L, gap);

    // ceil(g - s) for s running from 0 to 1: columns drop one at a time,
    // the largest gap first.
    std::vector<std::size_t> order(L.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return gap[a] > gap[b]; });

    std::vector<LatticePath> out{step1_lattice_path(d, profile)};
    for (std::size_t X : order) {
        --L[X];
        out.push_back(hull_path(L, N));
        if (out.back() == out[out.size() - 2])
            out.pop_back();
    }
    return out;
}

Step1Result step1_measure(std::int64_t d, const TwistProfile& profile)
{
    Step1Result r{step1_lattice_path(d, profile), 0.0, 0.0, 0.0};
    const double scale = 2.0 / double(d);
    const double I = profile.integral().value();
    const double h1 = profile.h1().value();

    // (A) graph distance, sampled on a grid finer than the lattice.
    auto heights = r.path.column_heights();
    const int sub = 8;
    for (std::int64_t X = 0; X < d; ++X) {
        double y0 = to_double(heights[X]), y1 = to_double(heights[X + 1]);
        for (int s = 0; s <= sub; ++s) {
            double t = double(s) / sub;
            double Xs = double(X) + t;
            double z = scale * Xs - 1.0;
            double q = scale * (y0 + t * (y1 - y0));
            r.dev_graph = std::max(r.dev_graph, std::abs(q - profile.h(z)));
        }
    }
    // (B) rescaled length of Lambda.
    DualRegion omega(profile);
    double ell = scale * length(lambda_polygon(r.path), omega);
    r.dev_length = std::abs(ell - 2.0 * (2.0 * h1 - I));
    // (C) area under the rescaled path.
    double under = to_double(area_above_start(r.path)) + double(d) * double(r.path.start_y());
    r.dev_area = std::abs(scale * scale * under - I);
    return r;
}

Step1Result step1_path(double eps, std::int64_t d, const TwistProfile& profile)
{
    Step1Result r = step1_measure(d, profile);
    if (r.dev_graph > eps || r.dev_length > eps || r.dev_area > eps)
        throw EpsilonInfeasible(fmt::format("no step-1 path within eps = {} at d = {} (deviations {}, {}, {})",
                                            format_double(eps), d, format_double(r.dev_graph),
                                            format_double(r.dev_length), format_double(r.dev_area)),
                                r.dev_graph, r.dev_length, r.dev_area);
    return r;
}

// ------------------------------------------------------------ convergence

KRule KRule::parse(const std::string& text)
{
    KRule r;
    if (text == "k=-d" || text == "minus-d") {
        r.kind = Kind::MinusD;
    } else if (text == "step1") {
        r.kind = Kind::Step1;
    } else if (text.rfind("residue:", 0) == 0) {
        r.kind = Kind::FixedResidue;
        r.offset = std::stoll(text.substr(8));
    } else {
        throw std::invalid_argument("unknown k rule '" + text + "' (k=-d | step1 | residue:r)");
    }
    return r;
}

std::string KRule::str() const
{
    switch (kind) {
    case Kind::MinusD:
        return "k=-d";
    case Kind::Step1:
        return "step1";
    case Kind::FixedResidue:
        return fmt::format("residue:{}", offset);
    }
    return "?";
}

std::vector<ConvergenceRow> convergence_table(const TwistProfile& profile, const std::vector<std::int64_t>& d_list,
                                              KRule rule, int brute_cap, int max_brute_slope)
{
    const double cal = calabi(profile).value();
    const std::int64_t N = profile.integer_hprime1();
    auto row_for = [&](std::int64_t d) {
        ConvergenceRow row;
        row.d = d;
        switch (rule.kind) {
        case KRule::Kind::MinusD:
            row.k = -d;
            break;
        case KRule::Kind::Step1:
            row.k = index(step1_lattice_path(d, profile));
            break;
        case KRule::Kind::FixedResidue:
            row.k = -d + 2 * rule.offset;
            break;
        }
        Bracket b = c_dk_bracket(d, row.k, profile);
        row.lo = calabi_estimate(b.lo, d, row.k);
        row.hi = calabi_estimate(b.hi, d, row.k);
        if (d <= brute_cap && N <= max_brute_slope) {
            row.estimate = calabi_estimate(c_dk_exact(d, row.k, profile, brute_cap), d, row.k);
            row.method = "brute";
        } else {
            // The upper end is built from Cal itself, so only the witness
            // value is evidence about Cal.
            row.estimate = row.lo;
            row.method = "bracket";
        }
        row.error = std::abs(row.estimate.value() - cal);
        return row;
    };
    return parallel_map(d_list, row_for);
}

// --------------------------------------------------------- isoperimetric

LatticePath random_path(std::int64_t dmax, std::int64_t N, std::int64_t ymax, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::int64_t> pick_d(1, dmax);
    std::int64_t d = pick_d(rng);
    auto slopes = farey_slopes(d, N);
    std::map<std::size_t, std::int64_t> mult;
    std::int64_t budget = d;
    while (budget > 0) {
        std::vector<std::size_t> ok;
        for (std::size_t i = 0; i < slopes.size(); ++i)
            if (slopes[i].q <= budget)
                ok.push_back(i);
        std::size_t i = ok[std::uniform_int_distribution<std::size_t>(0, ok.size() - 1)(rng)];
        std::int64_t most = budget / slopes[i].q;
        std::int64_t m = std::uniform_int_distribution<std::int64_t>(1, most)(rng);
        mult[i] += m;
        budget -= m * slopes[i].q;
    }
    std::vector<Edge> edges;
    std::bernoulli_distribution coin(0.5);
    for (auto [i, m] : mult) {
        Edge e = slopes[i];
        e.m = m;
        bool interior = e.p > 0 && e.p < N * e.q;
        e.label = (interior && coin(rng)) ? Label::H : Label::E;
        edges.push_back(e);
    }
    std::int64_t y = std::uniform_int_distribution<std::int64_t>(-ymax, ymax)(rng);
    return LatticePath(y, std::move(edges));
}

IsoperimetricReport isoperimetric_report(const TwistProfile& profile, std::size_t samples, std::int64_t dmax,
                                         unsigned seed)
{
    IsoperimetricReport rep;
    DualRegion omega(profile);
    const double h1 = profile.h1().value();
    const double I = profile.integral().value();
    rep.boundary_expected = 2.0 * (2.0 * h1 - I);
    rep.boundary_length = omega.rotated_boundary_length();
    rep.boundary_rel_error = std::abs(rep.boundary_length - rep.boundary_expected) / rep.boundary_expected;

    const std::int64_t N = profile.integer_hprime1();
    std::mt19937_64 rng(seed);
    ActionTable table(profile);
    const Scalar quarter_I = calabi(profile);
    // Lambda_E closes along height y + dE/2, which must clear the end of
    // the path (dE/2 >= V), so E >= 2h'(1).
    const double base = std::max(h1, 2.0 * double(N));
    const std::vector<double> tops{base, base + 0.5, 2.0 * base + 1.0, 10.0 * base + 3.0};
    std::vector<DualRegion> omega_e;
    for (double E : tops)
        omega_e.emplace_back(profile, E);

    for (std::size_t s = 0; s < samples; ++s) {
        LatticePath p = random_path(dmax, N, 3, rng);
        ++rep.paths;
        const double d = double(p.degree());
        const double y = double(p.start_y());
        const double V = double(p.rise());
        Scalar A = table.path(p);

        ClosedPolygon lam = lambda_polygon(p);
        double ell = length(lam, omega);
        double expect = d * h1 + 2.0 * y + 2.0 * V - 2.0 * A.value();
        double rel = std::abs(ell - expect) / std::max(1.0, std::abs(expect));
        rep.worst_length_rel_error = std::max(rep.worst_length_rel_error, rel);
        if (ell * ell < 4.0 * omega.area() * area(lam) * (1.0 - 1e-12))
            ++rep.isoperimetric_violations;

        for (std::size_t t = 0; t < tops.size(); ++t) {
            ClosedPolygon lam_e = lambda_e_polygon(p, tops[t]);
            double ell_e = length(lam_e, omega_e[t]);
            double exp_e = 2.0 * d * tops[t] + 2.0 * y - 2.0 * A.value();
            rel = std::abs(ell_e - exp_e) / std::max(1.0, std::abs(exp_e));
            rep.worst_length_rel_error = std::max(rep.worst_length_rel_error, rel);
            if (ell_e * ell_e < 4.0 * omega_e[t].area() * area(lam_e) * (1.0 - 1e-12))
                ++rep.isoperimetric_violations;
        }

        // I/4 >= A/d - (a + d y)/d^2
        Scalar D = Scalar::integer(p.degree());
        Scalar rhs = A * Scalar(make_rational(1, p.degree())) -
                     (Scalar(area_above_start(p)) + D * Scalar::integer(p.start_y())) *
                         Scalar(make_rational(1, p.degree() * p.degree()));
        if (compare(quarter_I, rhs, tol::kAction) < 0)
            ++rep.step2_violations;
    }
    return rep;
}

} // namespace pfh
