#pragma once

#include "pfh/lattice_path.hpp"
#include "pfh/scalar.hpp"
#include "pfh/twist_profile.hpp"

#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace pfh {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

/// Omega = {-1 <= x <= 1, h(x) <= y <= top}; top defaults to h(1).
class DualRegion {
public:
    explicit DualRegion(const TwistProfile& profile, std::optional<double> top = std::nullopt);

    const TwistProfile& profile() const { return *profile_; }
    double top() const { return top_; }

    /// max of v . w over w in Omega.
    double dual_norm(Vec2 v) const;
    /// Dual norm of the region rotated a quarter turn clockwise.
    double rotated_dual_norm(Vec2 v) const;
    /// 2 top - I.
    double area() const;
    /// Length of the rotated boundary measured in this region's dual norm.
    double rotated_boundary_length() const;

private:
    const TwistProfile* profile_;
    double top_;
};

struct ClosedPolygon {
    std::vector<Vec2> vertices; // implicit closing edge
};

double length(const ClosedPolygon& poly, const DualRegion& region);
double area(const ClosedPolygon& poly);

/// Region under P down to height y with the closing vertical edge at x = d
/// and horizontal edge along y, rotated clockwise.
ClosedPolygon lambda_polygon(const LatticePath& path);
/// Region between P and the height y + dE/2, rotated clockwise.
ClosedPolygon lambda_e_polygon(const LatticePath& path, double E);

/// a(P) = integral over [0, d] of P(x) - y.
Rational area_above_start(const LatticePath& path);

/// The convex lattice path through the lower hull of (X, ceil((d/2) h(2X/d - 1))),
/// X = 0..d, all labels E.
LatticePath step1_lattice_path(std::int64_t d, const TwistProfile& profile);

/// The same construction with every column lowered by a common offset
/// s in [0, 1): one path per distinct value, s = 0 first. Their gradings
/// cover a full period, which the spectral lower bound exploits.
std::vector<LatticePath> step1_family(std::int64_t d, const TwistProfile& profile);

struct EpsilonInfeasible : std::runtime_error {
    EpsilonInfeasible(const std::string& what, double a, double b, double c)
        : std::runtime_error(what), dev_a(a), dev_b(b), dev_c(c) {}
    double dev_a, dev_b, dev_c;
};

struct Step1Result {
    LatticePath path;
    double dev_graph;  // sup |Q - h| after rescaling by 2/d
    double dev_length; // |l(Lambda) - 2(2h(1) - I)| after rescaling
    double dev_area;   // |area under Q - I|
};

Step1Result step1_measure(std::int64_t d, const TwistProfile& profile);
/// Throws EpsilonInfeasible when any deviation exceeds eps.
Step1Result step1_path(double eps, std::int64_t d, const TwistProfile& profile);

struct KRule {
    enum class Kind { MinusD, Step1, FixedResidue } kind = Kind::MinusD;
    std::int64_t offset = 0; // FixedResidue: k = -d + 2 offset

    static KRule parse(const std::string& text);
    std::string str() const;
};

struct ConvergenceRow {
    std::int64_t d = 0;
    std::int64_t k = 0;
    Scalar estimate;
    double error = 0.0;
    Scalar lo; // estimate scale
    Scalar hi;
    std::string method; // brute | bracket
};

/// Estimates c_{d,k}/d - k/(2(d^2+d)) of the Calabi invariant. Exact values
/// for d <= brute_cap (when h'(1) <= max_brute_slope), otherwise the lower
/// end of the bracket (an explicit path); lo/hi always come from the bracket.
std::vector<ConvergenceRow> convergence_table(const TwistProfile& profile, const std::vector<std::int64_t>& d_list,
                                              KRule rule, int brute_cap = 10, int max_brute_slope = 4);

struct IsoperimetricReport {
    double boundary_length = 0.0;
    double boundary_expected = 0.0;
    double boundary_rel_error = 0.0;
    std::size_t paths = 0;
    double worst_length_rel_error = 0.0;
    std::size_t isoperimetric_violations = 0;
    std::size_t step2_violations = 0;
    std::vector<std::string> notes;
};

/// Length identities and the isoperimetric inequality on `samples` random
/// paths of degree <= dmax (also on Lambda_E for a few E > h(1)).
IsoperimetricReport isoperimetric_report(const TwistProfile& profile, std::size_t samples, std::int64_t dmax,
                                         unsigned seed);

/// Uniform random labeled path of degree in [1, dmax] with start height in [-ymax, ymax].
LatticePath random_path(std::int64_t dmax, std::int64_t N, std::int64_t ymax, std::mt19937_64& rng);

} // namespace pfh
