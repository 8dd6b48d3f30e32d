#pragma once

#include "pfh/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pfh {

class TwistProfile;

enum class Label { E, H };

/// m copies of the primitive vector (q, p); slope p/q.
struct Edge {
    std::int64_t q = 1;
    std::int64_t p = 0;
    std::int64_t m = 1;
    Label label = Label::E;

    Rational slope() const { return make_rational(p, q); }
    bool operator==(const Edge&) const = default;
};

struct Vertex {
    std::int64_t x = 0;
    std::int64_t y = 0;
    bool operator==(const Vertex&) const = default;
};

struct InvalidPath : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidOrbitSet : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Concave lattice path starting at (0, start_y), edges in increasing slope order.
class LatticePath {
public:
    LatticePath() = default;
    LatticePath(std::int64_t start_y, std::vector<Edge> edges);

    std::int64_t start_y() const { return start_y_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::int64_t degree() const { return degree_; }
    std::int64_t rise() const { return rise_; }
    std::int64_t end_y() const { return start_y_ + rise_; }
    int h_count() const;
    std::int64_t total_multiplicity() const;

    /// Corners: start, every slope change, end.
    std::vector<Vertex> vertices() const;
    /// ceil(P(x)) and P(x) at integer columns 0..d (P(x) as numerator over its edge's q).
    std::vector<std::int64_t> column_ceilings() const;
    std::vector<Rational> column_heights() const;

    bool operator==(const LatticePath&) const = default;

private:
    std::int64_t start_y_ = 0;
    std::vector<Edge> edges_;
    std::int64_t degree_ = 0;
    std::int64_t rise_ = 0;
};

/// Empty when the path is a valid generator for slopes in [0, max_slope].
std::vector<std::string> validate(const LatticePath& path, const Rational& max_slope);
std::vector<std::string> validate(const LatticePath& path, const TwistProfile& profile);

LatticePath shift(const LatticePath& path, std::int64_t k);

/// "y; (q,p)xm:L; ..." with slopes in lowest terms.
std::string serialize(const LatticePath& path);
LatticePath parse_path(std::string_view text);

/// Builds a path from consecutive lattice vertices (x strictly increasing).
/// Collinear runs are merged; all labels are E.
LatticePath path_from_vertices(const std::vector<Vertex>& pts);

/// Vertices of the lower convex hull of (x, L[x]) for x in [lo, hi].
std::vector<Vertex> lower_hull(const std::vector<std::int64_t>& L, std::int64_t lo, std::int64_t hi);

// ----------------------------------------------------------------- orbits

enum class OrbitKind { SouthPole, NorthPole, Elliptic, Hyperbolic };

/// gamma_-, gamma_+, e_{p/q}, h_{p/q}. p/q is kept as given (lowest terms
/// after construction) and ignored for the poles.
struct Orbit {
    OrbitKind kind = OrbitKind::SouthPole;
    std::int64_t p = 0;
    std::int64_t q = 1;

    bool operator==(const Orbit&) const = default;
};

struct OrbitEntry {
    Orbit orbit;
    std::int64_t multiplicity = 1;

    bool operator==(const OrbitEntry&) const = default;
};

/// Parses "g-", "g+", "e2/3", "h1/3" (slope may be an integer).
Orbit parse_orbit(std::string_view text);
std::string to_string(const Orbit& orbit);

/// Merges e and h multiplicities per slope; h multiplicities must be 1.
/// `hprime1` is the slope of the north pole edge.
LatticePath from_orbit_set(const std::vector<OrbitEntry>& orbits, std::int64_t shift, std::int64_t hprime1);
std::vector<OrbitEntry> to_orbit_set(const LatticePath& path, std::int64_t hprime1);

} // namespace pfh
