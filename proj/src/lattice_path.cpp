#include "pfh/lattice_path.hpp"

#include "pfh/twist_profile.hpp"

#include <fmt/format.h>

#include <cctype>
#include <map>
#include <numeric>

namespace pfh {

LatticePath::LatticePath(std::int64_t start_y, std::vector<Edge> edges) : start_y_(start_y)
{
    edges_.reserve(edges.size());
    for (Edge e : edges) {
        if (e.q < 1)
            throw InvalidPath(fmt::format("edge ({},{}) has q < 1", e.q, e.p));
        if (e.m < 1)
            throw InvalidPath(fmt::format("edge ({},{}) has multiplicity {}", e.q, e.p, e.m));
        std::int64_t g = std::gcd(e.q, e.p);
        if (g > 1) {
            e.q /= g;
            e.p /= g;
            e.m *= g;
        }
        degree_ += e.m * e.q;
        rise_ += e.m * e.p;
        edges_.push_back(e);
    }
}

int LatticePath::h_count() const
{
    int n = 0;
    for (const auto& e : edges_)
        n += e.label == Label::H;
    return n;
}

std::int64_t LatticePath::total_multiplicity() const
{
    std::int64_t n = 0;
    for (const auto& e : edges_)
        n += e.m;
    return n;
}

std::vector<Vertex> LatticePath::vertices() const
{
    std::vector<Vertex> out{{0, start_y_}};
    for (const auto& e : edges_)
        out.push_back({out.back().x + e.m * e.q, out.back().y + e.m * e.p});
    return out;
}

std::vector<std::int64_t> LatticePath::column_ceilings() const
{
    std::vector<std::int64_t> out;
    out.reserve(degree_ + 1);
    std::int64_t y = start_y_;
    out.push_back(y);
    for (const auto& e : edges_) {
        std::int64_t run = e.m * e.q;
        for (std::int64_t t = 1; t <= run; ++t)
            out.push_back(y + ceil_div(t * e.p, e.q));
        y += e.m * e.p;
    }
    return out;
}

std::vector<Rational> LatticePath::column_heights() const
{
    std::vector<Rational> out;
    out.reserve(degree_ + 1);
    std::int64_t y = start_y_;
    out.push_back(Rational(y));
    for (const auto& e : edges_) {
        std::int64_t run = e.m * e.q;
        for (std::int64_t t = 1; t <= run; ++t)
            out.push_back(Rational(y) + make_rational(t * e.p, e.q));
        y += e.m * e.p;
    }
    return out;
}

std::vector<std::string> validate(const LatticePath& path, const Rational& max_slope)
{
    std::vector<std::string> out;
    if (path.edges().empty() || path.degree() <= 0)
        out.push_back("degree must be positive");
    const auto& es = path.edges();
    for (std::size_t i = 0; i < es.size(); ++i) {
        const Edge& e = es[i];
        Rational s = e.slope();
        std::string tag = fmt::format("edge {} ({},{})", i, e.q, e.p);
        if (s < 0)
            out.push_back(tag + ": negative slope");
        if (s > max_slope)
            out.push_back(tag + ": slope exceeds h'(1) = " + to_string(max_slope));
        if (e.label == Label::H && (s <= 0 || s >= max_slope))
            out.push_back(tag + ": H label on a pole slope");
        if (i > 0 && !(es[i - 1].slope() < s))
            out.push_back(tag + ": slopes not increasing");
    }
    return out;
}

std::vector<std::string> validate(const LatticePath& path, const TwistProfile& profile)
{
    Scalar top = profile.hprime1();
    if (top.is_exact())
        return validate(path, top.exact());
    return validate(path, Rational(profile.integer_hprime1()));
}

LatticePath shift(const LatticePath& path, std::int64_t k)
{
    return LatticePath(path.start_y() + k, path.edges());
}

std::string serialize(const LatticePath& path)
{
    std::string out = std::to_string(path.start_y());
    for (const auto& e : path.edges())
        out += fmt::format("; ({},{})x{}:{}", e.q, e.p, e.m, e.label == Label::H ? 'H' : 'E');
    return out;
}

namespace {

struct Cursor {
    std::string_view s;
    std::size_t i = 0;

    void skip()
    {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    }
    bool eat(char c)
    {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c)
    {
        if (!eat(c))
            throw InvalidPath(fmt::format("expected '{}' at offset {} in '{}'", c, i, s));
    }
    std::int64_t integer()
    {
        skip();
        std::size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+'))
            ++i;
        std::size_t digits = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            ++i;
        if (i == digits)
            throw InvalidPath(fmt::format("expected integer at offset {} in '{}'", start, s));
        return std::stoll(std::string(s.substr(start, i - start)));
    }
    bool done()
    {
        skip();
        return i >= s.size();
    }
};

} // namespace

LatticePath parse_path(std::string_view text)
{
    Cursor c{text};
    std::int64_t y = c.integer();
    std::vector<Edge> edges;
    while (c.eat(';')) {
        if (c.done())
            break;
        Edge e;
        c.expect('(');
        e.q = c.integer();
        c.expect(',');
        e.p = c.integer();
        c.expect(')');
        if (c.eat('x') || c.eat('*'))
            e.m = c.integer();
        if (c.eat(':')) {
            c.skip();
            char l = c.i < text.size() ? text[c.i++] : '?';
            if (l == 'H' || l == 'h')
                e.label = Label::H;
            else if (l == 'E' || l == 'e')
                e.label = Label::E;
            else
                throw InvalidPath(fmt::format("unknown label '{}' in '{}'", l, text));
        }
        edges.push_back(e);
    }
    if (!c.done())
        throw InvalidPath(fmt::format("trailing text at offset {} in '{}'", c.i, text));
    return LatticePath(y, std::move(edges));
}

LatticePath path_from_vertices(const std::vector<Vertex>& pts)
{
    if (pts.size() < 2)
        throw InvalidPath("need at least two vertices");
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        std::int64_t dx = pts[i].x - pts[i - 1].x;
        std::int64_t dy = pts[i].y - pts[i - 1].y;
        if (dx <= 0)
            throw InvalidPath("vertices must have increasing x");
        std::int64_t g = std::gcd(dx, dy);
        Edge e{dx / g, dy / g, g, Label::E};
        if (!edges.empty() && edges.back().q == e.q && edges.back().p == e.p)
            edges.back().m += e.m;
        else
            edges.push_back(e);
    }
    return LatticePath(pts.front().y, std::move(edges));
}

std::vector<Vertex> lower_hull(const std::vector<std::int64_t>& L, std::int64_t lo, std::int64_t hi)
{
    std::vector<Vertex> h;
    for (std::int64_t x = lo; x <= hi; ++x) {
        Vertex p{x, L[x]};
        while (h.size() >= 2) {
            const Vertex& a = h[h.size() - 2];
            const Vertex& b = h.back();
            // keep b only if it lies strictly below the segment a-p
            std::int64_t cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
            if (cross <= 0)
                h.pop_back();
            else
                break;
        }
        h.push_back(p);
    }
    return h;
}

// ------------------------------------------------------------------ orbits

Orbit parse_orbit(std::string_view text)
{
    if (text == "g-" || text == "gamma-")
        return {OrbitKind::SouthPole, 0, 1};
    if (text == "g+" || text == "gamma+")
        return {OrbitKind::NorthPole, 0, 1};
    if (text.size() < 2 || (text[0] != 'e' && text[0] != 'h'))
        throw InvalidOrbitSet("unknown orbit '" + std::string(text) + "'");
    Rational s = parse_rational(text.substr(1));
    Orbit o;
    o.kind = text[0] == 'e' ? OrbitKind::Elliptic : OrbitKind::Hyperbolic;
    o.p = static_cast<std::int64_t>(boost::multiprecision::numerator(s));
    o.q = static_cast<std::int64_t>(boost::multiprecision::denominator(s));
    return o;
}

std::string to_string(const Orbit& o)
{
    switch (o.kind) {
    case OrbitKind::SouthPole:
        return "g-";
    case OrbitKind::NorthPole:
        return "g+";
    case OrbitKind::Elliptic:
        return o.q == 1 ? fmt::format("e{}", o.p) : fmt::format("e{}/{}", o.p, o.q);
    case OrbitKind::Hyperbolic:
        return o.q == 1 ? fmt::format("h{}", o.p) : fmt::format("h{}/{}", o.p, o.q);
    }
    return "?";
}

LatticePath from_orbit_set(const std::vector<OrbitEntry>& orbits, std::int64_t shift, std::int64_t hprime1)
{
    struct Slot {
        std::int64_t q, p, m = 0;
        int h = 0;
    };
    std::map<Rational, Slot> slots;
    for (const auto& [o, m] : orbits) {
        if (m < 1)
            throw InvalidOrbitSet("orbit " + to_string(o) + " has multiplicity < 1");
        std::int64_t q = 1, p = 0;
        if (o.kind == OrbitKind::NorthPole) {
            p = hprime1;
        } else if (o.kind != OrbitKind::SouthPole) {
            if (o.q < 1)
                throw InvalidOrbitSet("orbit " + to_string(o) + " has q < 1");
            std::int64_t g = std::gcd(o.q, o.p);
            q = o.q / g;
            p = o.p / g;
            if (p <= 0 || p >= hprime1 * q)
                throw InvalidOrbitSet("orbit " + to_string(o) + " is not strictly between the poles");
        }
        if (o.kind == OrbitKind::Hyperbolic && m > 1)
            throw InvalidOrbitSet("hyperbolic orbit " + to_string(o) + " with multiplicity " + std::to_string(m));
        Slot& s = slots.try_emplace(make_rational(p, q), Slot{q, p}).first->second;
        s.m += m;
        if (o.kind == OrbitKind::Hyperbolic && ++s.h > 1)
            throw InvalidOrbitSet("two hyperbolic orbits at slope " + to_string(make_rational(p, q)));
    }
    std::vector<Edge> edges;
    for (const auto& [slope, s] : slots)
        edges.push_back({s.q, s.p, s.m, s.h ? Label::H : Label::E});
    return LatticePath(shift, std::move(edges));
}

std::vector<OrbitEntry> to_orbit_set(const LatticePath& path, std::int64_t hprime1)
{
    std::vector<OrbitEntry> out;
    for (const auto& e : path.edges()) {
        if (e.p == 0) {
            out.push_back({{OrbitKind::SouthPole, 0, 1}, e.m});
        } else if (e.q == 1 && e.p == hprime1) {
            out.push_back({{OrbitKind::NorthPole, 0, 1}, e.m});
        } else if (e.label == Label::H) {
            out.push_back({{OrbitKind::Hyperbolic, e.p, e.q}, 1});
            if (e.m > 1)
                out.push_back({{OrbitKind::Elliptic, e.p, e.q}, e.m - 1});
        } else {
            out.push_back({{OrbitKind::Elliptic, e.p, e.q}, e.m});
        }
    }
    return out;
}

} // namespace pfh
