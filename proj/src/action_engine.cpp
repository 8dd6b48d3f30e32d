#include "pfh/action_engine.hpp"

namespace pfh {

Scalar unit_action(std::int64_t q, std::int64_t p, const TwistProfile& profile)
{
    if (p == 0)
        return Scalar();
    Scalar top = profile.hprime1();
    Rational s = make_rational(p, q);
    bool at_top = top.is_exact() ? s == top.exact() : (q == 1 && p == profile.integer_hprime1());
    if (at_top) {
        Scalar h1 = profile.h1();
        return h1 * Scalar(make_rational(1, 2));
    }
    Scalar z = z_of_slope(profile, s);
    Scalar hz = profile.h_at(z);
    Scalar P = Scalar::integer(p), Q = Scalar::integer(q);
    Scalar twice = P * (Scalar::integer(1) - z) + Q * hz;
    return twice * Scalar(make_rational(1, 2));
}

Scalar edge_action(const Edge& edge, const TwistProfile& profile)
{
    return Scalar::integer(edge.m) * unit_action(edge.q, edge.p, profile);
}

ActionValue path_action(const LatticePath& path, const TwistProfile& profile)
{
    ActionValue a;
    a.start_term = Scalar::integer(path.start_y());
    a.value = a.start_term;
    for (const auto& e : path.edges()) {
        a.per_edge.push_back(edge_action(e, profile));
        a.value += a.per_edge.back();
    }
    return a;
}

Scalar ActionTable::unit(std::int64_t q, std::int64_t p) const
{
    {
        std::lock_guard lock(mutex_);
        if (auto it = cache_.find({q, p}); it != cache_.end())
            return it->second;
    }
    Scalar v = unit_action(q, p, *profile_);
    std::lock_guard lock(mutex_);
    cache_.emplace(std::make_pair(q, p), v);
    return v;
}

Scalar ActionTable::edge(const Edge& e) const
{
    return Scalar::integer(e.m) * unit(e.q, e.p);
}

Scalar ActionTable::path(const LatticePath& path) const
{
    Scalar v = Scalar::integer(path.start_y());
    for (const auto& e : path.edges())
        v += edge(e);
    return v;
}

} // namespace pfh
