#include "pfh/chain_complex.hpp"

#include "pfh/index_engine.hpp"
#include "pfh/shapes.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace pfh {


std::vector<Rounding> roundings(const LatticePath& path, std::int64_t hprime1)
{
    std::vector<Rounding> out;
    const auto& edges = path.edges();
    const std::size_t n = edges.size();
    const auto verts = path.vertices();
    const auto base = path.column_ceilings();

    for (std::size_t c = 0; c <= n; ++c) {
        int kappa = 0;
        if (c > 0)
            kappa += edges[c - 1].label == Label::H;
        if (c < n)
            kappa += edges[c].label == Label::H;
        if (kappa == 0)
            continue;

        // Window between the neighbouring vertices; the corner itself is removed.
        std::int64_t lo = c > 0 ? verts[c - 1].x : 0;
        std::int64_t hi = c < n ? verts[c + 1].x : path.degree();
        auto L = base;
        L[verts[c].x] += 1;
        auto hull = lower_hull(L, lo, hi);
        LatticePath local = path_from_vertices(hull);

        std::vector<Edge> fresh = local.edges();
        std::vector<Edge> left(edges.begin(), edges.begin() + (c > 0 ? c - 1 : 0));
        std::vector<Edge> right(edges.begin() + std::min(n, c + 1), edges.end());
        std::int64_t y0 = c > 0 ? path.start_y() : hull.front().y;

        auto emit = [&](const std::vector<Edge>& middle) {
            std::vector<Edge> all = left;
            all.insert(all.end(), middle.begin(), middle.end());
            all.insert(all.end(), right.begin(), right.end());
            out.push_back({LatticePath(y0, std::move(all)), c});
        };

        if (kappa == 1) {
            emit(fresh);
            continue;
        }
        for (std::size_t i = 0; i < fresh.size(); ++i) {
            const Edge& e = fresh[i];
            if (e.p <= 0 || e.p >= hprime1 * e.q)
                continue;
            auto labeled = fresh;
            labeled[i].label = Label::H;
            emit(labeled);
        }
    }
    return out;
}

// ---------------------------------------------------------------- complex

ChainComplex::ChainComplex(std::int64_t d, const TwistProfile& profile)
    : d_(d), N_(profile.integer_hprime1()), profile_(&profile)
{
    if (d < 1)
        throw std::invalid_argument("degree must be >= 1");
    ActionTable table(profile);
    for_each_shape(d, N_, true, [&](const LatticePath& p) {
        shapes_.push_back({p, index(p), table.path(p)});
    });
}

const GeneratorSet& ChainComplex::generators(std::int64_t k) const
{
    if (auto it = sets_.find(k); it != sets_.end())
        return it->second;
    GeneratorSet s;
    s.d = d_;
    s.k = k;
    const std::int64_t period = 2 * d_ + 2;
    for (const auto& sh : shapes_) {
        std::int64_t diff = k - sh.index0;
        if (diff % period != 0)
            continue;
        std::int64_t y = diff / period;
        LatticePath p = shift(sh.path, y);
        std::string key = serialize(p);
        s.generators.push_back({std::move(p), sh.action0 + Scalar::integer(y), std::move(key)});
    }
    std::sort(s.generators.begin(), s.generators.end(), [](const Generator& a, const Generator& b) {
        int c = compare(a.action, b.action, 0.0);
        if (c != 0)
            return c > 0;
        return a.key < b.key;
    });
    return sets_.emplace(k, std::move(s)).first->second;
}

const std::unordered_map<std::string, std::size_t>& ChainComplex::lookup(std::int64_t k) const
{
    if (auto it = lookup_.find(k); it != lookup_.end())
        return it->second;
    std::unordered_map<std::string, std::size_t> m;
    const auto& g = generators(k).generators;
    for (std::size_t i = 0; i < g.size(); ++i)
        m.emplace(g[i].key, i);
    return lookup_.emplace(k, std::move(m)).first->second;
}

DifferentialMatrix ChainComplex::differential(std::int64_t k) const
{
    return cached_differential(k);
}

const DifferentialMatrix& ChainComplex::cached_differential(std::int64_t k) const
{
    if (auto it = diffs_.find(k); it != diffs_.end())
        return *it->second;
    const auto& src = generators(k - 1).generators; // rows
    const auto& dst = generators(k).generators;     // columns
    const auto& where = lookup(k);
    auto dm = std::make_shared<DifferentialMatrix>();
    dm->k = k;
    dm->matrix = gf2::zeros(src.size(), dst.size());
    ActionTable table(*profile_);
    for (std::size_t r = 0; r < src.size(); ++r) {
        for (const auto& [alpha, corner] : roundings(src[r].path, N_)) {
            std::string key = serialize(alpha);
            auto it = where.find(key);
            if (it == where.end()) {
                auto bad = validate(alpha, Rational(N_));
                throw GradingMismatch(fmt::format(
                    "rounding corner {} of {} gives {} with index {} (expected {}){}", corner, src[r].key, key,
                    index(alpha), k, bad.empty() ? "" : "; invalid path: " + bad.front()));
            }
            const Generator& g = dst[it->second];
            if (compare(g.action, src[r].action, 0.0) < 0)
                throw InvariantViolation(fmt::format("rounding {} -> {} lowers the action ({} < {})", src[r].key,
                                                     key, g.action.str(), src[r].action.str()));
            dm->matrix.set(r, it->second);
        }
    }
    return *diffs_.emplace(k, std::move(dm)).first->second;
}

bool ChainComplex::square_zero(std::int64_t k) const
{
    const auto& a = cached_differential(k);     // C_k -> C_{k-1}
    const auto& b = cached_differential(k + 1); // C_{k+1} -> C_k
    return gf2::multiply(a.matrix, b.matrix).is_zero();
}

std::int64_t ChainComplex::homology_rank(std::int64_t k) const
{
    std::int64_t dim = static_cast<std::int64_t>(generators(k).generators.size());
    std::int64_t out_rank = static_cast<std::int64_t>(gf2::rank(cached_differential(k).matrix));
    std::int64_t in_rank = static_cast<std::int64_t>(gf2::rank(cached_differential(k + 1).matrix));
    return dim - out_rank - in_rank;
}

Scalar ChainComplex::min_max(std::int64_t k) const
{
    std::int64_t r = homology_rank(k);
    if (r != 1)
        throw NoClass(fmt::format("H_{} has rank {} in degree {}", k, r, d_));
    const auto& gens = generators(k).generators;

    // Boundaries live in C_k (columns of d_{k+1}); bit 0 is the highest action.
    const auto& in = cached_differential(k + 1).matrix;
    gf2::Echelon image(gens.size());
    for (const auto& col : in.cols)
        image.insert(col);

    for (const auto& z : gf2::kernel_basis(cached_differential(k).matrix)) {
        if (image.reduce(z).none())
            continue;
        // Cancelling the leading term against boundaries while possible gives
        // the representative with the lowest top action.
        gf2::Vec best = image.reduce_leading(z);
        return gens[best.find_first()].action;
    }
    throw NoClass(fmt::format("no cycle outside the boundaries at grading {}", k));
}

} // namespace pfh
