#include "doctest.h"
#include "oracles.hpp"

#include "pfh/action_engine.hpp"
#include "pfh/chain_complex.hpp"
#include "pfh/errors.hpp"
#include "pfh/index_engine.hpp"
#include "pfh/shapes.hpp"
#include "pfh/spectral.hpp"

using namespace pfh;

namespace {

LatticePath unlabeled(const LatticePath& p)
{
    auto edges = p.edges();
    for (auto& e : edges)
        e.label = Label::E;
    return LatticePath(p.start_y(), edges);
}

} // namespace

TEST_SUITE("chain_complex")
{
    TEST_CASE("degree one generators")
    {
        auto q = TwistProfile::quadratic();
        ChainComplex cc(1, q);
        const auto& g = cc.generators(-1).generators;
        REQUIRE(g.size() == 2);
        std::set<std::string> keys{g[0].key, g[1].key};
        CHECK(keys.count(serialize(LatticePath(0, {{1, 0, 1, Label::E}}))));
        CHECK(keys.count(serialize(LatticePath(-1, {{1, 2, 1, Label::E}}))));
        CHECK(cc.generators(0).generators.empty());
        CHECK(cc.generators(1000).generators.empty());
    }

    TEST_CASE("roundings of the degree one H edge")
    {
        auto p = parse_path("0; (1,1)x1:H");
        auto r = roundings(p, 2);
        REQUIRE(r.size() == 2);
        for (const auto& x : r) {
            CHECK(x.path.h_count() == 0);
            CHECK(index(x.path) == index(p) + 1);
        }
        CHECK(r[0].corner == 0);
        CHECK(r[0].path == parse_path("1; (1,0)x1:E"));
        CHECK(r[1].path == parse_path("0; (1,2)x1:E"));
        CHECK(roundings(parse_path("0; (1,1)x1:E"), 2).empty());
    }

    TEST_CASE("two adjacent H edges keep one H among the new edges")
    {
        auto p = parse_path("0; (2,1)x1:H; (1,1)x1:H");
        auto r = roundings(p, 2);
        for (const auto& x : r)
            CHECK(x.path.h_count() == 1);
        // middle corner: one output per interior new edge
        std::size_t middle = std::count_if(r.begin(), r.end(), [](const Rounding& x) { return x.corner == 1; });
        auto hull = oracle::global_rounding_hull(p, 1);
        CHECK(middle == hull.size() - 1);
    }

    TEST_CASE("local roundings agree with a global hull")
    {
        for (std::int64_t d = 1; d <= 4; ++d)
            for (const auto& s : all_shapes(d, 2, true))
                for (std::int64_t y : {-2, 0, 1}) {
                    auto p = shift(s, y);
                    auto outs = roundings(p, 2);
                    for (const auto& x : outs) {
                        auto expect = path_from_vertices(oracle::global_rounding_hull(p, x.corner));
                        CHECK(unlabeled(x.path) == expect);
                        CHECK(x.path.h_count() == p.h_count() - 1);
                        CHECK(index(x.path) == index(p) + 1);
                    }
                }
    }

    TEST_CASE("d^2 = 0, ranks, and actions never drop")
    {
        auto q = TwistProfile::quadratic();
        for (std::int64_t d = 1; d <= 4; ++d) {
            ChainComplex cc(d, q);
            auto [lo, hi] = cc.default_window();
            for (auto k = lo; k <= hi; ++k) {
                CHECK(cc.square_zero(k));
                CHECK(cc.homology_rank(k) == ((k - d) % 2 == 0 ? 1 : 0));
            }
        }
    }

    TEST_CASE("the all-E sum is a cycle and never a boundary")
    {
        auto q = TwistProfile::quadratic();
        for (std::int64_t d = 1; d <= 4; ++d) {
            ChainComplex cc(d, q);
            for (std::int64_t k = -d; k <= d; k += 2) {
                const auto& gens = cc.generators(k).generators;
                gf2::Vec sigma(gens.size());
                for (std::size_t i = 0; i < gens.size(); ++i)
                    sigma[i] = gens[i].path.h_count() == 0;
                auto dk = cc.differential(k).matrix;
                gf2::Vec image(dk.rows);
                for (std::size_t c = 0; c < dk.ncols(); ++c)
                    if (sigma[c])
                        image ^= dk.cols[c];
                CHECK(image.none());
                auto in = cc.differential(k + 1).matrix;
                for (const auto& col : in.cols)
                    for (std::size_t i = 0; i < gens.size(); ++i)
                        if (col[i])
                            CHECK(gens[i].path.h_count() > 0); // roundings always land on H paths
            }
        }
    }

    TEST_CASE("min-max values")
    {
        auto q = TwistProfile::quadratic();
        ChainComplex one(1, q);
        CHECK(one.min_max(-1).exact() == Rational(0));
        CHECK(one.min_max(1).exact() == make_rational(3, 4));
        CHECK_THROWS_AS(one.min_max(0), NoClass);
        for (std::int64_t d = 2; d <= 3; ++d) {
            ChainComplex cc(d, q);
            for (std::int64_t k = -d - 1; k <= d + 1; ++k)
                if ((k - d) % 2 == 0)
                    CHECK(cc.min_max(k).exact() == c_dk_exact(d, k, q).exact());
        }
    }
}
