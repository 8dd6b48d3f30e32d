#include "doctest.h"

#include "pfh/asymptotics.hpp"
#include "pfh/index_engine.hpp"
#include "pfh/lattice_path.hpp"
#include "pfh/shapes.hpp"

using namespace pfh;

namespace {

std::vector<OrbitEntry> orbits(std::initializer_list<std::pair<const char*, std::int64_t>> items)
{
    std::vector<OrbitEntry> out;
    for (auto [name, m] : items)
        out.push_back({parse_orbit(name), m});
    return out;
}

} // namespace

TEST_SUITE("lattice_path")
{
    TEST_CASE("validation")
    {
        CHECK(validate(LatticePath(0, {{1, 0, 1, Label::E}}), Rational(2)).empty());
        CHECK_FALSE(validate(LatticePath(0, {{1, 1, 1, Label::E}, {1, 0, 1, Label::E}}), Rational(2)).empty());
        CHECK_FALSE(validate(LatticePath(0, {{1, 3, 1, Label::E}}), Rational(2)).empty());
        CHECK_THROWS_AS(LatticePath(0, {{0, 1, 1, Label::E}}), InvalidPath);
    }

    TEST_CASE("orbit sets from the figure")
    {
        auto a = from_orbit_set(orbits({{"h1/3", 1}, {"e2/3", 1}, {"h2/3", 1}, {"e4/3", 1}, {"e2", 2}}), -3, 4);
        CHECK(a.degree() == 14);
        CHECK(a.start_y() == -3);
        std::vector<Edge> expect{{3, 1, 1, Label::H}, {3, 2, 2, Label::H}, {3, 4, 1, Label::E}, {1, 2, 2, Label::E}};
        CHECK(a.edges() == expect);

        auto b = from_orbit_set(orbits({{"g-", 3}, {"e2/9", 1}, {"h2/3", 1}, {"g+", 1}}), 4, 4);
        CHECK(b.degree() == 16);
        CHECK(b.start_y() == 4);

        auto pole = from_orbit_set(orbits({{"g-", 5}}), 0, 2);
        CHECK(pole.edges() == std::vector<Edge>{{1, 0, 5, Label::E}});

        CHECK_THROWS_AS(from_orbit_set(orbits({{"h1/3", 2}}), 0, 2), InvalidOrbitSet);
    }

    TEST_CASE("orbit round trip and serialization round trip")
    {
        for (std::int64_t d = 1; d <= 6; ++d)
            for (const auto& p : all_shapes(d, 2, true)) {
                auto q = shift(p, d - 3);
                CHECK(from_orbit_set(to_orbit_set(q, 2), q.start_y(), 2) == q);
                CHECK(parse_path(serialize(q)) == q);
                std::int64_t dsum = 0, vsum = 0;
                for (const auto& e : q.edges()) {
                    dsum += e.m * e.q;
                    vsum += e.m * e.p;
                }
                CHECK(dsum == q.degree());
                CHECK(vsum == q.rise());
            }
    }

    TEST_CASE("shift")
    {
        LatticePath p(0, {{1, 0, 1, Label::E}});
        CHECK(shift(p, 1).start_y() == 1);
        CHECK(shift(p, 1).edges() == p.edges());
        std::mt19937_64 rng(7);
        for (int i = 0; i < 200; ++i) {
            auto q = random_path(8, 3, 4, rng);
            CHECK(shift(shift(q, 5), -5) == q);
            CHECK(index(shift(q, 1)) - index(q) == 2 * q.degree() + 2);
        }
    }

    TEST_CASE("parsing errors")
    {
        CHECK_THROWS(parse_path("nonsense"));
        CHECK_THROWS(parse_path("0; (1,1)x1:Q"));
        CHECK(parse_path("0; (2,2)x1:E").edges() == std::vector<Edge>{{1, 1, 2, Label::E}});
    }
}
