#include "doctest.h"
#include "oracles.hpp"

#include "pfh/action_engine.hpp"
#include "pfh/asymptotics.hpp"
#include "pfh/index_engine.hpp"
#include "pfh/shapes.hpp"

using namespace pfh;

TEST_SUITE("index_engine")
{
    TEST_CASE("figure path")
    {
        auto p = parse_path("-2; (3,1)x1:H; (3,4)x1:E");
        auto r = count_j(p);
        CHECK(r.j_plus == 6);
        CHECK(r.j_minus == 5);
        CHECK(r.j == 1);
        CHECK(p.degree() == 6);
        CHECK(r.h_count == 1);
        CHECK(r.index == -3);
    }

    TEST_CASE("small paths")
    {
        auto axis = LatticePath(0, {{1, 0, 4, Label::E}});
        CHECK(count_j(axis).j_plus == 0);
        CHECK(count_j(axis).j_minus == 0);
        CHECK(index(LatticePath(0, {{1, 0, 1, Label::E}})) == -1);
        CHECK(index(LatticePath(0, {{1, 1, 1, Label::E}})) == 1);
    }

    TEST_CASE("column sums match a lattice scan")
    {
        for (std::int64_t d = 1; d <= 5; ++d)
            for (const auto& s : all_shapes(d, 3, false))
                for (std::int64_t y : {-7, -3, -1, 0, 2}) {
                    auto p = shift(s, y);
                    auto r = count_j(p);
                    auto o = oracle::scan_j(p);
                    CHECK(r.j_plus == o.plus);
                    CHECK(r.j_minus == o.minus);
                }
    }

    TEST_CASE("shift adds d+1 to j; parity of the index")
    {
        for (std::int64_t d = 1; d <= 6; ++d)
            for (const auto& p : all_shapes(d, 2, true)) {
                CHECK(count_j(shift(p, 1)).j - count_j(p).j == d + 1);
                CHECK(((index(p) - d - p.h_count()) % 2 + 2) % 2 == 0);
            }
    }

    TEST_CASE("Pick")
    {
        CHECK(pick_check(parse_path("-2; (3,1)x1:H; (3,4)x1:E")).status == PickStatus::CrossesAxis);
        CHECK(pick_check(LatticePath(0, {{1, 0, 3, Label::E}})).status == PickStatus::Degenerate);
        std::mt19937_64 rng(11);
        for (int i = 0; i < 50; ++i) {
            auto p = random_path(6, 3, 0, rng);
            p = shift(p, 1 + i % 3);
            auto r = pick_check(p);
            CHECK(r.status == PickStatus::Ok);
            // Region points counted independently: on or below P, on or above the axis.
            std::int64_t T = 0;
            for (std::int64_t x = 0; x <= p.degree(); ++x)
                for (std::int64_t y = 0; oracle::side(p, x, y) <= 0; ++y)
                    ++T;
            CHECK(r.lattice_points == T);
        }
        for (int i = 0; i < 20; ++i) {
            auto p = random_path(6, 0, 0, rng); // flat paths only
            CHECK(pick_check(shift(p, -2)).status == PickStatus::Ok);
        }
    }
}

TEST_SUITE("action_engine")
{
    TEST_CASE("unit actions")
    {
        auto q = TwistProfile::quadratic();
        CHECK(edge_action({1, 0, 3, Label::E}, q).exact() == Rational(0));
        CHECK(edge_action({1, 2, 1, Label::E}, q).exact() == Rational(1));
        CHECK(unit_action(1, 1, q).exact() == make_rational(3, 4));
        for (std::int64_t N : {2, 3, 4}) {
            auto prof = TwistProfile::quadratic(int(N));
            for (const auto& e : farey_slopes(7, N))
                CHECK(unit_action(e.q, e.p, prof).exact() == oracle::quadratic_unit_action(e.q, e.p, N));
        }
    }

    TEST_CASE("numeric profile agrees with exact one")
    {
        auto exact = TwistProfile::quadratic();
        NumericData nd{[](double z) { return (z + 1) * (z + 1) / 2; }, [](double z) { return z + 1; }, {}};
        auto num = TwistProfile::numeric(nd);
        for (const auto& e : farey_slopes(6, 2))
            CHECK(std::abs(unit_action(e.q, e.p, num).value() - unit_action(e.q, e.p, exact).value()) < 1e-9);
    }

    TEST_CASE("path actions")
    {
        auto q = TwistProfile::quadratic();
        CHECK(path_action(LatticePath(0, {{1, 0, 1, Label::E}}), q).value.exact() == Rational(0));
        CHECK(path_action(LatticePath(-1, {{1, 2, 1, Label::E}}), q).value.exact() == Rational(0));

        auto q4 = TwistProfile::quadratic(4);
        auto alpha = parse_path("-3; (3,1)x1:H; (3,2)x2:H; (3,4)x1:E; (1,2)x2:E");
        Rational expect(-3);
        for (const auto& e : alpha.edges())
            expect += e.m * oracle::quadratic_unit_action(e.q, e.p, 4);
        CHECK(path_action(alpha, q4).value.exact() == expect);
    }

    TEST_CASE("shift and label independence")
    {
        auto q = TwistProfile::quadratic();
        ActionTable table(q);
        std::mt19937_64 rng(3);
        for (int i = 0; i < 200; ++i) {
            auto p = random_path(8, 2, 3, rng);
            CHECK((table.path(shift(p, 1)) - table.path(p)).exact() == Rational(1));
            auto edges = p.edges();
            for (auto& e : edges)
                e.label = Label::E;
            CHECK(table.path(LatticePath(p.start_y(), edges)).exact() == table.path(p).exact());
        }
    }
}

TEST_SUITE("shapes")
{
    TEST_CASE("shape counts match the generating functions")
    {
        for (std::int64_t N : {1, 2, 3})
            for (std::int64_t d = 1; d <= 8; ++d) {
                CHECK(oracle::shape_series(d, N, false)[d] == BigInt(all_shapes(d, N, false).size()));
                CHECK(oracle::shape_series(d, N, true)[d] == BigInt(all_shapes(d, N, true).size()));
            }
        CHECK(all_shapes(5, 2, false).size() == 102);
        CHECK(all_shapes(5, 2, true).size() == 284);
        CHECK(all_shapes(10, 2, true).size() == 18085);
    }
}
