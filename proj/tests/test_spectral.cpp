#include "doctest.h"

#include "pfh/action_engine.hpp"
#include "pfh/errors.hpp"
#include "pfh/index_engine.hpp"
#include "pfh/shapes.hpp"
#include "pfh/spectral.hpp"
#include "pfh/spectrum.hpp"

using namespace pfh;

namespace {

// Plain scan: every shape, every start height in a generous range.
Rational scan_max(std::int64_t d, std::int64_t k, const TwistProfile& prof)
{
    std::optional<Rational> best;
    for (const auto& s : all_shapes(d, prof.integer_hprime1(), true))
        for (std::int64_t y = -6; y <= 6; ++y) {
            auto p = shift(s, y);
            if (index(p) != k)
                continue;
            Rational a = path_action(p, prof).value.exact();
            if (!best || a > *best)
                best = a;
        }
    REQUIRE(best.has_value());
    return *best;
}

} // namespace

TEST_SUITE("spectral")
{
    TEST_CASE("degree one values")
    {
        auto q = TwistProfile::quadratic();
        CHECK(c_dk_exact(1, 1, q).exact() == make_rational(3, 4));
        CHECK(c_dk_exact(1, -1, q).exact() == Rational(0));
        CHECK(c_dk_exact(1, 3, q).exact() == Rational(1));
        CHECK(c_dk_exact(1, 5, q).exact() == make_rational(7, 4));
        CHECK_THROWS_AS(c_dk_exact(1, 0, q), EmptyGrading);
        CHECK_THROWS_AS(c_dk_exact(11, -11, q), std::invalid_argument);
    }

    TEST_CASE("enumeration matches a plain scan")
    {
        auto q = TwistProfile::quadratic();
        for (std::int64_t d = 1; d <= 4; ++d)
            for (std::int64_t k = -d; k <= d; k += 2)
                CHECK(c_dk_exact(d, k, q).exact() == scan_max(d, k, q));
    }

    TEST_CASE("laws")
    {
        auto q = TwistProfile::quadratic();
        for (std::int64_t d = 1; d <= 5; ++d) {
            SpectralSolver s(d, q);
            CHECK(shift_law_check(s, -d - 1, d + 1).ok());
            CHECK(monotonicity_check(s, -d - 1, d + 1).ok());
        }
    }

    TEST_CASE("brackets contain exact values")
    {
        auto q = TwistProfile::quadratic();
        for (std::int64_t d = 1; d <= 8; ++d)
            for (std::int64_t k : {-d, -d + 2, d}) {
                auto b = c_dk_bracket(d, k, q, true);
                REQUIRE(b.exact.has_value());
                CHECK(b.lo <= *b.exact);
                CHECK(*b.exact <= b.hi);
            }
        // widths in estimate units shrink
        auto w = [&](std::int64_t d) {
            auto b = c_dk_bracket(d, -d, q);
            return (calabi_estimate(b.hi, d, -d) - calabi_estimate(b.lo, d, -d)).value();
        };
        CHECK(w(200) < w(50));
        CHECK(w(50) < w(10));
    }

    TEST_CASE("estimate formula")
    {
        CHECK(calabi_estimate(Scalar(Rational(0)), 1, -1).exact() == make_rational(1, 4));
    }
}

TEST_SUITE("spectrum")
{
    TEST_CASE("degree one window")
    {
        auto q = TwistProfile::quadratic();
        auto w = spec_d(q, 1, -0.1, 1.1);
        for (auto v : {Rational(0), make_rational(3, 4), Rational(1)})
            CHECK(w.contains(Scalar(v)));
        CHECK(w.min_gap > 0);
        // integer shifts
        auto wide = spec_d(q, 2, -2, 3);
        for (const auto& v : wide.values)
            if (v.value() + 1 <= 3)
                CHECK(wide.contains(v + Scalar(Rational(1))));
        // a window narrower than the gap around a value
        auto one = spec_d(q, 1, 0.74, 0.76);
        CHECK(one.values.size() == 1);
    }

    TEST_CASE("spectrality and its negative control")
    {
        auto q = TwistProfile::quadratic();
        SpectralTable t{"quadratic", {}};
        for (std::int64_t d = 1; d <= 3; ++d)
            for (std::int64_t k = -d - 2; k <= d + 2; k += 2)
                t.rows.push_back({d, k, SpectralMethod::Brute, c_dk_exact(d, k, q), {}, {}});
        CHECK(t.rows.front().value->exact() == -Rational(1) + make_rational(3, 4)); // c_{1,-3} = c_{1,1} - 1
        CHECK(spectrality_check(t, q).empty());
        t.rows.front().value = *t.rows.front().value + Scalar(make_rational(1, 1000));
        CHECK(spectrality_check(t, q).size() == 1);
    }
}
