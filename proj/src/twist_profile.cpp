#include "pfh/twist_profile.hpp"

#include "pfh/quadrature.hpp"

#include <boost/math/interpolators/cubic_hermite.hpp>
#include <boost/math/tools/roots.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>

namespace pfh {


// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients))
{
    while (c_.size() > 1 && c_.back() == 0)
        c_.pop_back();
    if (c_.empty())
        c_.push_back(Rational(0));
}

Rational Polynomial::operator()(const Rational& z) const
{
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

double Polynomial::operator()(double z) const
{
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * z + to_double(*it);
    return acc;
}

Polynomial Polynomial::derivative() const
{
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i)
        d.push_back(c_[i] * static_cast<int>(i));
    return Polynomial(std::move(d));
}

Polynomial Polynomial::antiderivative() const
{
    std::vector<Rational> a{Rational(0)};
    for (std::size_t i = 0; i < c_.size(); ++i)
        a.push_back(c_[i] / static_cast<int>(i + 1));
    return Polynomial(std::move(a));
}

std::string Polynomial::str() const
{
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0 && c_.size() > 1)
            continue;
        if (!out.empty())
            out += " + ";
        out += "(" + to_string(c_[i]) + ")";
        if (i == 1)
            out += "z";
        else if (i > 1)
            out += "z^" + std::to_string(i);
    }
    return out;
}

// -------------------------------------------------------------- TwistProfile

TwistProfile TwistProfile::polynomial(Polynomial h, std::string name)
{
    TwistProfile p;
    p.kind_ = Kind::ExactPolynomial;
    p.name_ = std::move(name);
    p.poly_ = std::move(h);
    p.dpoly_ = p.poly_.derivative();
    p.finish();
    return p;
}

TwistProfile TwistProfile::quadratic(int N)
{
    if (N <= 0)
        throw std::invalid_argument("quadratic profile needs N > 0");
    Rational q = make_rational(N, 4);
    auto p = polynomial(Polynomial({q, 2 * q, q}), N == 2 ? "quadratic" : fmt::format("quadratic:{}", N));
    return p;
}

TwistProfile TwistProfile::numeric(NumericData data, std::string name)
{
    if (!data.h || !data.hprime)
        throw std::invalid_argument("numeric profile needs h and h'");
    TwistProfile p;
    p.kind_ = Kind::Numeric;
    p.name_ = std::move(name);
    p.breakpoints_ = data.breakpoints;
    p.numeric_ = std::make_shared<const NumericData>(std::move(data));
    p.finish();
    return p;
}

TwistProfile TwistProfile::tabulated(std::vector<double> z, std::vector<double> h,
                                     std::vector<double> hprime, std::string name)
{
    if (z.size() < 2 || z.size() != h.size() || z.size() != hprime.size())
        throw std::invalid_argument("table needs matching columns with at least two rows");
    if (std::abs(z.front() + 1.0) > 1e-12 || std::abs(z.back() - 1.0) > 1e-12)
        throw std::invalid_argument("table must span z in [-1, 1]");
    for (std::size_t i = 1; i < z.size(); ++i)
        if (!(z[i] > z[i - 1]))
            throw std::invalid_argument("table z values must increase");
    z.front() = -1.0;
    z.back() = 1.0;
    using Spline = boost::math::interpolators::cubic_hermite<std::vector<double>>;
    auto spline = std::make_shared<Spline>(std::move(z), std::move(h), std::move(hprime));
    NumericData data;
    data.h = [spline](double x) { return (*spline)(std::clamp(x, -1.0, 1.0)); };
    data.hprime = [spline](double x) { return spline->prime(std::clamp(x, -1.0, 1.0)); };
    return numeric(std::move(data), std::move(name));
}

void TwistProfile::finish()
{
    if (is_exact()) {
        h1_ = Scalar(poly_(Rational(1)));
        hprime1_ = Scalar(dpoly_(Rational(1)));
        Polynomial anti = poly_.antiderivative();
        integral_ = Scalar(Rational(anti(Rational(1)) - anti(Rational(-1))));
        return;
    }
    h1_ = Scalar::numeric(numeric_->h(1.0));
    hprime1_ = Scalar::numeric(numeric_->hprime(1.0));
    integral_ = Scalar::numeric(integrate(numeric_->h, -1.0, 1.0, breakpoints_));
}

const Polynomial& TwistProfile::poly() const
{
    if (!is_exact())
        throw std::logic_error("profile has no polynomial form");
    return poly_;
}

double TwistProfile::h(double z) const
{
    return is_exact() ? poly_(z) : numeric_->h(z);
}

double TwistProfile::hprime(double z) const
{
    return is_exact() ? dpoly_(z) : numeric_->hprime(z);
}

Scalar TwistProfile::h_at(const Scalar& z) const
{
    if (is_exact() && z.is_exact())
        return Scalar(poly_(z.exact()));
    return Scalar::numeric(h(z.value()));
}

int TwistProfile::integer_hprime1() const
{
    double v = hprime1_.value();
    if (hprime1_.is_exact()) {
        if (!is_integer(hprime1_.exact()) || hprime1_.exact() <= 0)
            throw NonIntegralSlopeBound("h'(1) = " + hprime1_.str() + " is not a positive integer");
        return static_cast<int>(v);
    }
    double r = std::round(v);
    if (!(r >= 1.0) || std::abs(v - r) > 1e-9 * std::max(1.0, r) || r > 1e9)
        throw NonIntegralSlopeBound("h'(1) = " + hprime1_.str() + " is not a positive integer");
    return static_cast<int>(r);
}

std::vector<std::string> TwistProfile::check(bool strict) const
{
    std::vector<std::string> out;
    const double tol = is_exact() ? 0.0 : 1e-9;
    double scale = std::max(1.0, std::abs(hprime1_.value()));

    if (is_exact()) {
        if (poly_(Rational(-1)) != 0)
            out.push_back("h(-1) = " + to_string(poly_(Rational(-1))) + ", expected 0");
        if (dpoly_(Rational(-1)) != 0)
            out.push_back("h'(-1) = " + to_string(dpoly_(Rational(-1))) + ", expected 0");
    } else {
        if (std::abs(h(-1.0)) > 1e-9 * scale)
            out.push_back("h(-1) = " + format_double(h(-1.0)) + ", expected 0");
        if (std::abs(hprime(-1.0)) > 1e-9 * scale)
            out.push_back("h'(-1) = " + format_double(hprime(-1.0)) + ", expected 0");
    }

    const int samples = 400;
    Polynomial ddpoly = is_exact() ? dpoly_.derivative() : Polynomial();
    int bad_first = 0, bad_second = 0;
    double prev_slope = hprime(-1.0);
    for (int i = 1; i < samples; ++i) {
        double z = -1.0 + 2.0 * i / samples;
        double d1 = hprime(z);
        double d2 = is_exact() ? ddpoly(z) : (d1 - prev_slope) * samples / 2.0;
        prev_slope = d1;
        if (strict ? !(d1 > tol * scale) : d1 < -tol * scale)
            ++bad_first;
        if (strict ? !(d2 > tol * scale) : d2 < -1e-6 * scale)
            ++bad_second;
    }
    if (bad_first)
        out.push_back(fmt::format("h' {} at {} of {} interior samples", strict ? "<= 0" : "< 0",
                                  bad_first, samples - 1));
    if (bad_second)
        out.push_back(fmt::format("h'' {} at {} of {} interior samples", strict ? "<= 0" : "< 0",
                                  bad_second, samples - 1));
    try {
        (void)integer_hprime1();
    } catch (const NonIntegralSlopeBound& e) {
        out.push_back(e.what());
    }
    return out;
}

// ------------------------------------------------------------------ slopes

Scalar z_of_slope(const TwistProfile& profile, const Rational& slope)
{
    Scalar top = profile.hprime1();
    bool inside = slope > 0 && (top.is_exact() ? slope < top.exact() : to_double(slope) < top.value());
    if (!inside)
        throw SlopeOutOfRange("slope " + to_string(slope) + " outside (0, " + top.str() + ")");
    if (profile.is_exact()) {
        Polynomial d = profile.poly().derivative();
        if (d.degree() == 1) {
            const auto& c = d.coefficients();
            return Scalar(Rational((slope - c[0]) / c[1]));
        }
    }
    return Scalar::numeric(z_of_slope(profile, to_double(slope)));
}

double z_of_slope(const TwistProfile& profile, double slope)
{
    double top = profile.hprime1().value();
    if (!(slope > 0.0 && slope < top))
        throw SlopeOutOfRange(fmt::format("slope {} outside (0, {})", format_double(slope),
                                          format_double(top)));
    auto fn = [&](double z) { return profile.hprime(z) - slope; };
    auto done = [](double a, double b) { return std::abs(b - a) <= 1e-13; };
    std::uintmax_t iters = 200;
    auto [a, b] = boost::math::tools::bisect(fn, -1.0, 1.0, done, iters);
    return 0.5 * (a + b);
}

Scalar calabi(const TwistProfile& profile)
{
    Scalar I = profile.integral();
    if (I.is_exact())
        return Scalar(Rational(I.exact() / 4));
    return Scalar::numeric(I.value() / 4.0);
}

// --------------------------------------------------------------- disc twists

DiscTwist DiscTwist::truncated(int i) const
{
    if (i < 1)
        throw std::invalid_argument("truncation index must be >= 1");
    DiscTwist t;
    double cut = 1.0 / i;
    auto base = f;
    t.f = [base, cut](double r) { return base(std::max(r, cut)); };
    t.breakpoints = breakpoints;
    t.breakpoints.push_back(cut);
    t.truncation = i;
    t.name = fmt::format("{}@i={}", name, i);
    return t;
}

DiscTwist DiscTwist::parse(const std::string& spec)
{
    DiscTwist t;
    t.name = spec;
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    double arg = 0.0;
    if (colon != std::string::npos) {
        try {
            arg = to_double(parse_rational(spec.substr(colon + 1)));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad disc twist parameter in '" + spec + "'");
        }
    }
    if (kind == "zero") {
        t.f = [](double) { return 0.0; };
    } else if (kind == "linear" && colon != std::string::npos) {
        t.f = [arg](double r) { return arg * (1.0 - r); };
    } else if (kind == "power" && colon != std::string::npos) {
        t.f = [arg](double r) { return std::pow(r, -arg); };
    } else {
        throw std::invalid_argument("unknown disc twist '" + spec + "' (zero | linear:c | power:a)");
    }
    return t;
}

std::vector<std::string> DiscTwist::check() const
{
    std::vector<std::string> out;
    const int samples = 400;
    int rising = 0;
    double prev = f(1.0 / samples);
    for (int i = 2; i <= samples; ++i) {
        double cur = f(static_cast<double>(i) / samples);
        if (cur > prev + 1e-12 * std::max(1.0, std::abs(prev)))
            ++rising;
        prev = cur;
    }
    if (rising)
        out.push_back(fmt::format("f increases at {} sample steps", rising));
    if (std::abs(f(1.0)) > 1e-12)
        out.push_back("f(1) = " + format_double(f(1.0)) + ", not vanishing at the boundary");
    return out;
}

DiscCalabi disc_calabi(const DiscTwist& twist)
{
    // Fubini: int_0^1 int_r^1 s f(s) ds r dr = (1/2) int_0^1 s^3 f(s) ds.
    auto g = [&](double s) { return 0.5 * s * s * s * twist.f(s); };
    double total = 0.0;
    double hi = 1.0;
    double last = 0.0;
    for (int shell = 0; shell < 60; ++shell) {
        double lo = hi / 2;
        last = integrate(g, lo, hi, twist.breakpoints);
        total += last;
        hi = lo;
        if (shell >= 8 && std::abs(last) <= 1e-14 * std::max(1.0, std::abs(total)))
            return {total, true};
    }
    if (!std::isfinite(total))
        return {total, false};
    // Shell contributions still visible after 60 halvings: either the tail is
    // geometric (and tiny) or it is not summable.
    return {total, std::abs(last) <= 1e-12 * std::max(1.0, std::abs(total))};
}

TwistProfile disc_to_sphere(const DiscTwist& twist)
{
    DiscCalabi cal = disc_calabi(twist);
    if (!cal.converged)
        throw DivergentCalabi("Calabi integral of '" + twist.name + "' does not converge");

    auto f = twist.f;
    auto rcuts = twist.breakpoints;
    auto F = [f, rcuts](double r) {
        if (r >= 1.0)
            return 0.0;
        return integrate([&](double s) { return s * f(s); }, std::max(r, 0.0), 1.0, rcuts);
    };
    NumericData data;
    data.h = [F](double z) { return z <= 0.0 ? 0.0 : 2.0 * F(std::sqrt(std::max(0.0, 1.0 - z))); };
    data.hprime = [f](double z) {
        if (z <= 0.0)
            return 0.0;
        return f(std::sqrt(std::max(0.0, 1.0 - z)));
    };
    data.breakpoints.push_back(0.0);
    for (double r : twist.breakpoints)
        if (r > 0.0 && r < 1.0)
            data.breakpoints.push_back(1.0 - r * r);
    std::sort(data.breakpoints.begin(), data.breakpoints.end());
    return TwistProfile::numeric(std::move(data), "disc:" + twist.name);
}

} // namespace pfh
