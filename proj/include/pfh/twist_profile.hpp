#pragma once

#include "pfh/rational.hpp"
#include "pfh/scalar.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pfh {

struct SlopeOutOfRange : std::domain_error {
    using std::domain_error::domain_error;
};

struct DivergentCalabi : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// h'(1) has to be a positive integer before lattice paths make sense.
struct NonIntegralSlopeBound : std::domain_error {
    using std::domain_error::domain_error;
};

/// Rational coefficients, ascending powers of z.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);

    const std::vector<Rational>& coefficients() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    Rational operator()(const Rational& z) const;
    double operator()(double z) const;

    Polynomial derivative() const;
    Polynomial antiderivative() const; // constant term 0

    std::string str() const;

private:
    std::vector<Rational> c_;
};

/// Callable pieces of a numeric profile. `breakpoints` are interior points
/// where h or h' may fail to be smooth; quadrature splits there.
struct NumericData {
    std::function<double(double)> h;
    std::function<double(double)> hprime;
    std::vector<double> breakpoints;
};

/// The function h in H = h(z)/2 on the sphere, z in [-1, 1].
class TwistProfile {
public:
    enum class Kind { ExactPolynomial, Numeric };

    static TwistProfile polynomial(Polynomial h, std::string name = "polynomial");
    /// N(z+1)^2/4: h'(1) = N, exact and rationally invertible.
    static TwistProfile quadratic(int N = 2);
    static TwistProfile numeric(NumericData data, std::string name = "numeric");
    /// Cubic Hermite through samples (z, h, h'); z must start at -1 and end at 1.
    static TwistProfile tabulated(std::vector<double> z, std::vector<double> h,
                                  std::vector<double> hprime, std::string name = "table");

    Kind kind() const { return kind_; }
    bool is_exact() const { return kind_ == Kind::ExactPolynomial; }
    const std::string& name() const { return name_; }
    const Polynomial& poly() const;

    double h(double z) const;
    double hprime(double z) const;
    /// Exact when the profile is exact and z is exact.
    Scalar h_at(const Scalar& z) const;

    Scalar h1() const { return h1_; }
    Scalar hprime1() const { return hprime1_; }
    /// h'(1) as a positive integer; throws NonIntegralSlopeBound otherwise.
    int integer_hprime1() const;
    /// I = integral of h over [-1, 1].
    Scalar integral() const { return integral_; }
    const std::vector<double>& breakpoints() const { return breakpoints_; }

    /// Invariant violations. With strict=false, h' >= 0 and h'' >= 0 are
    /// accepted (flat pieces, kinks), which is what disc imports produce.
    std::vector<std::string> check(bool strict = true) const;

private:
    TwistProfile() = default;
    void finish();

    Kind kind_ = Kind::ExactPolynomial;
    std::string name_;
    Polynomial poly_;
    Polynomial dpoly_;
    std::shared_ptr<const NumericData> numeric_;
    std::vector<double> breakpoints_;
    Scalar h1_;
    Scalar hprime1_;
    Scalar integral_;
};

/// z in (-1, 1) with h'(z) = slope. Exact when h' is linear with rational
/// coefficients; otherwise monotone bisection to 1e-12.
Scalar z_of_slope(const TwistProfile& profile, const Rational& slope);
double z_of_slope(const TwistProfile& profile, double slope);

Scalar calabi(const TwistProfile& profile);

/// Radial disc twist (r, theta) -> (r, theta + 2 pi f(r)).
struct DiscTwist {
    std::function<double(double)> f;
    std::vector<double> breakpoints; // in r
    std::optional<int> truncation;
    std::string name;

    /// f_i(r) = f(max(r, 1/i)).
    DiscTwist truncated(int i) const;

    /// "zero", "linear:c" for c(1-r), "power:a" for r^-a.
    static DiscTwist parse(const std::string& spec);

    /// Non-increasing and vanishing at r = 1; sampled. Returns violations.
    std::vector<std::string> check() const;
};

struct DiscCalabi {
    double value;
    bool converged;
};

/// Cal(phi_f) = int_0^1 F(r) r dr with F(r) = int_r^1 s f(s) ds. Integrated in
/// dyadic shells towards r = 0; `converged` is false when the shells stop
/// shrinking.
DiscCalabi disc_calabi(const DiscTwist& twist);

/// h(z) = 2F(sqrt(1-z)) on [0,1], 0 on [-1,0]. Throws DivergentCalabi.
TwistProfile disc_to_sphere(const DiscTwist& twist);

} // namespace pfh
