#pragma once

#include "pfh/rational.hpp"
#include "pfh/tolerances.hpp"

#include <optional>
#include <string>

namespace pfh {

/// A real number that stays an exact rational as long as every input was exact.
///
/// Exact-polynomial profiles produce exact actions; numeric profiles produce
/// floating values. Mixing the two degrades to floating point.
class Scalar {
public:
    Scalar() : exact_(Rational(0)), approx_(0.0) {}
    Scalar(const Rational& r) : exact_(r), approx_(to_double(r)) {}

    static Scalar integer(std::int64_t v) { return Scalar(Rational(v)); }
    static Scalar numeric(double v);

    bool is_exact() const { return exact_.has_value(); }
    const Rational& exact() const;
    double value() const { return approx_; }

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator-(const Scalar& a);

    /// "p/q" for exact values, 12 significant digits otherwise.
    std::string str() const;

private:
    std::optional<Rational> exact_;
    double approx_;
};

/// Three-way comparison; exact when both sides are exact, otherwise values
/// within `tolerance` compare equal.
int compare(const Scalar& a, const Scalar& b, double tolerance = tol::kAction);
bool approx_equal(const Scalar& a, const Scalar& b, double tolerance = tol::kAction);
inline bool operator<(const Scalar& a, const Scalar& b) { return compare(a, b) < 0; }
inline bool operator<=(const Scalar& a, const Scalar& b) { return compare(a, b) <= 0; }
inline bool operator>(const Scalar& a, const Scalar& b) { return compare(a, b) > 0; }
inline bool operator>=(const Scalar& a, const Scalar& b) { return compare(a, b) >= 0; }

Scalar max(const Scalar& a, const Scalar& b);

std::string format_double(double v);

} // namespace pfh
