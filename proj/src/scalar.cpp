#include "pfh/scalar.hpp"

#include <fmt/format.h>

#include <cmath>
#include <stdexcept>

namespace pfh {

Scalar Scalar::numeric(double v)
{
    Scalar s;
    s.exact_.reset();
    s.approx_ = v;
    return s;
}

const Rational& Scalar::exact() const
{
    if (!exact_)
        throw std::logic_error("scalar is not exact");
    return *exact_;
}

Scalar& Scalar::operator+=(const Scalar& rhs)
{
    if (exact_ && rhs.exact_) {
        *exact_ += *rhs.exact_;
        approx_ = to_double(*exact_);
    } else {
        exact_.reset();
        approx_ += rhs.approx_;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs)
{
    return *this += -rhs;
}

Scalar& Scalar::operator*=(const Scalar& rhs)
{
    if (exact_ && rhs.exact_) {
        *exact_ *= *rhs.exact_;
        approx_ = to_double(*exact_);
    } else {
        exact_.reset();
        approx_ *= rhs.approx_;
    }
    return *this;
}

Scalar operator-(const Scalar& a)
{
    if (a.exact_)
        return Scalar(Rational(-*a.exact_));
    return Scalar::numeric(-a.approx_);
}

std::string Scalar::str() const
{
    if (exact_)
        return to_string(*exact_);
    return format_double(approx_);
}

int compare(const Scalar& a, const Scalar& b, double tolerance)
{
    if (a.is_exact() && b.is_exact()) {
        if (a.exact() < b.exact())
            return -1;
        return a.exact() > b.exact() ? 1 : 0;
    }
    double diff = a.value() - b.value();
    double scale = std::max({1.0, std::abs(a.value()), std::abs(b.value())});
    if (std::abs(diff) <= tolerance * scale)
        return 0;
    return diff < 0 ? -1 : 1;
}

bool approx_equal(const Scalar& a, const Scalar& b, double tolerance)
{
    return compare(a, b, tolerance) == 0;
}

Scalar max(const Scalar& a, const Scalar& b)
{
    return compare(a, b, 0.0) < 0 ? b : a;
}

std::string format_double(double v)
{
    if (v == 0.0)
        return "0";
    return fmt::format("{:.12g}", v);
}

} // namespace pfh
