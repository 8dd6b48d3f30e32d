#include "pfh/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace pfh {

Rational make_rational(std::int64_t num, std::int64_t den)
{
    if (den == 0)
        throw std::invalid_argument("zero denominator");
    return Rational(BigInt(num), BigInt(den));
}

namespace {

BigInt parse_integer(std::string_view s)
{
    if (s.empty())
        throw std::invalid_argument("empty integer");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size())
        throw std::invalid_argument("bad integer: " + std::string(s));
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("bad integer: " + std::string(s));
    BigInt v(std::string(s[0] == '+' ? s.substr(1) : s));
    return v;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    text = trim(text);
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_integer(trim(text.substr(0, slash)));
        BigInt den = parse_integer(trim(text.substr(slash + 1)));
        if (den == 0)
            throw std::invalid_argument("zero denominator in " + std::string(text));
        return Rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string digits(text.substr(0, dot));
        std::string frac(text.substr(dot + 1));
        if (digits.empty() || digits == "-" || digits == "+")
            digits += "0";
        BigInt den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i)
            den *= 10;
        BigInt whole = parse_integer(digits);
        BigInt part = frac.empty() ? BigInt(0) : parse_integer(frac);
        bool negative = !text.empty() && text[0] == '-';
        BigInt num = whole * den + (negative ? -part : part);
        return Rational(num, den);
    }
    return Rational(parse_integer(text));
}

std::string to_string(const Rational& r)
{
    const BigInt& den = boost::multiprecision::denominator(r);
    if (den == 1)
        return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" + den.str();
}

double to_double(const Rational& r)
{
    return r.convert_to<double>();
}

BigInt floor(const Rational& r)
{
    const BigInt& num = boost::multiprecision::numerator(r);
    const BigInt& den = boost::multiprecision::denominator(r);
    BigInt q = num / den; // truncates toward zero
    if (num < 0 && q * den != num)
        q -= 1;
    return q;
}

BigInt ceil(const Rational& r)
{
    return -floor(-r);
}

bool is_integer(const Rational& r)
{
    return boost::multiprecision::denominator(r) == 1;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b)
{
    return -floor_div(-a, b);
}

} // namespace pfh
