#include "pfh/profile_config.hpp"

#include "json.hpp"
#include <fmt/format.h>

#include <cmath>
#include <fstream>
#include <sstream>

namespace pfh {

namespace {

using nlohmann::json;

Rational json_rational(const json& v)
{
    if (v.is_string())
        return parse_rational(v.get<std::string>());
    if (v.is_number_integer())
        return Rational(v.get<std::int64_t>());
    if (v.is_number())
        return parse_rational(fmt::format("{:.17g}", v.get<double>()));
    throw std::invalid_argument("expected a number or a rational string");
}

} // namespace

TwistProfile profile_from_json_text(const std::string& text, const std::string& name)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("profile config: ") + e.what());
    }
    std::string kind = doc.value("kind", "");
    std::optional<TwistProfile> out;
    if (kind == "polynomial") {
        std::vector<Rational> coeffs;
        for (const auto& c : doc.at("coefficients"))
            coeffs.push_back(json_rational(c));
        out = TwistProfile::polynomial(Polynomial(std::move(coeffs)), name);
    } else if (kind == "table") {
        std::vector<double> z, h, hp;
        for (const auto& row : doc.at("samples")) {
            if (!row.is_array() || row.size() != 3)
                throw std::invalid_argument("table rows must be [z, h, h']");
            z.push_back(row[0].get<double>());
            h.push_back(row[1].get<double>());
            hp.push_back(row[2].get<double>());
        }
        out = TwistProfile::tabulated(std::move(z), std::move(h), std::move(hp), name);
    } else if (kind == "disc_twist") {
        DiscTwist t = DiscTwist::parse(doc.at("f").get<std::string>());
        if (doc.contains("truncation"))
            t = t.truncated(doc.at("truncation").get<int>());
        out = disc_to_sphere(t);
    } else {
        throw std::invalid_argument("profile config: unknown kind '" + kind + "'");
    }
    if (doc.contains("hprime1")) {
        double want = to_double(json_rational(doc.at("hprime1")));
        double got = out->hprime1().value();
        if (std::abs(want - got) > 1e-9 * std::max(1.0, std::abs(want)))
            throw std::invalid_argument(fmt::format("profile config: hprime1 = {} but h'(1) = {}",
                                                    format_double(want), format_double(got)));
    }
    return *out;
}

TwistProfile load_profile(const std::string& spec)
{
    if (spec == "quadratic")
        return TwistProfile::quadratic(2);
    if (spec.rfind("quadratic:", 0) == 0)
        return TwistProfile::quadratic(std::stoi(spec.substr(10)));
    if (spec == "cubic")
        return TwistProfile::polynomial(
            Polynomial({make_rational(1, 6), make_rational(1, 2), make_rational(1, 2), make_rational(1, 6)}),
            "cubic");
    if (spec.rfind("disc:", 0) == 0) {
        // disc:<f>[@i]
        std::string rest = spec.substr(5);
        auto at = rest.find('@');
        DiscTwist t = DiscTwist::parse(rest.substr(0, at));
        if (at != std::string::npos)
            t = t.truncated(std::stoi(rest.substr(at + 1)));
        return disc_to_sphere(t);
    }
    std::ifstream in(spec);
    if (!in)
        throw std::invalid_argument("no built-in profile or readable file named '" + spec + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return profile_from_json_text(buf.str(), spec);
}

} // namespace pfh
