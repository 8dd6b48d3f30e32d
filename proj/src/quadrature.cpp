#include "pfh/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>

namespace pfh {

double integrate(const std::function<double(double)>& fn, double a, double b, const std::vector<double>& cuts,
                 double rel)
{
    using boost::math::quadrature::gauss_kronrod;
    std::vector<double> pts{a};
    for (double c : cuts)
        if (c > a && c < b)
            pts.push_back(c);
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        double lo = pts[i], hi = pts[i + 1];
        if (!(hi > lo))
            continue;
        double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        auto g = [&](double t) { return fn(mid + half * t) * half; };
        total += gauss_kronrod<double, 61>::integrate(g, -1.0, 1.0, 20, rel);
    }
    return total;
}

} // namespace pfh
