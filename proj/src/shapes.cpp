#include "pfh/shapes.hpp"

#include <algorithm>
#include <numeric>

namespace pfh {

std::vector<Edge> farey_slopes(std::int64_t d, std::int64_t N)
{
    std::vector<Edge> out;
    for (std::int64_t q = 1; q <= d; ++q)
        for (std::int64_t p = 0; p <= N * q; ++p)
            if (std::gcd(p, q) == 1)
                out.push_back({q, p, 1, Label::E});
    std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) { return a.p * b.q < b.p * a.q; });
    return out;
}

namespace {

struct Walker {
    const std::vector<Edge>& slopes;
    std::int64_t N;
    bool labeled;
    const std::function<void(const LatticePath&)>& visit;
    std::vector<Edge> stack;

    void run(std::size_t from, std::int64_t budget)
    {
        if (budget == 0) {
            visit(LatticePath(0, stack));
            return;
        }
        for (std::size_t i = from; i < slopes.size(); ++i) {
            Edge e = slopes[i];
            if (e.q > budget)
                continue;
            bool interior = e.p > 0 && e.p < N * e.q;
            for (std::int64_t m = 1; m * e.q <= budget; ++m) {
                e.m = m;
                e.label = Label::E;
                stack.push_back(e);
                run(i + 1, budget - m * e.q);
                stack.pop_back();
                if (labeled && interior) {
                    e.label = Label::H;
                    stack.push_back(e);
                    run(i + 1, budget - m * e.q);
                    stack.pop_back();
                }
            }
        }
    }
};

} // namespace

void for_each_shape(std::int64_t d, std::int64_t N, bool labeled,
                    const std::function<void(const LatticePath&)>& visit)
{
    if (d <= 0)
        return;
    auto slopes = farey_slopes(d, N);
    Walker w{slopes, N, labeled, visit, {}};
    w.run(0, d);
}

std::vector<LatticePath> all_shapes(std::int64_t d, std::int64_t N, bool labeled)
{
    std::vector<LatticePath> out;
    for_each_shape(d, N, labeled, [&](const LatticePath& p) { out.push_back(p); });
    return out;
}

} // namespace pfh
