#pragma once

#include "pfh/lattice_path.hpp"

#include <functional>
#include <vector>

namespace pfh {

/// Primitive (q, p) with 1 <= q <= d and 0 <= p/q <= N, in increasing slope order.
std::vector<Edge> farey_slopes(std::int64_t d, std::int64_t N);

/// Every concave path shape of degree d with slopes in [0, N], starting at
/// y = 0. With labeled=true each interior slope also appears with label H.
/// Shapes are visited in a fixed order.
void for_each_shape(std::int64_t d, std::int64_t N, bool labeled,
                    const std::function<void(const LatticePath&)>& visit);

std::vector<LatticePath> all_shapes(std::int64_t d, std::int64_t N, bool labeled);

} // namespace pfh
