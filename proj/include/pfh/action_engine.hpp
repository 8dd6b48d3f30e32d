#pragma once

#include "pfh/lattice_path.hpp"
#include "pfh/scalar.hpp"
#include "pfh/twist_profile.hpp"

#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace pfh {

struct ActionValue {
    Scalar value;
    Scalar start_term;
    std::vector<Scalar> per_edge;
};

/// Action of one copy of the primitive vector (q, p):
/// 0 at slope 0, h(1)/2 at slope h'(1), else (p(1-z) + q h(z))/2 with h'(z) = p/q.
Scalar unit_action(std::int64_t q, std::int64_t p, const TwistProfile& profile);
Scalar edge_action(const Edge& edge, const TwistProfile& profile);
ActionValue path_action(const LatticePath& path, const TwistProfile& profile);

/// Memoized unit actions per slope. Safe to share between threads.
class ActionTable {
public:
    explicit ActionTable(const TwistProfile& profile) : profile_(&profile) {}

    const TwistProfile& profile() const { return *profile_; }
    Scalar unit(std::int64_t q, std::int64_t p) const;
    Scalar edge(const Edge& e) const;
    Scalar path(const LatticePath& path) const;

private:
    const TwistProfile* profile_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<std::int64_t, std::int64_t>, Scalar> cache_;
};

} // namespace pfh
