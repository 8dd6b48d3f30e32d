#pragma once

#include "pfh/action_engine.hpp"
#include "pfh/errors.hpp"
#include "pfh/gf2.hpp"
#include "pfh/lattice_path.hpp"

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pfh {

struct Rounding {
    LatticePath path;
    std::size_t corner; // index into path.vertices() of the removed corner
};

/// Corner roundings that lose one H: remove a corner with kappa >= 1 H
/// labels on its incident edges, replace the path between the neighbouring
/// vertices by the lower hull of the remaining lattice points, and label the
/// replaced stretch with kappa - 1 H's in every possible way.
std::vector<Rounding> roundings(const LatticePath& path, std::int64_t hprime1);

struct Generator {
    LatticePath path;
    Scalar action;
    std::string key; // serialization
};

struct GeneratorSet {
    std::int64_t d = 0;
    std::int64_t k = 0;
    std::vector<Generator> generators; // action descending, then key
};

/// Rows index C_{k-1}, columns index C_k.
struct DifferentialMatrix {
    std::int64_t k = 0;
    gf2::Matrix matrix;
};

/// The degree-d complex: generators are labeled paths graded by the index,
/// filtered by action. Shapes are enumerated once; a grading only picks the
/// start height. Not thread-safe (grading sets are cached lazily).
class ChainComplex {
public:
    ChainComplex(std::int64_t d, const TwistProfile& profile);

    std::int64_t degree() const { return d_; }
    std::int64_t hprime1() const { return N_; }
    const TwistProfile& profile() const { return *profile_; }

    /// A window of 2d+3 consecutive gradings, which meets every residue
    /// modulo the period 2d+2.
    std::pair<std::int64_t, std::int64_t> default_window() const { return {-d_ - 1, d_ + 1}; }

    const GeneratorSet& generators(std::int64_t k) const;
    /// Differential C_k -> C_{k-1}. Throws GradingMismatch if a rounding
    /// lands outside C_k, InvariantViolation if it lowers the action.
    DifferentialMatrix differential(std::int64_t k) const;
    /// d_k o d_{k+1} == 0.
    bool square_zero(std::int64_t k) const;
    std::int64_t homology_rank(std::int64_t k) const;
    /// Least filtration level at which the (unique) nonzero class of H_k
    /// appears. Throws NoClass unless the rank is 1.
    Scalar min_max(std::int64_t k) const;

private:
    struct Shape {
        LatticePath path; // at y = 0
        std::int64_t index0;
        Scalar action0;
    };

    std::int64_t d_;
    std::int64_t N_;
    const TwistProfile* profile_;
    std::vector<Shape> shapes_;
    mutable std::map<std::int64_t, GeneratorSet> sets_;
    mutable std::map<std::int64_t, std::unordered_map<std::string, std::size_t>> lookup_;
    mutable std::map<std::int64_t, std::shared_ptr<DifferentialMatrix>> diffs_;

    const std::unordered_map<std::string, std::size_t>& lookup(std::int64_t k) const;
    const DifferentialMatrix& cached_differential(std::int64_t k) const;
};

} // namespace pfh
