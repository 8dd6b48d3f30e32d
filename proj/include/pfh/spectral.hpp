#pragma once

#include "pfh/action_engine.hpp"
#include "pfh/errors.hpp"
#include "pfh/lattice_path.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pfh {

inline constexpr int kDefaultBruteCap = 10;

/// All labeled shapes of one degree with their y = 0 index, j and action.
class ShapeCatalog {
public:
    struct Record {
        LatticePath path;
        std::int64_t j0;
        std::int64_t index0;
        Scalar action0;
    };

    ShapeCatalog(std::int64_t d, const TwistProfile& profile);

    std::int64_t degree() const { return d_; }
    const std::vector<Record>& records() const { return records_; }

private:
    std::int64_t d_;
    std::vector<Record> records_;
};

struct SpectralValue {
    Scalar value;
    LatticePath witness;
};

/// c_{d,k} as the largest action of an index-k path, by enumeration.
class SpectralSolver {
public:
    SpectralSolver(std::int64_t d, const TwistProfile& profile, int cap = kDefaultBruteCap);

    std::int64_t degree() const { return catalog_.degree(); }
    /// Max over all-E paths; cross-checked against the max over every labeled
    /// path of index k (InvariantViolation on disagreement). EmptyGrading
    /// when no path has index k.
    SpectralValue value(std::int64_t k) const;
    /// Gradings k = d mod 2 in [lo, hi].
    std::vector<std::int64_t> gradings(std::int64_t lo, std::int64_t hi) const;

private:
    ShapeCatalog catalog_;
};

Scalar c_dk_exact(std::int64_t d, std::int64_t k, const TwistProfile& profile, int cap = kDefaultBruteCap);

struct LawReport {
    std::vector<std::string> violations;
    std::size_t checked = 0;
    bool ok() const { return violations.empty(); }
};

/// c_{d,k+2d+2} = c_{d,k} + 1 for k in [lo, hi] (exact for exact profiles).
LawReport shift_law_check(const SpectralSolver& solver, std::int64_t lo, std::int64_t hi);
/// c_{d,k} <= c_{d,k+2} for k in [lo, hi].
LawReport monotonicity_check(const SpectralSolver& solver, std::int64_t lo, std::int64_t hi);

struct Bracket {
    Scalar lo;
    Scalar hi;
    Scalar slack;               // hi - (d Cal + k/(2(d+1)))
    LatticePath witness;        // lower-bound path, shifted into grading <= k
    std::int64_t witness_grading = 0;
    std::optional<Scalar> exact; // filled when confirmed by enumeration
};

/// lo: the Step-1 lattice path moved down into a grading <= k (same parity)
/// and pushed up by monotonicity. hi: d I/4 + (k+d)/(2(d+1)), which follows
/// from the isoperimetric bound per path together with the index/area
/// relation. With confirm=true the exact value is computed (d <= cap) and
/// the bracket is checked against it.
Bracket c_dk_bracket(std::int64_t d, std::int64_t k, const TwistProfile& profile, bool confirm = false,
                     int cap = kDefaultBruteCap);

/// c/d - k/(2(d^2+d)).
Scalar calabi_estimate(const Scalar& c, std::int64_t d, std::int64_t k);

enum class SpectralMethod { Brute, MinMax, Bracket };
std::string to_string(SpectralMethod m);

struct SpectralRow {
    std::int64_t d = 0;
    std::int64_t k = 0;
    SpectralMethod method = SpectralMethod::Brute;
    std::optional<Scalar> value;
    std::optional<Scalar> lo;
    std::optional<Scalar> hi;
};

struct SpectralTable {
    std::string profile;
    std::vector<SpectralRow> rows;
};

} // namespace pfh
