#pragma once

// d-adic box counting: the Cantor-like sets A_{m,d} (digits 0..m-1 only),
// finite approximations of the closure E_{m,d} of degree-m cycles, and
// least-squares log-log slope fits.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dmap/enumeration.hpp"
#include "dmap/numerics.hpp"

namespace dmap {

/// Number of boxes [j d^-k, (j+1) d^-k) met by a set at scale k.
struct CoverReport {
    int base = 2;
    int scale = 0;
    std::uint64_t box_count = 0;
};

struct DimensionFit {
    double slope = 0.0;
    double intercept = 0.0;
    double max_residual = 0.0;
    std::vector<int> scales_used;
};

/// The m^k level-k intervals of A_{m,d}. Requires 1 <= m <= d and d^k < 2^64.
CoverReport cantor_boxes(int m, int d, int k);
/// Box indices j of those intervals, ascending.
std::vector<std::uint64_t> cantor_intervals(int m, int d, int k);

/// Distinct floor(x d^k) over the set, computed exactly.
CoverReport pointset_boxcount(std::span<const Rational> points, int d, int k);

/// Sorted union of the points of all cycles of size <= n_max with degree
/// exactly m. For m = 1 the fixed points are included as well: each k/(d-1)
/// is the limit of the degree-1 cycles of k^N (k+1).
std::vector<Rational> build_E_approx(int d, int m, int n_max, std::uint64_t work_limit = kDefaultWorkLimit);

/// Least squares of log N against k log d. Throws Errc::insufficient_data
/// with fewer than two distinct scales.
DimensionFit fit_dimension(std::span<const CoverReport> reports);

struct ScaleSelection {
    std::vector<CoverReport> used;
    std::vector<CoverReport> saturated;
};

/// Drops scales where the sample of `point_count` points has flattened:
/// every point sits in its own box (N >= point_count).
ScaleSelection select_unsaturated(std::span<const CoverReport> reports, std::size_t point_count);

struct DimensionEstimate {
    std::vector<CoverReport> reports;
    ScaleSelection selection;
    /// Empty when fewer than two scales survive selection.
    std::optional<DimensionFit> fit;
    std::size_t point_count = 0;
};

/// Box counts of A_{m,d} for k = 1..k_max, all scales fitted.
DimensionEstimate estimate_cantor_dimension(int m, int d, int k_max);

/// Box counts of build_E_approx(d, m, n_max) for k = 1..min(k_max, n_max),
/// fitted over the unsaturated scales. Scales finer than d^-n_max resolve
/// only the discreteness of the sample and are never used.
DimensionEstimate estimate_cycle_dimension(int d, int m, int n_max, int k_max,
                                           std::uint64_t work_limit = kDefaultWorkLimit);

}  // namespace dmap
