#include "dmap/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "dmap/degree.hpp"
#include "dmap/error.hpp"

namespace dmap {

namespace {

std::uint64_t checked_power(int base, int exponent) {
    std::uint64_t out = 1;
    for (int i = 0; i < exponent; ++i) {
        if (out > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(base))
            throw Error(Errc::invalid_input, std::to_string(base) + "^" + std::to_string(exponent) + " does not fit in 64 bits");
        out *= static_cast<std::uint64_t>(base);
    }
    return out;
}

void check_m(int m, int d) {
    check_base(d);
    if (m < 1 || m > d) throw Error(Errc::invalid_input, "m must lie in [1, d]");
}

}  // namespace

CoverReport cantor_boxes(int m, int d, int k) {
    check_m(m, d);
    if (k < 0) throw Error(Errc::invalid_input, "scale must be non-negative");
    checked_power(d, k);
    return CoverReport{d, k, checked_power(m, k)};
}

std::vector<std::uint64_t> cantor_intervals(int m, int d, int k) {
    check_m(m, d);
    if (k < 0) throw Error(Errc::invalid_input, "scale must be non-negative");
    checked_power(d, k);
    // Level-i boxes refine each kept box into d children and keep the first m.
    std::vector<std::uint64_t> boxes{0};
    for (int level = 0; level < k; ++level) {
        std::vector<std::uint64_t> next;
        next.reserve(boxes.size() * static_cast<std::size_t>(m));
        for (auto j : boxes)
            for (int digit = 0; digit < m; ++digit) next.push_back(j * static_cast<std::uint64_t>(d) + static_cast<std::uint64_t>(digit));
        boxes = std::move(next);
    }
    return boxes;
}

CoverReport pointset_boxcount(std::span<const Rational> points, int d, int k) {
    check_base(d);
    if (k < 0) throw Error(Errc::invalid_input, "scale must be non-negative");
    const BigInt scale = BigInt(checked_power(d, k));
    std::vector<std::uint64_t> boxes;
    boxes.reserve(points.size());
    for (const auto& x : points) boxes.push_back(static_cast<std::uint64_t>(BigInt(x.num() * scale / x.den())));
    std::sort(boxes.begin(), boxes.end());
    const auto distinct = static_cast<std::uint64_t>(std::unique(boxes.begin(), boxes.end()) - boxes.begin());
    return CoverReport{d, k, distinct};
}

std::vector<Rational> build_E_approx(int d, int m, int n_max, std::uint64_t work_limit) {
    check_m(m, d);
    if (n_max < 1) throw Error(Errc::invalid_input, "n_max must be at least 1");
    const EnumerationOptions options{work_limit, {}};
    check_work(d, n_max, options);

    std::vector<Rational> points;
    for (int n = 1; n <= n_max; ++n) {
        const BigInt den = ipow(d, static_cast<std::size_t>(n)) - 1;
        for_each_cycle_word(d, n, options, [&](std::span<const std::uint8_t> word) {
            const bool wanted = n == 1 ? m == 1 : crossing_number_of_word(word, d) == m;
            if (!wanted) return;
            BigInt numerator = word_integer(word, d);
            for (int k = 0; k < n; ++k) {
                points.emplace_back(numerator, den);
                numerator = (numerator * d) % den;
            }
        });
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

DimensionFit fit_dimension(std::span<const CoverReport> reports) {
    std::set<int> scales;
    for (const auto& r : reports) scales.insert(r.scale);
    if (scales.size() < 2) throw Error(Errc::insufficient_data, "a slope needs at least two distinct scales");

    const double count = static_cast<double>(reports.size());
    double sx = 0, sy = 0;
    std::vector<double> xs, ys;
    for (const auto& r : reports) {
        if (r.box_count == 0) throw Error(Errc::invalid_input, "box count must be positive");
        xs.push_back(r.scale * std::log(static_cast<double>(r.base)));
        ys.push_back(std::log(static_cast<double>(r.box_count)));
        sx += xs.back();
        sy += ys.back();
    }
    const double mx = sx / count, my = sy / count;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    DimensionFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    for (std::size_t i = 0; i < xs.size(); ++i)
        fit.max_residual = std::max(fit.max_residual, std::abs(ys[i] - (fit.intercept + fit.slope * xs[i])));
    for (const auto& r : reports) fit.scales_used.push_back(r.scale);
    return fit;
}

ScaleSelection select_unsaturated(std::span<const CoverReport> reports, std::size_t point_count) {
    ScaleSelection out;
    for (const auto& r : reports) {
        const bool saturated = r.box_count >= point_count;
        (saturated ? out.saturated : out.used).push_back(r);
    }
    return out;
}

DimensionEstimate estimate_cantor_dimension(int m, int d, int k_max) {
    DimensionEstimate out;
    for (int k = 1; k <= k_max; ++k) out.reports.push_back(cantor_boxes(m, d, k));
    out.selection.used = out.reports;
    out.point_count = out.reports.empty() ? 0 : out.reports.back().box_count;
    if (out.reports.size() >= 2) out.fit = fit_dimension(out.reports);
    return out;
}

DimensionEstimate estimate_cycle_dimension(int d, int m, int n_max, int k_max, std::uint64_t work_limit) {
    const auto points = build_E_approx(d, m, n_max, work_limit);
    DimensionEstimate out;
    out.point_count = points.size();
    for (int k = 1; k <= std::min(k_max, n_max); ++k) out.reports.push_back(pointset_boxcount(points, d, k));
    out.selection = select_unsaturated(out.reports, points.size());
    if (out.selection.used.size() >= 2) out.fit = fit_dimension(out.selection.used);
    return out;
}

}  // namespace dmap
