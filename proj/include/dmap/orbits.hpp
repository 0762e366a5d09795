#pragma once

// Cycles and precycles of the d-map as sorted point sets with their
// successor maps. Positions are 1-based throughout: sigma[r - 1] is the
// sorted position of d * points[r - 1] (mod 1).

#include <span>
#include <vector>

#include "dmap/numerics.hpp"

namespace dmap {

struct Cycle {
    int base = 2;
    /// Least rotation of the generating word; identifies the cycle.
    DigitWord word;
    std::vector<Rational> points;
    std::vector<int> sigma;

    std::size_t size() const noexcept { return points.size(); }
    friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Forward orbit of a rational point: a transient of preperiod_len points
/// feeding a cycle of period_len points.
struct Precycle {
    int base = 2;
    /// The orbit's generating point (the one without a preimage when preperiod_len > 0).
    Rational start;
    std::vector<Rational> points;
    std::vector<int> successor;
    std::size_t preperiod_len = 0;
    std::size_t period_len = 0;

    std::size_t size() const noexcept { return points.size(); }
    bool is_cycle() const noexcept { return preperiod_len == 0; }
    friend bool operator==(const Precycle&, const Precycle&) = default;
};

/// Non-owning sorted-points-plus-successor view shared by cycles and precycles.
struct OrbitView {
    int base;
    std::span<const Rational> points;
    std::span<const int> successor;

    OrbitView(const Cycle& c) noexcept : base(c.base), points(c.points), successor(c.sigma) {}
    OrbitView(const Precycle& p) noexcept : base(p.base), points(p.points), successor(p.successor) {}
    OrbitView(int d, std::span<const Rational> pts, std::span<const int> succ) noexcept
        : base(d), points(pts), successor(succ) {}

    std::size_t size() const noexcept { return points.size(); }
    /// Point at 1-based position r.
    const Rational& at(int r) const { return points[static_cast<std::size_t>(r - 1)]; }
    int next(int r) const { return successor[static_cast<std::size_t>(r - 1)]; }
};

Precycle orbit(const Rational& x, int d);

/// Cycle of all rotations of a primitive word. The one-letter word (d-1)
/// is accepted and yields {0}.
Cycle cycle_from_word(const DigitWord& word);

/// True iff the d-map permutes the (deduplicated) set transitively.
bool is_cycle(std::span<const Rational> points, int d);

/// Throws Errc::not_a_cycle naming the escaping point, or reporting a
/// non-transitive set.
Cycle cycle_from_points(std::span<const Rational> points, int d);

/// Accepts any forward orbit of a single point. Throws Errc::not_a_cycle
/// when the set is not closed or not generated by one point.
Precycle precycle_from_points(std::span<const Rational> points, int d);

}  // namespace dmap
