#include "dmap/degree.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "dmap/error.hpp"

namespace dmap {

namespace {

bool is_crossing(OrbitView c, int i) {
    const int n = static_cast<int>(c.size());
    const int j = i % n + 1;
    const int image_i = c.next(i);
    const int image_j = c.next(j);
    // Points are sorted, so comparing images is comparing their positions;
    // the only point that can equal 0 sits at position 1.
    if (image_j >= image_i) return false;
    return !(image_j == 1 && c.at(1).is_zero());
}

Fraction lifted_position(OrbitView c, int lifted_index) {
    const int n = static_cast<int>(c.size());
    const int wraps = (lifted_index - 1) / n;
    return c.at((lifted_index - 1) % n + 1).to_fraction() + wraps;
}

}  // namespace

CrossingSet crossings(OrbitView c) {
    CrossingSet out;
    const int n = static_cast<int>(c.size());
    if (n < 2) return out;
    for (int i = 1; i <= n; ++i)
        if (is_crossing(c, i)) out.indices.push_back(i);
    return out;
}

int degree(OrbitView c) { return static_cast<int>(crossings(c).size()); }

DigitPortrait digit_portrait(OrbitView c) {
    DigitPortrait out{c.base, std::vector<int>(static_cast<std::size_t>(c.base), 0)};
    for (const auto& point : c.points) ++out.values[static_cast<std::size_t>(leading_digit(point, c.base))];
    std::partial_sum(out.values.begin(), out.values.end(), out.values.begin());
    return out;
}

int dig(OrbitView c) {
    const auto portrait = digit_portrait(c);
    int distinct = 0;
    int previous = 0;
    for (int value : portrait.values) {
        if (value > previous) ++distinct;
        previous = value;
    }
    return distinct;
}

PartitionSpec partition_of(OrbitView c) {
    const auto cross = crossings(c);
    if (cross.indices.empty()) throw Error(Errc::no_crossing, "partition needs at least one crossing");
    const int n = static_cast<int>(c.size());
    const auto& idx = cross.indices;
    const std::size_t m = idx.size();

    PartitionSpec out;
    out.i1 = idx.front();
    out.blocks.resize(m);
    for (std::size_t t = 0; t + 1 < m; ++t)
        for (int r = idx[t] + 1; r <= idx[t + 1]; ++r) out.blocks[t].push_back(c.next(r));
    auto& wrap = out.blocks.back();
    for (int r = idx.back() + 1; r <= n; ++r) wrap.push_back(c.next(r));
    for (int r = 1; r <= idx.front(); ++r) wrap.push_back(c.next(r));
    for (auto& block : out.blocks) std::sort(block.begin(), block.end());
    return out;
}

WitnessMap witness_map(const Cycle& cycle) {
    const OrbitView c(cycle);
    const int n = static_cast<int>(c.size());
    if (n < 2) throw Error(Errc::degenerate, "a fixed point has no crossing; use the d-map itself");
    const auto cross = crossings(c);
    std::vector<bool> crossing_at(static_cast<std::size_t>(n) + 1, false);
    for (int i : cross.indices) crossing_at[static_cast<std::size_t>(i)] = true;

    const int first = cross.indices.front();
    const Fraction half(1, 2);
    Fraction start = (lifted_position(c, first) + lifted_position(c, first + 1)) * half;
    const BigInt turns = boost::multiprecision::numerator(start) / boost::multiprecision::denominator(start);
    const Fraction shift(turns);

    WitnessMap out;
    Fraction x_prev = start - shift;
    Fraction y_prev = 0;
    for (int k = 1; k <= n; ++k) {
        const int lifted = first + k;
        const int r = (lifted - 1) % n + 1;
        const Fraction x = lifted_position(c, lifted) - shift;
        const Fraction y = c.at(c.next(r)).to_fraction();
        out.pieces.push_back({x_prev, x, y_prev, y});
        x_prev = x;
        y_prev = y;
        if (crossing_at[static_cast<std::size_t>(r)]) {
            const Fraction mid = (x + lifted_position(c, lifted + 1) - shift) * half;
            out.pieces.push_back({x_prev, mid, y_prev, Fraction(1)});
            x_prev = mid;
            y_prev = 0;
        }
    }
    return out;
}

long map_degree(const WitnessMap& map) {
    const auto& pieces = map.pieces;
    if (pieces.empty()) throw Error(Errc::invalid_map, "map has no pieces");
    Fraction winding = 0;
    for (std::size_t k = 0; k < pieces.size(); ++k) {
        const auto& piece = pieces[k];
        if (piece.x1 <= piece.x0) throw Error(Errc::invalid_map, "piece " + std::to_string(k) + " has empty domain");
        const auto& next = pieces[(k + 1) % pieces.size()];
        const Fraction expected_x = k + 1 < pieces.size() ? next.x0 : next.x0 + 1;
        if (piece.x1 != expected_x) throw Error(Errc::invalid_map, "pieces do not tile the circle at piece " + std::to_string(k));
        const Fraction jump = next.y0 - piece.y1;
        if (boost::multiprecision::denominator(jump) != 1)
            throw Error(Errc::invalid_map, "discontinuity after piece " + std::to_string(k));
        winding += piece.y1 - piece.y0;
    }
    // Continuity mod 1 at every junction makes the winding integral.
    return static_cast<long>(boost::multiprecision::numerator(winding));
}

Rational evaluate(const WitnessMap& map, const Rational& x) {
    if (map.pieces.empty()) throw Error(Errc::invalid_map, "map has no pieces");
    Fraction lifted = x.to_fraction();
    if (lifted < map.pieces.front().x0) lifted += 1;
    for (const auto& piece : map.pieces) {
        if (lifted >= piece.x0 && lifted <= piece.x1) {
            const Fraction y = piece.y0 + (piece.y1 - piece.y0) * (lifted - piece.x0) / (piece.x1 - piece.x0);
            return from_fraction(y);
        }
    }
    throw Error(Errc::invalid_map, "point " + x.str() + " is outside the map's domain");
}

int crossing_number_of_word(std::span<const std::uint8_t> word, int d) {
    const std::size_t n = word.size();
    if (n < 2) return 0;

    thread_local std::vector<std::uint64_t> keys;
    thread_local std::vector<std::uint32_t> order;
    thread_local std::vector<std::uint32_t> rank;
    keys.resize(n);
    order.resize(n);
    rank.resize(n);
    std::iota(order.begin(), order.end(), 0u);

    // Rotations of a primitive word are pairwise distinct, and comparing
    // their periodic values is comparing the rotations lexicographically.
    bool fits = true;
    std::uint64_t modulus = 1;
    for (std::size_t i = 0; i < n && fits; ++i) {
        if (modulus > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(d)) fits = false;
        modulus *= static_cast<std::uint64_t>(d);
    }
    if (fits) {
        std::uint64_t value = 0;
        for (auto digit : word) value = value * static_cast<std::uint64_t>(d) + digit;
        const std::uint64_t high = modulus / static_cast<std::uint64_t>(d);
        for (std::size_t k = 0; k < n; ++k) {
            keys[k] = value;
            // rotate left: drop the leading digit, append it at the end
            const std::uint64_t lead = value / high;
            value = (value - lead * high) * static_cast<std::uint64_t>(d) + lead;
        }
        std::sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) { return keys[a] < keys[b]; });
    } else {
        std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
            for (std::size_t i = 0; i < n; ++i) {
                const auto da = word[(a + i) % n];
                const auto db = word[(b + i) % n];
                if (da != db) return da < db;
            }
            return false;
        });
    }
    for (std::size_t pos = 0; pos < n; ++pos) rank[order[pos]] = static_cast<std::uint32_t>(pos);

    int count = 0;
    for (std::size_t pos = 0; pos < n; ++pos) {
        const std::size_t next = pos + 1 < n ? pos + 1 : 0;
        const auto image = rank[(order[pos] + 1) % n];
        const auto next_image = rank[(order[next] + 1) % n];
        if (next_image < image) ++count;
    }
    return count;
}

}  // namespace dmap
