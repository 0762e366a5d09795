#pragma once

// Crossings, crossing number (= degree), digit portraits, the partition
// generated by a cycle, and the piecewise-linear witness map certifying
// the degree from above.
//
// Every function taking an OrbitView accepts cycles and precycles alike.
// For precycles the degree reported is the crossing number of the orbit.

#include <cstdint>
#include <span>
#include <vector>

#include "dmap/numerics.hpp"
#include "dmap/orbits.hpp"

namespace dmap {

/// Positions i (1-based, i = n is the wrap pair (c_n, c_1)) where
/// 0 < d c_{i+1} (mod 1) < d c_i (mod 1) < 1.
struct CrossingSet {
    std::vector<int> indices;

    std::size_t size() const noexcept { return indices.size(); }
    friend bool operator==(const CrossingSet&, const CrossingSet&) = default;
};

/// F(j) = |C ∩ [0, (j+1)/d)| for j = 0..d-1.
struct DigitPortrait {
    int base = 2;
    std::vector<int> values;

    friend bool operator==(const DigitPortrait&, const DigitPortrait&) = default;
};

/// Ordered blocks P_1..P_m (each sorted ascending, labels 1..n) and the
/// first crossing index i1. Block t spans the images of the positions
/// between crossings t and t+1; P_m is the wrap block.
struct PartitionSpec {
    std::vector<std::vector<int>> blocks;
    int i1 = 1;

    friend bool operator==(const PartitionSpec&, const PartitionSpec&) = default;
};

/// One linear piece of a circle map lift: [x0, x1] -> [y0, y1].
struct WitnessPiece {
    Fraction x0, x1, y0, y1;
};

/// Piecewise-linear circle map given by consecutive pieces whose domains
/// tile one turn of the circle.
struct WitnessMap {
    std::vector<WitnessPiece> pieces;
};

CrossingSet crossings(OrbitView c);
int degree(OrbitView c);
DigitPortrait digit_portrait(OrbitView c);
/// Number of distinct positive values of the portrait (= distinct leading digits).
int dig(OrbitView c);

/// Throws Errc::no_crossing when the orbit has no crossing (n = 1).
PartitionSpec partition_of(OrbitView c);

/// The map sending crossing-gap midpoints to 0, each c_r to d c_r (mod 1),
/// linear in between. Throws Errc::degenerate for a fixed point.
WitnessMap witness_map(const Cycle& c);

/// Total signed winding. Throws Errc::invalid_map on a discontinuous map
/// or pieces that do not tile the circle exactly once.
long map_degree(const WitnessMap& map);

Rational evaluate(const WitnessMap& map, const Rational& x);

/// Crossing number of the cycle spanned by the rotations of a primitive
/// word, computed on the word alone. Used by the enumeration hot path.
int crossing_number_of_word(std::span<const std::uint8_t> word, int d);

}  // namespace dmap
