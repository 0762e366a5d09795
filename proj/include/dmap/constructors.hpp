#pragma once

// Building cycles: the degree-m cycle passing within d^-q of a point whose
// expansion uses m digits, and the unique reconstruction of a cycle from
// its (partition, i1, digit portrait) key.

#include <optional>
#include <vector>

#include "dmap/degree.hpp"
#include "dmap/numerics.hpp"
#include "dmap/orbits.hpp"

namespace dmap {

struct ApproximationRequest {
    int base = 2;
    /// Digits b_1 < ... < b_m allowed in the prefix.
    std::vector<int> digit_set;
    /// alpha_1 .. alpha_q, all drawn from digit_set.
    DigitWord prefix;
    /// Run length N of each padding block; must exceed the multiplicity of
    /// every digit of digit_set in the prefix.
    int block_len = 1;
};

struct Approximation {
    /// The cycle point (0.\overline{word})_d starting with the prefix.
    Rational point;
    DigitWord word;
    Cycle cycle;
};

/// Smallest admissible block_len for the given prefix and digit set.
int minimal_block_len(const DigitWord& prefix, const std::vector<int>& digit_set);

/// Builds the periodic word
///   prefix <b_m><b_1> <b_{m-1}><b_1> ... <b_2><b_1> b_m
/// where <b> is b repeated block_len times. The resulting cycle has size
/// q + 2N(m-1) + 1 and degree m, and its point lies within d^-q of the prefix.
Approximation approximate_with_cycle(const ApproximationRequest& request);

struct CycleKey {
    int base = 2;
    int degree = 1;
    int size = 1;
    PartitionSpec partition;
    DigitPortrait portrait;

    friend bool operator==(const CycleKey&, const CycleKey&) = default;
};

/// (base, degree, size, partition_of(C), digit_portrait(C)).
/// Throws Errc::no_crossing for a fixed point.
CycleKey extract_key(const Cycle& c);

/// The unique cycle with the given key, or nullopt when the key is well
/// formed but no cycle realises it. Throws Errc::invalid_input when the
/// partition or portrait is structurally malformed.
std::optional<Cycle> reconstruct_cycle(const CycleKey& key);

}  // namespace dmap
