#pragma once

// Exhaustive generation of n-element cycles and precycles of the d-map,
// and degree censuses checked against the counting bounds
//   cycles:    n^(d-m+1) m^(n-1)
//   precycles: n^(d-m+3) m^(n-1)

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "dmap/numerics.hpp"
#include "dmap/orbits.hpp"

namespace dmap {

inline constexpr std::uint64_t kDefaultWorkLimit = std::uint64_t{1} << 26;

/// Fixed-prefix shard of the word space: shard `index` of `count`.
struct Shard {
    std::size_t index = 0;
    std::size_t count = 1;
};

struct EnumerationOptions {
    /// Maximum admissible d^n.
    std::uint64_t work_limit = kDefaultWorkLimit;
    Shard shard;
};

/// Throws Errc::work_limit_exceeded when d^n exceeds the limit and
/// Errc::invalid_input for a malformed shard or n < 1.
void check_work(int d, int n, const EnumerationOptions& options);

using WordVisitor = std::function<void(std::span<const std::uint8_t>)>;

/// Every Lyndon word of length n over d letters in lexicographic order
/// (restricted to the shard), skipping the one-letter word d-1, whose
/// value coincides with that of 0.
void for_each_cycle_word(int d, int n, const EnumerationOptions& options, const WordVisitor& visit);

void enumerate_cycles(int d, int n, const EnumerationOptions& options, const std::function<void(const Cycle&)>& visit);
std::vector<Cycle> cycles_of_size(int d, int n, const EnumerationOptions& options = {});

/// Every n-element precycle: transient words t (length n1 >= 0) feeding a
/// rotation p of a primitive word, with t's last digit different from p's.
void enumerate_precycles(int d, int n, const EnumerationOptions& options,
                         const std::function<void(const Precycle&)>& visit);

struct CensusRow {
    int base = 2;
    int size = 1;
    std::map<int, std::uint64_t> counts_by_degree;
    std::uint64_t total = 0;
    /// Counting bound for each degree present, and count / bound.
    std::map<int, BigInt> bound;
    std::map<int, Fraction> bound_ratio;
};

BigInt cycle_count_bound(int n, int d, int m);
BigInt precycle_count_bound(int n, int d, int m);

CensusRow census(int d, int n, const EnumerationOptions& options = {});
CensusRow precycle_census(int d, int n, const EnumerationOptions& options = {});

/// Sums shard rows of the same (d, n) and recomputes the ratios with the
/// supplied bound.
CensusRow merge_census(std::span<const CensusRow> shards, BigInt (*bound)(int, int, int));

/// Splits the census over `jobs` shards run on worker threads.
CensusRow parallel_census(int d, int n, std::size_t jobs, std::uint64_t work_limit, bool precycles = false);

}  // namespace dmap
