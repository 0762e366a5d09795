#pragma once

// Test-only brute-force references. None of these call into the library's
// orbit, degree or enumeration code; they work on plain cpp_rational values.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Int = boost::multiprecision::cpp_int;
using Q = boost::multiprecision::cpp_rational;

inline Q frac(const Q& x) {
    const Int whole = boost::multiprecision::numerator(x) / boost::multiprecision::denominator(x);
    Q out = x - Q(whole);
    if (out < 0) out += 1;
    return out;
}

inline Q times_mod1(const Q& x, int d) { return frac(x * d); }

/// Direct evaluation of 0 < d c_{i+1} (mod 1) < d c_i (mod 1) < 1 on a
/// sorted point list; returns 1-based indices.
inline std::vector<int> crossings(const std::vector<Q>& sorted, int d) {
    std::vector<int> out;
    const std::size_t n = sorted.size();
    if (n < 2) return out;
    for (std::size_t i = 0; i < n; ++i) {
        const Q a = times_mod1(sorted[i], d);
        const Q b = times_mod1(sorted[(i + 1) % n], d);
        if (0 < b && b < a && a < 1) out.push_back(static_cast<int>(i) + 1);
    }
    return out;
}

/// Sorted values of all rotations of a word, by long division-free summation.
inline std::vector<Q> rotation_values(const std::vector<int>& word, int d) {
    const std::size_t n = word.size();
    std::set<Q> values;
    for (std::size_t k = 0; k < n; ++k) {
        Int num = 0;
        for (std::size_t i = 0; i < n; ++i) num = num * d + word[(k + i) % n];
        Int den = 1;
        for (std::size_t i = 0; i < n; ++i) den *= d;
        den -= 1;
        values.insert(frac(Q(num, den)));
    }
    return {values.begin(), values.end()};
}

inline int mobius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    return n > 1 ? -result : result;
}

/// Number of primitive necklaces of length n over d letters.
inline Int necklace_count(int d, int n) {
    Int sum = 0;
    for (int k = 1; k <= n; ++k) {
        if (n % k) continue;
        Int power = 1;
        for (int i = 0; i < k; ++i) power *= d;
        sum += mobius(n / k) * power;
    }
    return sum / n;
}

/// Number of n-element cycles: primitive necklaces, except that the words
/// "0" and "d-1" name the same fixed point 0.
inline Int cycle_count(int d, int n) { return necklace_count(d, n) - (n == 1 ? 1 : 0); }

/// Minimal (n1, n2) with den | d^n1 (d^n2 - 1).
inline std::pair<int, int> decompose(const Int& den, int d) {
    for (int n1 = 0;; ++n1) {
        Int shift = 1;
        for (int i = 0; i < n1; ++i) shift *= d;
        Int power = d;
        for (int n2 = 1; n2 <= 4 * static_cast<int>(den.convert_to<long long>()) + 4; ++n2) {
            if ((shift * (power - 1)) % den == 0) return {n1, n2};
            power *= d;
        }
    }
}

/// Forward orbit as a sorted set of values.
inline std::vector<Q> orbit_set(const Q& x, int d) {
    std::set<Q> seen;
    Q current = frac(x);
    while (seen.insert(current).second) current = times_mod1(current, d);
    return {seen.begin(), seen.end()};
}

/// All distinct base-2 precycles reached from reduced fractions with
/// denominator 2^a q, q | 2^b - 1, a <= max_a, b <= max_b; keyed by size.
inline std::map<std::size_t, std::set<std::vector<Q>>> precycle_scan_base2(int max_a, int max_b) {
    std::set<Int> odd_dens;
    for (int b = 1; b <= max_b; ++b) {
        const Int m = (Int(1) << b) - 1;
        for (Int q = 1; q <= m; ++q)
            if (m % q == 0) odd_dens.insert(q);
    }
    std::map<std::size_t, std::set<std::vector<Q>>> out;
    for (const auto& q : odd_dens) {
        for (int a = 0; a <= max_a; ++a) {
            const Int den = q << a;
            for (Int num = 0; num < den; ++num) {
                if (boost::multiprecision::gcd(num, den) != 1 && !(num == 0 && den == 1)) continue;
                auto orbit = orbit_set(Q(num, den), 2);
                out[orbit.size()].insert(std::move(orbit));
            }
        }
    }
    return out;
}

}  // namespace oracle
