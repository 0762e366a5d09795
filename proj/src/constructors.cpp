#include "dmap/constructors.hpp"

#include <algorithm>
#include <stdexcept>

#include "dmap/error.hpp"

namespace dmap {

namespace {

std::vector<int> normalized_digit_set(const ApproximationRequest& request) {
    auto digits = request.digit_set;
    std::sort(digits.begin(), digits.end());
    if (std::adjacent_find(digits.begin(), digits.end()) != digits.end())
        throw Error(Errc::invalid_input, "digit set has repeated digits");
    for (int b : digits)
        if (b < 0 || b >= request.base) throw Error(Errc::invalid_digit, "digit " + std::to_string(b) + " out of range");
    return digits;
}

void validate_key(const CycleKey& key) {
    check_base(key.base);
    const int n = key.size;
    const int m = key.degree;
    if (n < 2) throw Error(Errc::invalid_input, "size must be at least 2");
    if (m < 1 || m > key.base) throw Error(Errc::invalid_input, "degree must lie in [1, d]");
    if (static_cast<int>(key.partition.blocks.size()) != m)
        throw Error(Errc::invalid_input, "partition must have exactly m blocks");
    std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& block : key.partition.blocks) {
        if (block.empty()) throw Error(Errc::invalid_input, "partition has an empty block");
        for (int label : block) {
            if (label < 1 || label > n) throw Error(Errc::invalid_input, "block label " + std::to_string(label) + " outside 1..n");
            if (seen[static_cast<std::size_t>(label)]++) throw Error(Errc::invalid_input, "label " + std::to_string(label) + " repeated");
        }
    }
    if (std::find(seen.begin() + 1, seen.end(), 0) != seen.end())
        throw Error(Errc::invalid_input, "partition does not cover 1..n");
    const int wrap_size = static_cast<int>(key.partition.blocks.back().size());
    if (key.partition.i1 < 1 || key.partition.i1 > wrap_size)
        throw Error(Errc::invalid_input, "i1 must lie in [1, |P_m|]");
    const auto& f = key.portrait.values;
    if (key.portrait.base != key.base || static_cast<int>(f.size()) != key.base)
        throw Error(Errc::invalid_input, "portrait must have d values");
    if (f.front() < 0 || f.back() != n || !std::is_sorted(f.begin(), f.end()))
        throw Error(Errc::invalid_input, "portrait must be non-decreasing with F(d-1) = n");
}

}  // namespace

int minimal_block_len(const DigitWord& prefix, const std::vector<int>& digit_set) {
    long most = 0;
    for (int b : digit_set) most = std::max(most, static_cast<long>(std::count(prefix.digits.begin(), prefix.digits.end(), b)));
    return static_cast<int>(most) + 1;
}

Approximation approximate_with_cycle(const ApproximationRequest& request) {
    check_base(request.base);
    const auto digits = normalized_digit_set(request);
    const std::size_t m = digits.size();
    if (m == 0) throw Error(Errc::invalid_input, "digit set is empty");
    if (m == 1) throw Error(Errc::unsupported_degenerate, "a single digit gives a fixed point; degree-1 approximation is not constructed");
    if (request.prefix.empty()) throw Error(Errc::invalid_input, "prefix must be nonempty");
    if (request.prefix.base != request.base) throw Error(Errc::invalid_input, "prefix base differs from request base");
    for (auto a : request.prefix.digits)
        if (!std::binary_search(digits.begin(), digits.end(), static_cast<int>(a)))
            throw Error(Errc::invalid_input, "prefix digit " + std::to_string(a) + " not in the digit set");
    if (request.block_len < minimal_block_len(request.prefix, digits))
        throw Error(Errc::insufficient_padding, "block length " + std::to_string(request.block_len) + " must exceed every digit's multiplicity in the prefix (need >= " +
                                                    std::to_string(minimal_block_len(request.prefix, digits)) + ")");

    const auto block_len = static_cast<std::size_t>(request.block_len);
    const auto lowest = static_cast<std::uint8_t>(digits.front());
    const auto highest = static_cast<std::uint8_t>(digits.back());
    DigitWord word = request.prefix;
    word.digits.reserve(request.prefix.size() + 2 * block_len * (m - 1) + 1);
    for (std::size_t t = m - 1; t >= 1; --t) {
        word.digits.insert(word.digits.end(), block_len, static_cast<std::uint8_t>(digits[t]));
        word.digits.insert(word.digits.end(), block_len, lowest);
    }
    word.digits.push_back(highest);

    if (!is_primitive(word.digits)) throw std::logic_error("approximation word '" + to_string(word) + "' is not primitive");
    Approximation out{value_of_periodic(word), word, cycle_from_word(word)};
    return out;
}

CycleKey extract_key(const Cycle& c) {
    if (c.size() < 2) throw Error(Errc::no_crossing, "a fixed point has no crossing and no partition");
    return CycleKey{c.base, degree(c), static_cast<int>(c.size()), partition_of(c), digit_portrait(c)};
}

std::optional<Cycle> reconstruct_cycle(const CycleKey& input) {
    validate_key(input);
    CycleKey key = input;
    for (auto& block : key.partition.blocks) std::sort(block.begin(), block.end());

    const int d = key.base;
    const int n = key.size;
    const int m = key.degree;
    const auto& blocks = key.partition.blocks;

    // Crossing positions: consecutive crossings are |P_t| apart.
    std::vector<int> crossing(static_cast<std::size_t>(m));
    crossing[0] = key.partition.i1;
    for (int t = 1; t < m; ++t)
        crossing[static_cast<std::size_t>(t)] = crossing[static_cast<std::size_t>(t - 1)] + static_cast<int>(blocks[static_cast<std::size_t>(t - 1)].size());

    // sigma(r): positions between crossings t and t+1 take block t in
    // increasing order; the wrap block continues past n back to i1.
    std::vector<int> sigma(static_cast<std::size_t>(n));
    const int last = crossing.back();
    for (int r = 1; r <= n; ++r) {
        int value = 0;
        if (r > last) {
            value = blocks.back()[static_cast<std::size_t>(r - last - 1)];
        } else if (r <= crossing.front()) {
            value = blocks.back()[static_cast<std::size_t>(r + n - last - 1)];
        } else {
            const auto t = static_cast<std::size_t>(std::upper_bound(crossing.begin(), crossing.end(), r - 1) - crossing.begin() - 1);
            value = blocks[t][static_cast<std::size_t>(r - crossing[t] - 1)];
        }
        sigma[static_cast<std::size_t>(r - 1)] = value;
    }

    // b(r) is the leading digit of c_r: j with F(j-1) < r <= F(j).
    std::vector<std::uint8_t> lead(static_cast<std::size_t>(n));
    {
        int j = 0;
        for (int r = 1; r <= n; ++r) {
            while (r > key.portrait.values[static_cast<std::size_t>(j)]) ++j;
            lead[static_cast<std::size_t>(r - 1)] = static_cast<std::uint8_t>(j);
        }
    }

    // c_r = (0.\overline{b(r) b(sigma r) ... b(sigma^{n-1} r)})_d
    std::vector<Rational> points;
    points.reserve(static_cast<std::size_t>(n));
    DigitWord first_word{d, {}};
    for (int r = 1; r <= n; ++r) {
        DigitWord word{d, std::vector<std::uint8_t>(static_cast<std::size_t>(n))};
        int s = r;
        for (int k = 0; k < n; ++k) {
            word.digits[static_cast<std::size_t>(k)] = lead[static_cast<std::size_t>(s - 1)];
            s = sigma[static_cast<std::size_t>(s - 1)];
        }
        if (r == 1) first_word = word;
        points.push_back(value_of_periodic(word));
    }

    if (!std::is_sorted(points.begin(), points.end()) || std::adjacent_find(points.begin(), points.end()) != points.end())
        return std::nullopt;
    for (int r = 1; r <= n; ++r)
        if (dmap_step(points[static_cast<std::size_t>(r - 1)], d) != points[static_cast<std::size_t>(sigma[static_cast<std::size_t>(r - 1)] - 1)])
            return std::nullopt;
    if (!is_primitive(first_word.digits)) return std::nullopt;

    Cycle c = cycle_from_word(first_word);
    if (c.points != points || c.sigma != sigma) return std::nullopt;
    const auto cross = crossings(c);
    if (static_cast<int>(cross.size()) != m || cross.indices != crossing) return std::nullopt;
    if (partition_of(c) != key.partition) return std::nullopt;
    if (digit_portrait(c) != key.portrait) return std::nullopt;
    return c;
}

}  // namespace dmap
