#include "dmap/orbits.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "dmap/error.hpp"

namespace dmap {

namespace {

std::vector<Rational> sorted_unique(std::span<const Rational> points) {
    std::vector<Rational> out(points.begin(), points.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Successor positions of a sorted set; 0 where the image escapes.
std::vector<int> successor_positions(const std::vector<Rational>& sorted, int d, const Rational** escaping) {
    std::vector<int> succ(sorted.size(), 0);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const Rational image = dmap_step(sorted[i], d);
        const auto it = std::lower_bound(sorted.begin(), sorted.end(), image);
        if (it == sorted.end() || *it != image) {
            if (escaping && !*escaping) *escaping = &sorted[i];
            continue;
        }
        succ[i] = static_cast<int>(it - sorted.begin()) + 1;
    }
    return succ;
}

bool transitive(const std::vector<int>& succ) {
    const std::size_t n = succ.size();
    std::vector<bool> seen(n, false);
    int r = 1;
    for (std::size_t step = 0; step < n; ++step) {
        if (r == 0 || seen[static_cast<std::size_t>(r - 1)]) return false;
        seen[static_cast<std::size_t>(r - 1)] = true;
        r = succ[static_cast<std::size_t>(r - 1)];
    }
    return r == 1;
}

}  // namespace

Precycle orbit(const Rational& x, int d) {
    check_base(d);
    std::map<Rational, std::size_t> first_seen;
    std::vector<Rational> sequence;
    Rational current = x;
    std::size_t repeat_at = 0;
    while (true) {
        const auto [it, inserted] = first_seen.emplace(current, sequence.size());
        if (!inserted) {
            repeat_at = it->second;
            break;
        }
        sequence.push_back(current);
        current = dmap_step(current, d);
    }

    Precycle out;
    out.base = d;
    out.start = x;
    out.preperiod_len = repeat_at;
    out.period_len = sequence.size() - repeat_at;
    // std::map iterates in sorted order; reuse it for positions.
    std::vector<std::size_t> position_of_step(sequence.size());
    out.points.reserve(sequence.size());
    for (const auto& [point, step] : first_seen) {
        position_of_step[step] = out.points.size();
        out.points.push_back(point);
    }
    out.successor.resize(sequence.size());
    for (std::size_t step = 0; step < sequence.size(); ++step) {
        const std::size_t next_step = step + 1 < sequence.size() ? step + 1 : repeat_at;
        out.successor[position_of_step[step]] = static_cast<int>(position_of_step[next_step]) + 1;
    }
    return out;
}

Cycle cycle_from_word(const DigitWord& word) {
    check_base(word.base);
    const int d = word.base;
    if (word.empty()) throw Error(Errc::invalid_input, "cycle word must be nonempty");
    for (auto digit : word.digits)
        if (digit >= d) throw Error(Errc::invalid_digit, "digit out of range in '" + to_string(word) + "'");
    if (!is_primitive(word.digits)) throw Error(Errc::not_primitive, "word '" + to_string(word) + "' has a proper period");

    const std::size_t n = word.size();
    if (n == 1) {
        Cycle c;
        c.base = d;
        c.word = word.digits[0] == d - 1 ? DigitWord{d, {0}} : word;
        c.points = {value_of_periodic(c.word)};
        c.sigma = {1};
        return c;
    }

    // Rotation k has numerator v_k over d^n - 1, and v_{k+1} = d v_k mod (d^n - 1).
    const BigInt den = ipow(d, n) - 1;
    std::vector<BigInt> numerators(n);
    numerators[0] = word_integer(word.digits, d);
    for (std::size_t k = 1; k < n; ++k) numerators[k] = (numerators[k - 1] * d) % den;

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return numerators[a] < numerators[b]; });
    std::vector<int> rank(n);
    for (std::size_t pos = 0; pos < n; ++pos) rank[order[pos]] = static_cast<int>(pos) + 1;

    Cycle c;
    c.base = d;
    c.word = rotate_left(word, order[0]);
    c.points.reserve(n);
    c.sigma.reserve(n);
    for (std::size_t pos = 0; pos < n; ++pos) {
        c.points.emplace_back(numerators[order[pos]], den);
        c.sigma.push_back(rank[(order[pos] + 1) % n]);
    }
    return c;
}

bool is_cycle(std::span<const Rational> points, int d) {
    check_base(d);
    if (points.empty()) return false;
    const auto sorted = sorted_unique(points);
    const Rational* escaping = nullptr;
    const auto succ = successor_positions(sorted, d, &escaping);
    return !escaping && transitive(succ);
}

Cycle cycle_from_points(std::span<const Rational> points, int d) {
    check_base(d);
    if (points.empty()) throw Error(Errc::invalid_input, "empty point set");
    const auto sorted = sorted_unique(points);
    const Rational* escaping = nullptr;
    const auto succ = successor_positions(sorted, d, &escaping);
    if (escaping)
        throw Error(Errc::not_a_cycle, "point " + escaping->str() + " maps to " + dmap_step(*escaping, d).str() +
                                           ", outside the set");
    if (!transitive(succ)) throw Error(Errc::not_a_cycle, "the map does not act transitively on the set");
    return cycle_from_word(least_rotation(expansion(sorted.front(), d, sorted.size())));
}

Precycle precycle_from_points(std::span<const Rational> points, int d) {
    check_base(d);
    if (points.empty()) throw Error(Errc::invalid_input, "empty point set");
    const auto sorted = sorted_unique(points);
    const Rational* escaping = nullptr;
    const auto succ = successor_positions(sorted, d, &escaping);
    if (escaping)
        throw Error(Errc::not_a_cycle, "point " + escaping->str() + " maps to " + dmap_step(*escaping, d).str() +
                                           ", outside the set");
    std::vector<int> preimages(sorted.size(), 0);
    for (int s : succ) ++preimages[static_cast<std::size_t>(s - 1)];
    std::vector<std::size_t> roots;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (preimages[i] == 0) roots.push_back(i);
    if (roots.size() > 1) throw Error(Errc::not_a_cycle, "the set is not the forward orbit of a single point");
    Precycle result = orbit(sorted[roots.empty() ? 0 : roots.front()], d);
    if (result.points != sorted) throw Error(Errc::not_a_cycle, "the set is not the forward orbit of a single point");
    return result;
}

}  // namespace dmap
