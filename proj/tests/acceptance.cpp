// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "dmap/constructors.hpp"
#include "dmap/degree.hpp"
#include "dmap/dimension.hpp"
#include "dmap/enumeration.hpp"
#include "dmap/orbits.hpp"
#include "oracles.hpp"

using namespace dmap;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void expect(bool ok, const std::string& what) {
        if (!ok && pass) detail << "first failure: " << what << "; ";
        pass = pass && ok;
    }
};

Rational q(const char* text) { return Rational::parse(text); }

std::vector<Rational> qs(std::initializer_list<const char*> items) {
    std::vector<Rational> out;
    for (const char* s : items) out.push_back(q(s));
    return out;
}

std::vector<oracle::Q> fractions(const std::vector<Rational>& points) {
    std::vector<oracle::Q> out;
    for (const auto& p : points) out.push_back(p.to_fraction());
    return out;
}

std::size_t worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

// Runs `visit` over every cycle of (d, n), one shard per thread. `visit`
// returns an empty string on success, otherwise a description of the failure.
std::pair<std::uint64_t, std::string> check_all_cycles(int d, int n,
                                                       const std::function<std::string(const Cycle&)>& visit) {
    const std::size_t jobs = worker_count();
    std::atomic<std::uint64_t> seen{0};
    std::mutex lock;
    std::string failure;
    std::vector<std::thread> threads;
    for (std::size_t i = 0; i < jobs; ++i) {
        threads.emplace_back([&, i] {
            enumerate_cycles(d, n, {kDefaultWorkLimit, {i, jobs}}, [&](const Cycle& c) {
                ++seen;
                auto why = visit(c);
                if (!why.empty()) {
                    std::lock_guard guard(lock);
                    if (failure.empty()) failure = why;
                }
            });
        });
    }
    for (auto& t : threads) t.join();
    return {seen.load(), failure};
}

Outcome golden_examples() {
    Outcome out;
    out.expect(degree(cycle_from_points(qs({"3/7", "5/7", "6/7"}), 2)) == 1, "degree {3/7,5/7,6/7}");
    out.expect(degree(cycle_from_points(qs({"1/5", "2/5", "3/5", "4/5"}), 3)) == 2, "degree {1/5..4/5} d=3");
    const auto c4 = cycle_from_word(parse_word("0012", 4));
    out.expect(digit_portrait(c4).values == std::vector<int>{2, 3, 4, 4}, "portrait 0012");
    out.expect(dig(c4) == 3, "dig 0012");
    const auto c3 = cycle_from_word(parse_word("00102", 3));
    const auto p = partition_of(c3);
    out.expect(p.blocks == std::vector<std::vector<int>>{{3}, {1, 2, 4, 5}} && p.i1 == 3, "partition 00102");
    out.expect(crossings(c3).indices == std::vector<int>{3, 4}, "crossings 00102");
    const auto o = orbit(q("5/6"), 2);
    out.expect(o.points == qs({"1/3", "2/3", "5/6"}), "orbit 5/6 points");
    out.expect(o.preperiod_len == 1 && o.period_len == 2, "orbit 5/6 lengths");
    out.detail << "5 worked examples";
    return out;
}

Outcome witness_maps() {
    Outcome out;
    std::uint64_t total = 0;
    for (int d = 2; d <= 4; ++d) {
        for (int n = 1; n <= 10; ++n) {
            auto [count, why] = check_all_cycles(d, n, [](const Cycle& c) -> std::string {
                const auto crossing_count = static_cast<long>(crossings(c).size());
                if (c.size() == 1) return crossing_count == 0 ? "" : "fixed point with a crossing";
                const auto map = witness_map(c);
                if (map_degree(map) != crossing_count) return "degree mismatch at " + to_string(c.word);
                for (std::size_t r = 0; r < c.size(); ++r)
                    if (evaluate(map, c.points[r]) != dmap_step(c.points[r], c.base))
                        return "witness disagrees with the d-map at " + to_string(c.word);
                return "";
            });
            total += count;
            out.expect(why.empty(), why);
        }
    }
    out.detail << total << " cycles, d<=4, n<=10";
    return out;
}

Outcome degree_vs_dig() {
    Outcome out;
    std::uint64_t total = 0;
    std::atomic<std::uint64_t> tight{0};
    for (int d = 2; d <= 4; ++d) {
        for (int n = 1; n <= 12; ++n) {
            auto [count, why] = check_all_cycles(d, n, [&](const Cycle& c) -> std::string {
                const int eta = degree(c);
                const int digits = dig(c);
                if (eta == digits) ++tight;
                return eta <= digits ? "" : "degree exceeds dig at " + to_string(c.word);
            });
            total += count;
            out.expect(why.empty(), why);
        }
    }
    out.detail << total << " cycles, d<=4, n<=12; equality in " << tight.load();
    return out;
}

Outcome round_trip() {
    Outcome out;
    std::uint64_t total = 0;
    for (int d = 2; d <= 4; ++d) {
        for (int n = 2; n <= 12; ++n) {
            auto [count, why] = check_all_cycles(d, n, [](const Cycle& c) -> std::string {
                const auto back = reconstruct_cycle(extract_key(c));
                if (!back) return "no reconstruction for " + to_string(c.word);
                return *back == c ? "" : "wrong reconstruction for " + to_string(c.word);
            });
            total += count;
            out.expect(why.empty(), why);
        }
    }
    const CycleKey key{3, 2, 5, {{{3}, {1, 2, 4, 5}}, 3}, {3, {3, 4, 5}}};
    const auto c = reconstruct_cycle(key);
    out.expect(c && *c == cycle_from_word(parse_word("00102", 3)), "00102 key");
    out.expect(c && c->sigma == std::vector<int>{2, 4, 5, 3, 1}, "00102 sigma");
    out.detail << total << " cycles with n>=2, d<=4, n<=12, plus the 00102 key";
    return out;
}

Outcome approximations() {
    Outcome out;
    std::mt19937_64 rng(20240601);
    int done = 0;
    while (done < 1000) {
        const int d = 2 + static_cast<int>(rng() % 5);
        const int m = 2 + static_cast<int>(rng() % static_cast<unsigned>(d - 1));
        std::vector<int> all(static_cast<std::size_t>(d));
        std::iota(all.begin(), all.end(), 0);
        std::shuffle(all.begin(), all.end(), rng);
        const std::vector<int> digits(all.begin(), all.begin() + m);
        const std::size_t qlen = 1 + rng() % 6;
        auto draw = [&](std::size_t len) {
            DigitWord w{d, {}};
            for (std::size_t i = 0; i < len; ++i) w.digits.push_back(static_cast<std::uint8_t>(digits[rng() % static_cast<unsigned>(m)]));
            return w;
        };
        const DigitWord prefix = draw(qlen);
        // alpha: a point of the digit-set Cantor set whose expansion starts with the prefix
        const Rational alpha = value_of_eventually_periodic(prefix, draw(1 + rng() % 6));
        const int block_len = minimal_block_len(prefix, digits) + static_cast<int>(rng() % 3);
        const auto a = approximate_with_cycle({d, digits, prefix, block_len});

        const auto eta = oracle::crossings(fractions(a.cycle.points), d).size();
        out.expect(eta == static_cast<std::size_t>(m), "degree " + std::to_string(eta) + " != " + std::to_string(m));
        const auto size = qlen + 2 * static_cast<std::size_t>(block_len) * static_cast<std::size_t>(m - 1) + 1;
        out.expect(a.cycle.size() == size, "cycle size");
        // circle distance: alpha = 0 when its tail is all (d-1)
        Fraction gap = abs(a.point.to_fraction() - alpha.to_fraction());
        gap = std::min(gap, Fraction(1) - gap);
        out.expect(gap < Fraction(1, ipow(d, qlen)),
                   "distance " + to_string(from_fraction(gap)) + " for prefix " + to_string(prefix) + " d=" + std::to_string(d) +
                       " point " + to_string(a.point) + " alpha " + to_string(alpha));
        out.expect(is_cycle(a.cycle.points, d), "output is a cycle");
        ++done;
    }
    out.detail << done << " random requests, d<=6, q<=6";
    return out;
}

Outcome census_counts() {
    Outcome out;
    const std::vector<std::uint64_t> expected{1, 1, 2, 3, 6, 9};
    for (int n = 1; n <= 6; ++n) {
        const auto row = census(2, n);
        out.expect(row.total == expected[static_cast<std::size_t>(n - 1)], "d=2 total at n=" + std::to_string(n));
        out.expect(oracle::Int(row.total) == oracle::cycle_count(2, n), "necklace formula at n=" + std::to_string(n));
    }
    out.expect(census(2, 3).counts_by_degree == std::map<int, std::uint64_t>{{1, 2}}, "census(2,3)");
    out.expect(census(2, 4).counts_by_degree == std::map<int, std::uint64_t>{{1, 2}, {2, 1}}, "census(2,4)");

    const Fraction constant = 1;
    Fraction worst = 0;
    std::string where;
    for (int d = 2; d <= 4; ++d) {
        for (int n = 1; n <= 14; ++n) {
            const auto row = parallel_census(d, n, worker_count(), std::uint64_t{1} << 30);
            out.expect(oracle::Int(row.total) == oracle::cycle_count(d, n),
                       "necklace formula at d=" + std::to_string(d) + " n=" + std::to_string(n));
            if (n == 1) continue;  // the count bound covers n > 1 and m >= 1
            for (const auto& [m, ratio] : row.bound_ratio) {
                if (m >= 1 && ratio > worst) {
                    worst = ratio;
                    where = "d=" + std::to_string(d) + " n=" + std::to_string(n) + " m=" + std::to_string(m);
                }
            }
        }
    }
    out.expect(worst <= constant, "bound ratio above the pinned constant");
    out.detail << "max ratio " << static_cast<double>(worst) << " at " << where << " (constant " << static_cast<double>(constant) << ")";
    return out;
}

Outcome cantor_fits() {
    Outcome out;
    double worst_residual = 0;
    double worst_error = 0;
    for (int d = 2; d <= 5; ++d) {
        for (int m = 1; m <= d; ++m) {
            std::vector<CoverReport> reports;
            for (int k = 1; k <= 10; ++k) reports.push_back(cantor_boxes(m, d, k));
            const auto fit = fit_dimension(reports);
            const double target = std::log(m) / std::log(d);
            worst_residual = std::max(worst_residual, fit.max_residual);
            worst_error = std::max(worst_error, std::abs(fit.slope - target));
        }
    }
    out.expect(worst_residual < 1e-9, "residual");
    out.expect(worst_error < 1e-9, "slope");
    out.detail << "max |beta - log m/log d| " << worst_error << ", max residual " << worst_residual;
    return out;
}

double slope_of(int d, int m, int n_max) {
    const auto est = estimate_cycle_dimension(d, m, n_max, n_max, std::uint64_t{1} << 30);
    return est.fit ? est.fit->slope : std::nan("");
}

Outcome cycle_dimension() {
    Outcome out;
    const double cantor = std::log(2.0) / std::log(3.0);
    char buf[160];

    std::vector<double> e32;
    for (int n_max = 8; n_max <= 12; ++n_max) e32.push_back(slope_of(3, 2, n_max));
    bool improves = true;
    for (std::size_t i = 1; i < e32.size(); ++i)
        improves = improves && std::abs(e32[i] - cantor) <= std::abs(e32[i - 1] - cantor);
    const bool a_close = std::abs(e32.back() - cantor) < 0.08;
    out.expect(a_close, "E(3,2) slope not within 0.08");
    out.expect(improves, "E(3,2) slope not improving in n_max");
    std::snprintf(buf, sizeof buf, "E(3,2) n_max 8..12: %.4f %.4f %.4f %.4f %.4f [%s]; ", e32[0], e32[1], e32[2], e32[3],
                  e32[4], a_close && improves ? "ok" : "off");
    out.detail << buf;

    const double e22 = slope_of(2, 2, 12);
    const bool b_ok = std::abs(e22 - 1.0) < 0.05;
    out.expect(b_ok, "E(2,2) slope not within 0.05 of 1");
    std::snprintf(buf, sizeof buf, "E(2,2) n_max 12: %.4f [%s]; ", e22, b_ok ? "ok" : "off");
    out.detail << buf;

    std::vector<double> e21;
    for (int n_max = 10; n_max <= 14; ++n_max) e21.push_back(slope_of(2, 1, n_max));
    bool decreasing = true;
    for (std::size_t i = 1; i < e21.size(); ++i) decreasing = decreasing && e21[i] < e21[i - 1];
    const bool c_small = e21.back() < 0.25;
    out.expect(c_small, "E(2,1) slope not below 0.25");
    out.expect(decreasing, "E(2,1) slope not decreasing");
    std::snprintf(buf, sizeof buf, "E(2,1) n_max 10..14: %.4f %.4f %.4f %.4f %.4f [%s]", e21[0], e21[1], e21[2], e21[3],
                  e21[4], c_small && decreasing ? "ok" : "off");
    out.detail << buf;
    return out;
}

Outcome precycles() {
    Outcome out;
    const auto p = precycle_from_points(qs({"1/3", "2/3", "5/6"}), 2);
    out.expect(degree(p) == 1, "degree {1/3,2/3,5/6}");

    const auto scan = oracle::precycle_scan_base2(8, 8);
    std::ostringstream totals;
    for (int n = 1; n <= 8; ++n) {
        const auto row = precycle_census(2, n);
        const auto it = scan.find(static_cast<std::size_t>(n));
        const std::uint64_t brute = it == scan.end() ? 0 : it->second.size();
        out.expect(row.total == brute, "precycle total at n=" + std::to_string(n));
        totals << (n > 1 ? "," : "") << row.total;
    }
    out.detail << "totals n=1..8: " << totals.str();
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {1, "worked examples", golden_examples},
        {2, "witness maps realise the crossing number", witness_maps},
        {3, "degree bounded by dig", degree_vs_dig},
        {4, "partition/portrait round trip", round_trip},
        {5, "cycle approximation of digit-set points", approximations},
        {6, "cycle census and count bound", census_counts},
        {7, "cantor set dimension", cantor_fits},
        {8, "cycle set dimension estimates", cycle_dimension},
        {9, "precycle census", precycles},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail << "exception: " << e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %d %s (%.2f s): %s\n", out.pass ? "PASS" : "FAIL", c.id, c.name, seconds, out.detail.str().c_str());
        std::fflush(stdout);
        failures += out.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
    return failures == 0 ? 0 : 1;
}
