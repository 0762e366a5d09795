#include "dmap/enumeration.hpp"

#include <algorithm>
#include <thread>

#include "dmap/degree.hpp"
#include "dmap/error.hpp"

namespace dmap {

namespace {

constexpr int kShardDepth = 6;

// Recursive Fredricksen-Kessler-Maiorana generation of prenecklaces, keeping
// the Lyndon words of length exactly n. Subtrees rooted at depth
// min(n, kShardDepth) are dealt round-robin to shards.
class LyndonGenerator {
public:
    LyndonGenerator(int d, int n, Shard shard, const WordVisitor& visit)
        : d_(d), n_(n), shard_(shard), shard_depth_(std::min(n, kShardDepth)),
          word_(static_cast<std::size_t>(n) + 1, 0), visit_(visit) {}

    void run() { generate(1, 1); }

private:
    void generate(int t, int p) {
        if (shard_.count > 1 && t == shard_depth_ + 1) {
            if (subtree_++ % shard_.count != shard_.index) return;
        }
        if (t > n_) {
            if (p == n_ && !(n_ == 1 && word_[1] == d_ - 1))
                visit_(std::span<const std::uint8_t>(word_.data() + 1, static_cast<std::size_t>(n_)));
            return;
        }
        const auto inherited = word_[static_cast<std::size_t>(t - p)];
        word_[static_cast<std::size_t>(t)] = inherited;
        generate(t + 1, p);
        for (int j = inherited + 1; j < d_; ++j) {
            word_[static_cast<std::size_t>(t)] = static_cast<std::uint8_t>(j);
            generate(t + 1, t);
        }
    }

    int d_;
    int n_;
    Shard shard_;
    int shard_depth_;
    std::size_t subtree_ = 0;
    std::vector<std::uint8_t> word_;
    const WordVisitor& visit_;
};

void fill_ratios(CensusRow& row, BigInt (*bound)(int, int, int)) {
    row.bound.clear();
    row.bound_ratio.clear();
    row.total = 0;
    for (const auto& [m, count] : row.counts_by_degree) {
        row.total += count;
        row.bound[m] = bound(row.size, row.base, m);
        // Degree-0 precycles with n > 1 have a zero bound; no ratio is defined.
        if (!row.bound[m].is_zero()) row.bound_ratio[m] = Fraction(BigInt(count), row.bound[m]);
    }
}

BigInt pow_or_one(int base, int exponent) {
    // 0^0 = 1; only reached for the degree-0 fixed points at n = 1.
    if (exponent <= 0) return 1;
    return ipow(base, static_cast<std::size_t>(exponent));
}

}  // namespace

void check_work(int d, int n, const EnumerationOptions& options) {
    check_base(d);
    if (n < 1) throw Error(Errc::invalid_input, "size n must be at least 1");
    if (options.shard.count == 0 || options.shard.index >= options.shard.count)
        throw Error(Errc::invalid_input, "shard index must be below shard count");
    if (options.work_limit == 0) throw Error(Errc::invalid_input, "work limit must be positive");
    if (ipow(d, static_cast<std::size_t>(n)) > options.work_limit)
        throw Error(Errc::work_limit_exceeded, std::to_string(d) + "^" + std::to_string(n) + " exceeds the work limit of " +
                                                   std::to_string(options.work_limit));
}

void for_each_cycle_word(int d, int n, const EnumerationOptions& options, const WordVisitor& visit) {
    check_work(d, n, options);
    LyndonGenerator(d, n, options.shard, visit).run();
}

void enumerate_cycles(int d, int n, const EnumerationOptions& options, const std::function<void(const Cycle&)>& visit) {
    for_each_cycle_word(d, n, options, [&](std::span<const std::uint8_t> word) {
        visit(cycle_from_word(DigitWord{d, {word.begin(), word.end()}}));
    });
}

std::vector<Cycle> cycles_of_size(int d, int n, const EnumerationOptions& options) {
    std::vector<Cycle> out;
    enumerate_cycles(d, n, options, [&](const Cycle& c) { out.push_back(c); });
    return out;
}

void enumerate_precycles(int d, int n, const EnumerationOptions& options,
                         const std::function<void(const Precycle&)>& visit) {
    check_work(d, n, options);
    // Cycles (n1 = 0) follow the cycle-word shards; transient classes are
    // dealt round-robin by (period word, rotation).
    for_each_cycle_word(d, n, options, [&](std::span<const std::uint8_t> word) {
        visit(orbit(value_of_periodic(DigitWord{d, {word.begin(), word.end()}}), d));
    });

    std::size_t item = 0;
    for (int period = 1; period < n; ++period) {
        const int transient = n - period;
        const auto transient_words = static_cast<std::uint64_t>(ipow(d, static_cast<std::size_t>(transient)));
        EnumerationOptions unsharded{options.work_limit, {}};
        for_each_cycle_word(d, period, unsharded, [&](std::span<const std::uint8_t> word) {
            const DigitWord base_word{d, {word.begin(), word.end()}};
            for (int k = 0; k < period; ++k) {
                if (item++ % options.shard.count != options.shard.index) continue;
                const DigitWord tail = rotate_left(base_word, static_cast<std::size_t>(k));
                DigitWord head{d, std::vector<std::uint8_t>(static_cast<std::size_t>(transient))};
                for (std::uint64_t code = 0; code < transient_words; ++code) {
                    std::uint64_t rest = code;
                    for (int i = transient - 1; i >= 0; --i) {
                        head.digits[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(rest % static_cast<std::uint64_t>(d));
                        rest /= static_cast<std::uint64_t>(d);
                    }
                    // Minimal preperiod: the transient cannot absorb into the period.
                    if (head.digits.back() == tail.digits.back()) continue;
                    visit(orbit(value_of_eventually_periodic(head, tail), d));
                }
            }
        });
    }
}

BigInt cycle_count_bound(int n, int d, int m) {
    return pow_or_one(n, d - m + 1) * pow_or_one(m, n - 1);
}

BigInt precycle_count_bound(int n, int d, int m) {
    return pow_or_one(n, d - m + 3) * pow_or_one(m, n - 1);
}

CensusRow census(int d, int n, const EnumerationOptions& options) {
    CensusRow row;
    row.base = d;
    row.size = n;
    for_each_cycle_word(d, n, options, [&](std::span<const std::uint8_t> word) {
        ++row.counts_by_degree[crossing_number_of_word(word, d)];
    });
    fill_ratios(row, &cycle_count_bound);
    return row;
}

CensusRow precycle_census(int d, int n, const EnumerationOptions& options) {
    CensusRow row;
    row.base = d;
    row.size = n;
    enumerate_precycles(d, n, options, [&](const Precycle& p) { ++row.counts_by_degree[degree(p)]; });
    fill_ratios(row, &precycle_count_bound);
    return row;
}

CensusRow merge_census(std::span<const CensusRow> shards, BigInt (*bound)(int, int, int)) {
    if (shards.empty()) throw Error(Errc::invalid_input, "no census rows to merge");
    CensusRow merged;
    merged.base = shards.front().base;
    merged.size = shards.front().size;
    for (const auto& row : shards) {
        if (row.base != merged.base || row.size != merged.size)
            throw Error(Errc::invalid_input, "cannot merge census rows of different (d, n)");
        for (const auto& [m, count] : row.counts_by_degree) merged.counts_by_degree[m] += count;
    }
    fill_ratios(merged, bound);
    return merged;
}

CensusRow parallel_census(int d, int n, std::size_t jobs, std::uint64_t work_limit, bool precycles) {
    jobs = std::max<std::size_t>(jobs, 1);
    check_work(d, n, {work_limit, {}});
    std::vector<CensusRow> rows(jobs);
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (std::size_t i = 0; i < jobs; ++i) {
        workers.emplace_back([&, i] {
            const EnumerationOptions options{work_limit, {i, jobs}};
            rows[i] = precycles ? precycle_census(d, n, options) : census(d, n, options);
        });
    }
    for (auto& worker : workers) worker.join();
    return merge_census(rows, precycles ? &precycle_count_bound : &cycle_count_bound);
}

}  // namespace dmap
