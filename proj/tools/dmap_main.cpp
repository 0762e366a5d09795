// Command-line front end. Every subcommand parses its flags, calls one
// library entry point and serializes the result.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dmap/constructors.hpp"
#include "dmap/degree.hpp"
#include "dmap/dimension.hpp"
#include "dmap/enumeration.hpp"
#include "dmap/error.hpp"
#include "dmap/orbits.hpp"
#include "dmap/serialize.hpp"

namespace {

using nlohmann::json;

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> out;
    for (const auto& token : split(text, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size() || token.empty())
            throw dmap::Error(dmap::Errc::invalid_input, "not an integer: '" + token + "'");
        out.push_back(value);
    }
    return out;
}

std::vector<dmap::Rational> parse_points(const std::string& text) {
    std::vector<dmap::Rational> out;
    for (const auto& token : split(text, ',')) out.push_back(dmap::Rational::parse(token));
    return out;
}

std::uint64_t default_work_limit() {
    if (const char* env = std::getenv("DMAP_WORK_LIMIT")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw dmap::Error(dmap::Errc::invalid_input, std::string("DMAP_WORK_LIMIT is not a number: ") + env);
        }
    }
    return dmap::kDefaultWorkLimit;
}

struct Options {
    int d = 2;
    std::string point;
    std::string cycle;
    bool precycle = false;
    int n = 1;
    int n_max = 1;
    std::optional<int> degree;
    bool precycles = false;
    std::string format;
    std::optional<std::uint64_t> work_limit;
    std::size_t shard_index = 0;
    std::size_t shard_count = 1;
    std::size_t jobs = 1;
    std::string digits;
    std::string prefix;
    std::optional<int> pad;
    int m = 1;
    std::string blocks;
    int i1 = 1;
    std::string portrait;
    std::string mode = "cantor";
    std::optional<int> depth;
    std::string summary;
};

dmap::EnumerationOptions enumeration_options(const Options& o) {
    return {o.work_limit.value_or(default_work_limit()), {o.shard_index, o.shard_count}};
}

// Point sets given with --cycle are cycles unless --precycle is set.
json orbit_record_from_points(const Options& o) {
    const auto points = parse_points(o.cycle);
    if (o.precycle) {
        const auto p = dmap::precycle_from_points(points, o.d);
        return p.is_cycle() ? dmap::cycle_record(dmap::cycle_from_points(points, o.d)) : dmap::precycle_record(p);
    }
    return dmap::cycle_record(dmap::cycle_from_points(points, o.d));
}

int run_orbit(const Options& o) {
    std::cout << dmap::precycle_record(dmap::orbit(dmap::Rational::parse(o.point), o.d)).dump() << "\n";
    return 0;
}

int run_degree(const Options& o) {
    const auto record = orbit_record_from_points(o);
    json out{{"degree", record["degree"]}, {"crossings", record["crossings"]}};
    if (record.contains("degree_basis")) out["degree_basis"] = record["degree_basis"];
    std::cout << out.dump() << "\n";
    return 0;
}

int run_portrait(const Options& o) {
    const auto record = orbit_record_from_points(o);
    std::cout << json{{"portrait", record["portrait"]}, {"dig", record["dig"]}}.dump() << "\n";
    return 0;
}

int run_partition(const Options& o) {
    const auto record = orbit_record_from_points(o);
    if (record["partition"].is_null()) throw dmap::Error(dmap::Errc::no_crossing, "the orbit has no crossing");
    std::cout << json{{"partition", record["partition"]}, {"crossings", record["crossings"]}}.dump() << "\n";
    return 0;
}

int run_witness(const Options& o) {
    const auto c = dmap::cycle_from_points(parse_points(o.cycle), o.d);
    const auto map = dmap::witness_map(c);
    auto pieces = json::array();
    for (const auto& piece : map.pieces)
        pieces.push_back({piece.x0.str(), piece.x1.str(), piece.y0.str(), piece.y1.str()});
    std::cout << json{{"map_degree", dmap::map_degree(map)}, {"crossing_number", dmap::degree(c)}, {"pieces", pieces}}.dump() << "\n";
    return 0;
}

int run_enumerate(const Options& o) {
    const auto options = enumeration_options(o);
    const std::string format = o.format.empty() ? "jsonl" : o.format;
    if (format == "csv") {
        const auto row = o.precycles ? dmap::precycle_census(o.d, o.n, options) : dmap::census(o.d, o.n, options);
        std::cout << dmap::census_csv_header() << "\n";
        for (const auto& line : dmap::census_csv_rows(row))
            if (!o.degree || line.find("," + std::to_string(*o.degree) + ",") != std::string::npos) std::cout << line << "\n";
        return 0;
    }
    if (format != "jsonl") throw CLI::ValidationError("--format", "enumerate supports jsonl or csv");
    if (o.precycles) {
        dmap::enumerate_precycles(o.d, o.n, options, [&](const dmap::Precycle& p) {
            if (!o.degree || dmap::degree(p) == *o.degree)
                std::cout << (p.is_cycle() ? dmap::cycle_record(dmap::cycle_from_points(p.points, p.base)) : dmap::precycle_record(p)).dump()
                          << "\n";
        });
    } else {
        dmap::enumerate_cycles(o.d, o.n, options, [&](const dmap::Cycle& c) {
            if (!o.degree || dmap::degree(c) == *o.degree) std::cout << dmap::cycle_record(c).dump() << "\n";
        });
    }
    return 0;
}

int run_census(const Options& o) {
    const auto limit = o.work_limit.value_or(default_work_limit());
    std::cout << dmap::census_csv_header() << "\n";
    for (int n = 1; n <= o.n_max; ++n) {
        const auto row = o.jobs > 1 ? dmap::parallel_census(o.d, n, o.jobs, limit, o.precycles)
                         : o.precycles ? dmap::precycle_census(o.d, n, {limit, {o.shard_index, o.shard_count}})
                                       : dmap::census(o.d, n, {limit, {o.shard_index, o.shard_count}});
        for (const auto& line : dmap::census_csv_rows(row)) std::cout << line << "\n";
    }
    return 0;
}

int run_construct(const Options& o) {
    dmap::ApproximationRequest request;
    request.base = o.d;
    request.digit_set = parse_ints(o.digits);
    request.prefix = dmap::parse_word(o.prefix, o.d);
    request.block_len = o.pad.value_or(dmap::minimal_block_len(request.prefix, request.digit_set));
    const auto result = dmap::approximate_with_cycle(request);
    std::cout << json{{"point", result.point.str()},
                      {"word", dmap::to_string(result.word)},
                      {"block_len", request.block_len},
                      {"cycle", dmap::cycle_record(result.cycle)}}
                     .dump()
              << "\n";
    return 0;
}

int run_reconstruct(const Options& o) {
    dmap::CycleKey key;
    key.base = o.d;
    key.degree = o.m;
    key.size = o.n;
    std::string blocks = o.blocks;
    std::replace(blocks.begin(), blocks.end(), '/', ';');
    for (const auto& block : split(blocks, ';')) key.partition.blocks.push_back(parse_ints(block));
    key.partition.i1 = o.i1;
    key.portrait = {o.d, parse_ints(o.portrait)};
    const auto cycle = dmap::reconstruct_cycle(key);
    std::cout << (cycle ? dmap::cycle_record(*cycle) : json(nullptr)).dump() << "\n";
    return 0;
}

int run_dimension(const Options& o) {
    dmap::DimensionEstimate estimate;
    if (o.mode == "cantor") {
        estimate = dmap::estimate_cantor_dimension(o.m, o.d, o.depth.value_or(10));
    } else if (o.mode == "cycles") {
        estimate = dmap::estimate_cycle_dimension(o.d, o.m, o.n_max, o.depth.value_or(o.n_max), o.work_limit.value_or(default_work_limit()));
    } else {
        throw CLI::ValidationError("--mode", "must be cantor or cycles");
    }
    json summary = estimate.fit ? dmap::fit_record(*estimate.fit, estimate.selection.saturated) : json(nullptr);
    const std::string format = o.format.empty() ? "csv" : o.format;
    if (format == "json") {
        auto rows = json::array();
        for (const auto& r : estimate.reports)
            rows.push_back({{"k", r.scale}, {"N", r.box_count}, {"logN", std::log(static_cast<double>(r.box_count))}});
        std::cout << json{{"scales", rows}, {"points", estimate.point_count}, {"fit", summary}}.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "schema_version,k,N,logN\n";
        for (const auto& r : estimate.reports)
            std::cout << dmap::kSchemaVersion << "," << r.scale << "," << r.box_count << "," << std::log(static_cast<double>(r.box_count))
                      << "\n";
    } else {
        throw CLI::ValidationError("--format", "dimension supports csv or json");
    }
    if (!o.summary.empty()) {
        std::ofstream file(o.summary);
        if (!file) throw dmap::Error(dmap::Errc::invalid_input, "cannot write " + o.summary);
        file << summary.dump() << "\n";
    }
    if (!estimate.fit) throw dmap::Error(dmap::Errc::insufficient_data, "fewer than two unsaturated scales");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cycles of the d-map x -> dx (mod 1): orbits, degrees, reconstruction, enumeration and box dimension"};
    app.require_subcommand(1);
    Options o;

    auto add_base = [&](CLI::App* sub) { sub->add_option("--d", o.d, "base d >= 2")->required(); };
    auto add_points = [&](CLI::App* sub) {
        add_base(sub);
        sub->add_option("--cycle", o.cycle, "comma-separated points num/den")->required();
        sub->add_flag("--precycle", o.precycle, "accept any forward orbit, not only cycles");
    };
    auto add_limits = [&](CLI::App* sub) {
        sub->add_option("--work-limit", o.work_limit, "maximum d^n (default 2^26, env DMAP_WORK_LIMIT)")->check(CLI::PositiveNumber);
    };
    auto add_shard = [&](CLI::App* sub) {
        sub->add_option("--shard-index", o.shard_index, "shard to process");
        sub->add_option("--shard-count", o.shard_count, "number of shards")->check(CLI::PositiveNumber);
    };

    auto* orbit = app.add_subcommand("orbit", "forward orbit of a point");
    add_base(orbit);
    orbit->add_option("--point", o.point, "point num/den")->required();

    auto* degree = app.add_subcommand("degree", "degree and crossings of a cycle or precycle");
    add_points(degree);
    auto* portrait = app.add_subcommand("portrait", "digit portrait and dig");
    add_points(portrait);
    auto* partition = app.add_subcommand("partition", "partition generated by a cycle");
    add_points(partition);
    auto* witness = app.add_subcommand("witness", "piecewise-linear witness map of a cycle");
    add_base(witness);
    witness->add_option("--cycle", o.cycle, "comma-separated points num/den")->required();

    auto* enumerate = app.add_subcommand("enumerate", "all n-element cycles (JSON lines) or their census (CSV)");
    add_base(enumerate);
    enumerate->add_option("--n", o.n, "cycle size")->required()->check(CLI::PositiveNumber);
    enumerate->add_option("--degree", o.degree, "keep only this degree");
    enumerate->add_flag("--precycles", o.precycles, "enumerate precycles instead");
    enumerate->add_option("--format", o.format, "jsonl (default) or csv");
    add_limits(enumerate);
    add_shard(enumerate);

    auto* census = app.add_subcommand("census", "degree histogram for n = 1..n-max as CSV");
    add_base(census);
    census->add_option("--n-max", o.n_max, "largest size")->required()->check(CLI::PositiveNumber);
    census->add_flag("--precycles", o.precycles, "count precycles instead");
    census->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    add_limits(census);
    add_shard(census);

    auto* construct = app.add_subcommand("construct", "degree-m cycle near a prefix over m digits");
    add_base(construct);
    construct->add_option("--digits", o.digits, "digit set b1,b2,...")->required();
    construct->add_option("--prefix", o.prefix, "prefix word")->required();
    construct->add_option("--pad", o.pad, "block length N (default: minimal)");

    auto* reconstruct = app.add_subcommand("reconstruct", "cycle from (partition, i1, portrait), or null");
    add_base(reconstruct);
    reconstruct->add_option("--m", o.m, "degree")->required();
    reconstruct->add_option("--n", o.n, "size")->required();
    reconstruct->add_option("--blocks", o.blocks, "blocks separated by ';' or '/', labels by ','")->required();
    reconstruct->add_option("--i1", o.i1, "first crossing index")->required();
    reconstruct->add_option("--portrait", o.portrait, "F(0),...,F(d-1)")->required();

    auto* dimension = app.add_subcommand("dimension", "box counts and fitted slope");
    add_base(dimension);
    dimension->add_option("--mode", o.mode, "cantor or cycles")->check(CLI::IsMember({"cantor", "cycles"}));
    dimension->add_option("--m", o.m, "number of digits / cycle degree")->required();
    dimension->add_option("--depth", o.depth, "largest scale k");
    dimension->add_option("--n-max", o.n_max, "largest cycle size (cycles mode)");
    dimension->add_option("--format", o.format, "csv (default) or json");
    dimension->add_option("--summary", o.summary, "write the JSON fit summary to this file");
    add_limits(dimension);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*orbit) return run_orbit(o);
        if (*degree) return run_degree(o);
        if (*portrait) return run_portrait(o);
        if (*partition) return run_partition(o);
        if (*witness) return run_witness(o);
        if (*enumerate) return run_enumerate(o);
        if (*census) return run_census(o);
        if (*construct) return run_construct(o);
        if (*reconstruct) return run_reconstruct(o);
        if (*dimension) {
            if (o.mode == "cycles" && dimension->count("--n-max") == 0) throw CLI::ValidationError("--n-max", "required in cycles mode");
            return run_dimension(o);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const dmap::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}
