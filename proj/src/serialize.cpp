#include "dmap/serialize.hpp"

#include <cstdio>

namespace dmap {

namespace {

nlohmann::json point_list(const std::vector<Rational>& points) {
    auto out = nlohmann::json::array();
    for (const auto& x : points) out.push_back(x.str());
    return out;
}

nlohmann::json analysis_fields(OrbitView view) {
    nlohmann::json out;
    const auto cross = crossings(view);
    out["degree"] = cross.size();
    out["crossings"] = cross.indices;
    out["portrait"] = digit_portrait(view).values;
    out["dig"] = dig(view);
    out["partition"] = cross.indices.empty() ? nlohmann::json(nullptr) : partition_record(partition_of(view));
    return out;
}

std::string format_ratio(const Fraction& ratio) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.9g", static_cast<double>(ratio));
    return buffer;
}

}  // namespace

nlohmann::json partition_record(const PartitionSpec& partition) {
    return {{"blocks", partition.blocks}, {"i1", partition.i1}};
}

nlohmann::json cycle_record(const Cycle& c) {
    nlohmann::json out{{"base", c.base},
                       {"n", c.size()},
                       {"word", to_string(c.word)},
                       {"points", point_list(c.points)},
                       {"sigma", c.sigma}};
    out.update(analysis_fields(c));
    return out;
}

nlohmann::json precycle_record(const Precycle& p) {
    const auto parts = eventually_periodic_decompose(p.start, p.base);
    nlohmann::json out{{"base", p.base},
                       {"n", p.size()},
                       {"word", to_string(parts.preperiod) + to_string(parts.period)},
                       {"points", point_list(p.points)},
                       {"sigma", p.successor},
                       {"start", p.start.str()},
                       {"preperiod_len", p.preperiod_len},
                       {"period_len", p.period_len},
                       {"degree_basis", "crossing_number"}};
    out.update(analysis_fields(p));
    return out;
}

nlohmann::json key_record(const CycleKey& key) {
    return {{"base", key.base},
            {"m", key.degree},
            {"n", key.size},
            {"partition", partition_record(key.partition)},
            {"portrait", key.portrait.values}};
}

std::string census_csv_header() { return "schema_version,d,n,m,count,bound,ratio"; }

std::vector<std::string> census_csv_rows(const CensusRow& row) {
    std::vector<std::string> out;
    for (const auto& [m, count] : row.counts_by_degree) {
        const auto ratio = row.bound_ratio.find(m);
        const auto& bound = row.bound.at(m);
        out.push_back(std::to_string(kSchemaVersion) + "," + std::to_string(row.base) + "," + std::to_string(row.size) + "," +
                      std::to_string(m) + "," + std::to_string(count) + "," + bound.str() + "," +
                      (ratio == row.bound_ratio.end() ? std::string() : format_ratio(ratio->second)));
    }
    return out;
}

nlohmann::json fit_record(const DimensionFit& fit, const std::vector<CoverReport>& saturated) {
    auto excluded = nlohmann::json::array();
    for (const auto& r : saturated) excluded.push_back(r.scale);
    return {{"beta", fit.slope},
            {"intercept", fit.intercept},
            {"max_residual", fit.max_residual},
            {"scales_used", fit.scales_used},
            {"scales_saturated", excluded}};
}

}  // namespace dmap
