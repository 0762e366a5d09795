#pragma once

// Machine-readable records shared by the CLI and the Python module.
// Rationals serialize as "num/den"; digit words as in to_string(DigitWord).

#include <string>
#include <vector>

#include <json.hpp>

#include "dmap/constructors.hpp"
#include "dmap/degree.hpp"
#include "dmap/dimension.hpp"
#include "dmap/enumeration.hpp"
#include "dmap/orbits.hpp"

namespace dmap {

inline constexpr int kSchemaVersion = 1;

nlohmann::json partition_record(const PartitionSpec& partition);

/// {base, n, word, points, sigma, degree, crossings, portrait, dig, partition}
/// with partition null for a fixed point.
nlohmann::json cycle_record(const Cycle& c);

/// Cycle record fields (word is the start point's preperiod followed by its
/// period, sigma the successor map) plus {preperiod_len, period_len, start,
/// degree_basis}.
nlohmann::json precycle_record(const Precycle& p);

nlohmann::json key_record(const CycleKey& key);

/// CSV with columns schema_version,d,n,m,count,bound,ratio; one line per degree.
std::string census_csv_header();
std::vector<std::string> census_csv_rows(const CensusRow& row);

nlohmann::json fit_record(const DimensionFit& fit, const std::vector<CoverReport>& saturated = {});

}  // namespace dmap
