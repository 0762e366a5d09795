#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dmap/constructors.hpp"
#include "dmap/degree.hpp"
#include "dmap/dimension.hpp"
#include "dmap/enumeration.hpp"
#include "dmap/error.hpp"
#include "dmap/serialize.hpp"

namespace py = pybind11;
using nlohmann::json;

// Records cross the boundary as JSON text; the Python side decodes them.

namespace {

std::vector<dmap::Rational> parse_points(const std::vector<std::string>& items) {
    std::vector<dmap::Rational> out;
    out.reserve(items.size());
    for (const auto& s : items) out.push_back(dmap::Rational::parse(s));
    return out;
}

std::string dump(const json& j) { return j.dump(); }

std::string census_json(const dmap::CensusRow& row) {
    json counts = json::object();
    json ratios = json::object();
    for (const auto& [m, count] : row.counts_by_degree) counts[std::to_string(m)] = count;
    for (const auto& [m, ratio] : row.bound_ratio) ratios[std::to_string(m)] = ratio.str();
    return dump({{"d", row.base}, {"n", row.size}, {"total", row.total}, {"counts", counts}, {"ratios", ratios}});
}

std::string estimate_json(const dmap::DimensionEstimate& e) {
    json scales = json::array();
    for (const auto& r : e.reports) scales.push_back({{"k", r.scale}, {"N", r.box_count}});
    json fit = e.fit ? dmap::fit_record(*e.fit, e.selection.saturated) : json(nullptr);
    return dump({{"scales", scales}, {"points", e.point_count}, {"fit", fit}});
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact cycles of the map x -> dx (mod 1)";

    // Messages start with the kebab-case error code.
    py::register_exception<dmap::Error>(m, "DmapError", PyExc_ValueError);

    m.def("dmap_step", [](const std::string& x, int d) { return dmap::to_string(dmap::dmap_step(dmap::Rational::parse(x), d)); });
    m.def("value_of_periodic", [](const std::string& word, int d) {
        return dmap::to_string(dmap::value_of_periodic(dmap::parse_word(word, d)));
    });
    m.def("expansion", [](const std::string& x, int d, std::size_t len) {
        return dmap::to_string(dmap::expansion(dmap::Rational::parse(x), d, len));
    });
    m.def("orbit", [](const std::string& x, int d) { return dump(dmap::precycle_record(dmap::orbit(dmap::Rational::parse(x), d))); });
    m.def("cycle_from_word", [](const std::string& word, int d) { return dump(dmap::cycle_record(dmap::cycle_from_word(dmap::parse_word(word, d)))); });
    m.def("cycle_from_points", [](const std::vector<std::string>& points, int d) {
        return dump(dmap::cycle_record(dmap::cycle_from_points(parse_points(points), d)));
    });
    m.def("precycle_from_points", [](const std::vector<std::string>& points, int d) {
        return dump(dmap::precycle_record(dmap::precycle_from_points(parse_points(points), d)));
    });
    m.def("is_cycle", [](const std::vector<std::string>& points, int d) { return dmap::is_cycle(parse_points(points), d); });
    m.def("witness_degree", [](const std::string& word, int d) {
        return dmap::map_degree(dmap::witness_map(dmap::cycle_from_word(dmap::parse_word(word, d))));
    });

    m.def("enumerate_cycles", [](int d, int n, std::uint64_t work_limit) {
        std::vector<std::string> out;
        dmap::enumerate_cycles(d, n, {work_limit, {}}, [&](const dmap::Cycle& c) { out.push_back(dump(dmap::cycle_record(c))); });
        return out;
    });
    m.def("enumerate_precycles", [](int d, int n, std::uint64_t work_limit) {
        std::vector<std::string> out;
        dmap::enumerate_precycles(d, n, {work_limit, {}}, [&](const dmap::Precycle& p) { out.push_back(dump(dmap::precycle_record(p))); });
        return out;
    });
    m.def("census", [](int d, int n, bool precycles, std::uint64_t work_limit) {
        const dmap::EnumerationOptions options{work_limit, {}};
        return census_json(precycles ? dmap::precycle_census(d, n, options) : dmap::census(d, n, options));
    });

    m.def("approximate_with_cycle", [](int d, std::vector<int> digits, const std::string& prefix, int block_len) {
        const auto word = dmap::parse_word(prefix, d);
        if (block_len <= 0) block_len = dmap::minimal_block_len(word, digits);
        const auto a = dmap::approximate_with_cycle({d, std::move(digits), word, block_len});
        return dump({{"point", dmap::to_string(a.point)},
                     {"word", dmap::to_string(a.word)},
                     {"block_len", block_len},
                     {"cycle", dmap::cycle_record(a.cycle)}});
    });
    m.def("extract_key", [](const std::string& word, int d) { return dump(dmap::key_record(dmap::extract_key(dmap::cycle_from_word(dmap::parse_word(word, d))))); });
    m.def("reconstruct_cycle", [](int d, int degree, int n, std::vector<std::vector<int>> blocks, int i1, std::vector<int> portrait) {
        dmap::CycleKey key{d, degree, n, {std::move(blocks), i1}, {d, std::move(portrait)}};
        const auto c = dmap::reconstruct_cycle(key);
        return c ? dump(dmap::cycle_record(*c)) : std::string("null");
    });

    m.def("cantor_boxes", [](int mm, int d, int k) { return dmap::cantor_boxes(mm, d, k).box_count; });
    m.def("build_E_approx", [](int d, int mm, int n_max, std::uint64_t work_limit) {
        std::vector<std::string> out;
        for (const auto& p : dmap::build_E_approx(d, mm, n_max, work_limit)) out.push_back(dmap::to_string(p));
        return out;
    });
    m.def("estimate_cantor_dimension", [](int mm, int d, int k_max) { return estimate_json(dmap::estimate_cantor_dimension(mm, d, k_max)); });
    m.def("estimate_cycle_dimension", [](int d, int mm, int n_max, int k_max, std::uint64_t work_limit) {
        return estimate_json(dmap::estimate_cycle_dimension(d, mm, n_max, k_max, work_limit));
    });

    m.attr("DEFAULT_WORK_LIMIT") = dmap::kDefaultWorkLimit;
}
