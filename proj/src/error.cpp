#include "dmap/error.hpp"

namespace dmap {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
        case Errc::invalid_base: return "invalid-base";
        case Errc::invalid_digit: return "invalid-digit";
        case Errc::invalid_input: return "invalid-input";
        case Errc::not_primitive: return "not-primitive";
        case Errc::not_a_cycle: return "not-a-cycle";
        case Errc::no_crossing: return "no-crossing";
        case Errc::degenerate: return "degenerate";
        case Errc::invalid_map: return "invalid-map";
        case Errc::insufficient_padding: return "insufficient-padding";
        case Errc::unsupported_degenerate: return "unsupported-degenerate";
        case Errc::work_limit_exceeded: return "work-limit-exceeded";
        case Errc::insufficient_data: return "insufficient-data";
    }
    return "unknown";
}

}  // namespace dmap
