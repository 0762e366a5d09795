#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dmap {

enum class Errc {
    invalid_base,
    invalid_digit,
    invalid_input,
    not_primitive,
    not_a_cycle,
    no_crossing,
    degenerate,
    invalid_map,
    insufficient_padding,
    unsupported_degenerate,
    work_limit_exceeded,
    insufficient_data,
};

std::string_view to_string(Errc code) noexcept;

/// Domain error raised by every dmap operation. The code identifies the
/// failure class; the message carries the offending value where one exists.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace dmap
