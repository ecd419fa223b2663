#pragma once

#include <stdexcept>
#include <string>

namespace tensobs {

enum class Errc {
    color_out_of_range,
    incompatible,
    chromatic_gap,
    bad_sigma,
    too_large,
    dimension_mismatch,
    missing_tensor,
    not_full_type,
    invalid_spec,
};

const char* errc_name(Errc code);

class SpecError : public std::runtime_error {
public:
    SpecError(Errc code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace tensobs
