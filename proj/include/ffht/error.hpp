#pragma once

#include <stdexcept>
#include <string>

namespace ffht {

enum class errc {
    not_prime,
    even_characteristic,
    reducible_modulus,
    degree_mismatch,
    field_mismatch,
    zero_inverse,
    zero_element,
    no_such_order,
    order_mismatch,
    bad_exponent,
    minus_one_residue,
    not_coprime,
    inconsistent_assignment,
    length_mismatch,
    plan_mismatch,
    parse_error,
    out_of_range_coefficient,
};

/// Stable machine-readable name, e.g. "ReducibleModulus".
const char* errc_name(errc code);

/// Domain error carrying an errc plus a human-readable detail string.
/// what() renders as "<Name>: <detail>".
class error : public std::runtime_error {
public:
    error(errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

    errc code() const { return code_; }
    const char* name() const { return errc_name(code_); }

private:
    errc code_;
};

} // namespace ffht
