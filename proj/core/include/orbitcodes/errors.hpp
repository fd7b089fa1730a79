#ifndef ORBITCODES_ERRORS_HPP
#define ORBITCODES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace orbitcodes {

/// Error categories raised by the library. Every throw site uses Error with
/// one of these codes so callers can react programmatically.
enum class errc {
    non_prime,
    reducible,
    not_primitive,
    division_by_zero,
    log_of_zero,
    order_of_zero,
    invalid_subfield_degree,
    wrong_length,
    field_mismatch,
    zero_scalar,
    zero_space,
    empty_generators,
    not_normalized,
    internal_inconsistency,
    dimension_mismatch,
    rank_loss,
    non_direct,
    not_partial_spread,
    unsupported_parameters,
    search_space_too_large,
    invalid_argument,
};

const char* errc_name(errc c) noexcept;

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

} // namespace orbitcodes

#endif
