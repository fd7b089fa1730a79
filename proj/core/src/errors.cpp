#include "orbitcodes/errors.hpp"

namespace orbitcodes {

const char* errc_name(errc c) noexcept {
    switch (c) {
        case errc::non_prime: return "non_prime";
        case errc::reducible: return "reducible";
        case errc::not_primitive: return "not_primitive";
        case errc::division_by_zero: return "division_by_zero";
        case errc::log_of_zero: return "log_of_zero";
        case errc::order_of_zero: return "order_of_zero";
        case errc::invalid_subfield_degree: return "invalid_subfield_degree";
        case errc::wrong_length: return "wrong_length";
        case errc::field_mismatch: return "field_mismatch";
        case errc::zero_scalar: return "zero_scalar";
        case errc::zero_space: return "zero_space";
        case errc::empty_generators: return "empty_generators";
        case errc::not_normalized: return "not_normalized";
        case errc::internal_inconsistency: return "internal_inconsistency";
        case errc::dimension_mismatch: return "dimension_mismatch";
        case errc::rank_loss: return "rank_loss";
        case errc::non_direct: return "non_direct";
        case errc::not_partial_spread: return "not_partial_spread";
        case errc::unsupported_parameters: return "unsupported_parameters";
        case errc::search_space_too_large: return "search_space_too_large";
        case errc::invalid_argument: return "invalid_argument";
    }
    return "unknown";
}

} // namespace orbitcodes
