#ifndef ORBITCODES_JSON_IO_HPP
#define ORBITCODES_JSON_IO_HPP

#include <string>
#include <string_view>

#include "orbitcodes/linkage.hpp"
#include "orbitcodes/orbit.hpp"
#include "orbitcodes/subspace.hpp"

namespace orbitcodes {

// JSON wire formats. Kept as strings here so that the public headers stay
// free of the json library; the CLI re-parses them when composing documents.

/// {"q": int, "n": int, "modulus": [c0,...,cn]}
std::string field_spec_to_json(const FieldSpec& spec);
FieldSpec field_spec_from_json(std::string_view text);

/// {"k": int, "rows": [[...],...]} plus "gen_logs" when requested (primitive
/// fields only).
std::string subspace_to_json(const Subspace& s, bool with_gen_logs = false);
Subspace subspace_from_json(const Field& f, std::string_view text);

/// Full code descriptor:
/// {"q","n","modulus","beta_log","generator":{...},"N","best_friend_degree",
///  "distance": optional}
std::string orbit_descriptor_to_json(const OrbitCode& code,
                                     std::optional<unsigned> distance = std::nullopt);
OrbitCode orbit_from_descriptor_json(std::string_view text);

/// Linked code: constituents by descriptor plus the index algebra.
std::string linked_code_to_json(const LinkedCode& code);

/// Constituent descriptor (either {"matrices":[...],"q","distance"} or an
/// orbit descriptor with optional "exponents").
ConstituentCode constituent_from_json(std::string_view text);

} // namespace orbitcodes

#endif
