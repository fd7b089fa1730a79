#ifndef ORBITCODES_PARSE_HPP
#define ORBITCODES_PARSE_HPP

#include <string_view>

#include "orbitcodes/field.hpp"
#include "orbitcodes/subspace.hpp"

namespace orbitcodes {

/// Inline field syntax "q,n,c0,c1,...,cn" (modulus low degree first) or
/// "q,n" for the default modulus.
FieldSpec parse_field_inline(std::string_view text);

/// Generator syntax, three forms:
///   "rows:100000;010000;000010"       explicit basis rows, one digit per char
///   "logs:0,1,4"                      generators alpha^e by discrete log
///   "F(2)+a^1*F(2)+a^3*F(2)"          sum of coset terms alpha^l F_{q^r}
/// The sum form accepts optional "a^l*" factors and F(r) subfield terms.
Subspace parse_generator(const Field& f, std::string_view text);

} // namespace orbitcodes

#endif
