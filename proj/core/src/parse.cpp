#include "orbitcodes/parse.hpp"

#include <charconv>

namespace orbitcodes {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

std::uint64_t parse_u64(std::string_view s) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw Error(errc::invalid_argument, "not a number: '" + std::string(s) + "'");
    return v;
}

} // namespace

FieldSpec parse_field_inline(std::string_view text) {
    auto parts = split(text, ',');
    if (parts.size() < 2) throw Error(errc::invalid_argument, "field syntax: q,n[,c0,...,cn]");
    FieldSpec spec;
    spec.q = static_cast<unsigned>(parse_u64(parts[0]));
    spec.n = static_cast<unsigned>(parse_u64(parts[1]));
    for (std::size_t i = 2; i < parts.size(); ++i)
        spec.modulus.push_back(static_cast<unsigned>(parse_u64(parts[i])));
    if (!spec.modulus.empty() && spec.modulus.size() != spec.n + 1)
        throw Error(errc::wrong_length, "modulus needs n+1 coefficients");
    return spec;
}

Subspace parse_generator(const Field& f, std::string_view text) {
    if (text.starts_with("rows:")) {
        auto rows = split(text.substr(5), ';');
        Matrix m(0, f.n(), f.q());
        std::vector<std::uint8_t> digits(f.n());
        for (auto row : rows) {
            if (row.size() != f.n())
                throw Error(errc::wrong_length, "row '" + std::string(row) + "' needs n digits");
            for (unsigned i = 0; i < f.n(); ++i) {
                if (row[i] < '0' || row[i] > '9')
                    throw Error(errc::invalid_argument, "rows accept digits 0-9 only");
                digits[i] = static_cast<std::uint8_t>(row[i] - '0');
                if (digits[i] >= f.q())
                    throw Error(errc::invalid_argument, "digit out of range for F_q");
            }
            m.append_row(digits);
        }
        return Subspace::from_matrix(f, std::move(m));
    }
    if (text.starts_with("logs:")) {
        std::vector<FieldElement> gens;
        for (auto part : split(text.substr(5), ','))
            gens.push_back(f.alpha_pow(parse_u64(part)));
        return Subspace::from_generators(f, gens);
    }
    // sum form: terms "F(r)" or "a^l*F(r)" joined by '+'
    std::vector<FieldElement> gens;
    for (auto term : split(text, '+')) {
        std::uint64_t shift = 0;
        std::string_view rest = term;
        if (rest.starts_with("a^")) {
            std::size_t star = rest.find('*');
            if (star == std::string_view::npos)
                throw Error(errc::invalid_argument, "expected a^l*F(r) in '" + std::string(term) + "'");
            shift = parse_u64(rest.substr(2, star - 2));
            rest = rest.substr(star + 1);
        }
        if (!rest.starts_with("F(") || !rest.ends_with(")"))
            throw Error(errc::invalid_argument, "expected F(r) in '" + std::string(term) + "'");
        unsigned r = static_cast<unsigned>(parse_u64(rest.substr(2, rest.size() - 3)));
        FieldElement scale = f.alpha_pow(shift);
        FieldElement g = f.subfield_generator(r);
        FieldElement cur = scale;
        for (unsigned i = 0; i < r; ++i) {
            gens.push_back(cur);
            cur = f.mul(cur, g);
        }
    }
    if (gens.empty()) throw Error(errc::empty_generators, "no generator terms");
    return Subspace::from_generators(f, gens);
}

} // namespace orbitcodes
