#include "orbitcodes/orbit.hpp"

#include <numeric>
#include <unordered_set>

namespace orbitcodes {

namespace {

std::uint64_t beta_order(const Field& f, std::uint64_t beta_log) {
    if (!f.primitive())
        throw Error(errc::not_primitive, "beta = alpha^e needs a primitive field");
    std::uint64_t ord = f.group_order();
    return ord / std::gcd(beta_log % ord, ord);
}

} // namespace

StabilizerInfo stabilizer_order(const Subspace& u, std::uint64_t beta_log) {
    const Field& f = u.field();
    const std::uint64_t bord = beta_order(f, beta_log);
    for (std::uint64_t d : divisors_ascending(bord)) {
        FieldElement g = f.alpha_pow(beta_log % f.group_order() * d % f.group_order());
        if (scalar_multiply(u, g) == u) return {d, bord / d};
    }
    throw Error(errc::internal_inconsistency, "orbit size not found among divisors");
}

unsigned best_friend_degree(const Subspace& u) {
    if (u.is_zero()) throw Error(errc::zero_space, "zero space has no best friend");
    Subspace v = u.contains_one() ? u : normalize_contains_one(u).first;
    const auto degrees = v.field().subfield_degrees();
    for (auto it = degrees.rbegin(); it != degrees.rend(); ++it) {
        if (v.dim() % *it != 0) continue;
        if (is_space_over(v, *it)) return *it;
    }
    return 1; // F_q is always a friend
}

std::vector<unsigned> friend_degrees(const Subspace& u) {
    if (!u.contains_one()) throw Error(errc::not_normalized, "friends need 1 in U");
    std::vector<unsigned> out;
    for (unsigned r : u.field().subfield_degrees()) {
        if (u.dim() % r != 0) continue;
        if (is_space_over(u, r)) out.push_back(r);
    }
    return out;
}

unsigned stab_plus_beta_degree(const Subspace& u, std::uint64_t beta_log) {
    const Field& f = u.field();
    StabilizerInfo info = stabilizer_order(u, beta_log);
    std::uint64_t ord = f.group_order();
    FieldElement gen = f.alpha_pow(beta_log % ord * (info.orbit_size % ord) % ord);
    return f.minimal_polynomial(gen).degree();
}

std::uint64_t orbit_cardinality(const Subspace& u, std::uint64_t beta_log) {
    const Field& f = u.field();
    std::uint64_t ord = f.group_order();
    if (std::gcd(beta_log % ord, ord) == 1) {
        // primitive beta: the orbit-stabilizer count via the best friend
        unsigned r = best_friend_degree(u);
        std::uint64_t qr = 1;
        for (unsigned i = 0; i < r; ++i) qr *= f.q();
        return ord / (qr - 1);
    }
    return stabilizer_order(u, beta_log).orbit_size;
}

OrbitCode::OrbitCode(Subspace generator, std::uint64_t beta_log)
    : generator_(std::move(generator)), beta_log_(beta_log) {
    if (generator_.is_zero()) throw Error(errc::zero_space, "orbit of the zero space");
    const Field& f = generator_.field();
    std::uint64_t ord = f.group_order();
    beta_log_ %= ord;
    if (beta_primitive() && !generator_.contains_one())
        generator_ = normalize_contains_one(generator_).first; // same orbit set
    size_ = orbit_cardinality(generator_, beta_log_);
}

bool OrbitCode::beta_primitive() const {
    std::uint64_t ord = field().group_order();
    return std::gcd(beta_log_ % ord, ord) == 1;
}

Subspace OrbitCode::member(std::uint64_t i) const {
    const Field& f = field();
    std::uint64_t ord = f.group_order();
    FieldElement g = f.alpha_pow(beta_log_ % ord * (i % ord) % ord);
    return scalar_multiply(generator_, g);
}

std::vector<Subspace> OrbitCode::members() const {
    std::vector<Subspace> out;
    out.reserve(size_);
    for_each_member([&](std::uint64_t, Subspace s) { out.push_back(std::move(s)); });
    return out;
}

OrbitCode spread_code(const Field& f, unsigned r, std::uint64_t beta_log) {
    return OrbitCode(Subspace::subfield(f, r), beta_log);
}

bool is_partial_spread(std::span<const Subspace> code) {
    for (std::size_t i = 0; i < code.size(); ++i) {
        for (std::size_t j = i + 1; j < code.size(); ++j) {
            std::size_t r = rank_of_stack(code[i].basis(), code[j].basis());
            if (r != code[i].dim() + code[j].dim()) return false;
        }
    }
    return true;
}

bool is_spread(std::span<const Subspace> code) {
    if (code.empty()) return false;
    if (!is_partial_spread(code)) return false;
    const Field& f = code.front().field();
    std::uint64_t covered = 0;
    for (const Subspace& s : code) {
        std::uint64_t pts = 1;
        for (std::size_t i = 0; i < s.dim(); ++i) pts *= f.q();
        covered += pts - 1;
    }
    return covered == f.group_order();
}

} // namespace orbitcodes
