#ifndef ORBITCODES_ORBIT_HPP
#define ORBITCODES_ORBIT_HPP

#include <cstdint>
#include <vector>

#include "orbitcodes/subspace.hpp"

namespace orbitcodes {

struct StabilizerInfo {
    std::uint64_t orbit_size;      // N: minimal N > 0 with U beta^N = U
    std::uint64_t stabilizer_size; // |beta| / N
};

/// Orbit size and stabilizer order of U under the group generated by
/// beta = alpha^beta_log. Searches the divisors of |beta| in increasing
/// order, so it costs O(d(|beta|)) subspace comparisons.
StabilizerInfo stabilizer_order(const Subspace& u, std::uint64_t beta_log);

/// Largest r with r | n such that U is a vector space over F_{q^r}.
/// U is normalized to contain 1 first (a linear isometry of the orbit,
/// leaving r unchanged).
unsigned best_friend_degree(const Subspace& u);

/// All subfield degrees r | n over which U is a vector space, sorted
/// ascending. In the primitive case these are exactly the divisors of the
/// best friend degree. Requires 1 in U.
std::vector<unsigned> friend_degrees(const Subspace& u);

/// Degree over F_q of the smallest subfield containing F_q and the
/// stabilizer of U in <beta>, i.e. deg mipo(beta^N) with N the orbit size.
unsigned stab_plus_beta_degree(const Subspace& u, std::uint64_t beta_log);

/// |orb_beta(U)| without enumerating the orbit: (q^n-1)/(q^r-1) when beta is
/// primitive, divisor stepping otherwise.
std::uint64_t orbit_cardinality(const Subspace& u, std::uint64_t beta_log);

/// Cyclic orbit code {U beta^i}. Members enumerate lazily in exponent order.
/// For primitive beta the generator is normalized to contain 1 (the orbit is
/// unchanged); for non-primitive beta the generator is kept as given.
class OrbitCode {
  public:
    OrbitCode(Subspace generator, std::uint64_t beta_log);

    const Subspace& generator() const { return generator_; }
    const Field& field() const { return generator_.field(); }
    std::uint64_t beta_log() const { return beta_log_; }
    std::uint64_t size() const { return size_; }
    bool beta_primitive() const;

    Subspace member(std::uint64_t i) const;

    /// Calls fn(exponent, member) for i = 0..N-1, scaling rows incrementally.
    template <typename Fn> void for_each_member(Fn&& fn) const {
        const Field& f = field();
        FieldElement beta = f.alpha_pow(beta_log_);
        std::vector<FieldElement> rows = generator_.basis_elements();
        for (std::uint64_t i = 0; i < size_; ++i) {
            if (i > 0) {
                for (auto& r : rows) r = f.mul(r, beta);
            }
            fn(i, Subspace::from_generators(f, rows));
        }
    }

    std::vector<Subspace> members() const;

  private:
    Subspace generator_;
    std::uint64_t beta_log_;
    std::uint64_t size_;
};

/// Orbit of the subfield F_{q^r} under beta = alpha^beta_log: a spread for
/// primitive beta, a partial spread otherwise.
OrbitCode spread_code(const Field& f, unsigned r, std::uint64_t beta_log = 1);

/// Pairwise trivial intersection.
bool is_partial_spread(std::span<const Subspace> code);

/// Partial spread that also covers every nonzero vector of the ambient space.
bool is_spread(std::span<const Subspace> code);

} // namespace orbitcodes

#endif
