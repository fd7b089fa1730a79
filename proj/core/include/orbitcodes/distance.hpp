#ifndef ORBITCODES_DISTANCE_HPP
#define ORBITCODES_DISTANCE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "orbitcodes/subspace.hpp"

namespace orbitcodes {

/// Orbit representatives of U under the stabilizer subgroup <alpha^N> and
/// the multiset of their pairwise differences mod N. Built for a primitive
/// field from a subspace containing 1.
struct RepProfile {
    std::uint64_t orbit_size = 0;  // N = (q^n-1)/(q^r-1)
    unsigned friend_degree = 1;    // r, the best friend degree
    unsigned q = 2;                // base field size
    std::vector<std::uint64_t> reps; // b_1 < ... < b_S, S = (q^k-1)/(q^r-1)

    /// (J, m(J)) with m(J) > 0, sorted by J. Total multiplicity S(S-1).
    std::vector<std::pair<std::uint64_t, std::uint32_t>> differences;
    std::uint32_t max_multiplicity = 0; // M (0 when S = 1)
    unsigned max_intersection_dim = 0;  // L = log_q(M(q^r-1)+1)

    std::uint64_t class_count() const { return reps.size(); } // S
    std::uint32_t multiplicity_of(std::uint64_t j) const;
    /// dim(U cap U alpha^j) = log_q(m(j)(q^r-1)+1)
    unsigned intersection_dim(std::uint64_t j) const;
};

enum class DistanceMethod { brute_force, multiset };

struct DistanceReport {
    unsigned distance = 0;             // d = min over j of ds(U, U beta^j)
    unsigned max_intersection_dim = 0; // over F_q
    unsigned friend_degree = 1;        // r of the generating subspace
    DistanceMethod method = DistanceMethod::brute_force;
    /// distance -> number of exponents j in [1, N) attaining it
    std::optional<std::map<unsigned, std::uint64_t>> distribution;

    /// s = max_j dim_{F_{q^r}}(U cap U alpha^j); meaningful for primitive
    /// orbits, where the intersections are F_{q^r}-spaces.
    unsigned friend_dim() const { return max_intersection_dim / friend_degree; }
};

/// Representatives only (differences empty). Requires 1 in U.
RepProfile orbit_representatives(const Subspace& u);

/// Full profile including the difference multiset.
RepProfile rep_profile(const Subspace& u);

/// Distance of the primitive orbit code orb(U) via the difference multiset:
/// d = 2(k - L) with L = log_q(M(q^r-1)+1). Requires a primitive field and
/// 1 in U. The per-exponent intersection dimensions are exposed through the
/// profile and, when requested, the distribution.
DistanceReport distance_multiset(const Subspace& u, bool with_distribution = false);

/// Exact minimum of ds(U, U beta^j) over 1 <= j < N by scanning the orbit.
/// Works for any irreducible beta = alpha^beta_log, including non-primitive
/// ones where the multiset method does not apply.
DistanceReport distance_bruteforce(const Subspace& u, std::uint64_t beta_log = 1,
                                   bool with_distribution = false);

struct DistanceBounds {
    unsigned lower = 0;                      // 2r
    unsigned upper = 0;                      // 2k
    std::optional<unsigned> non_spread_upper; // 2(k-r) when t >= 2
    bool spread = false;                     // r == k, i.e. U = F_{q^k}
};

/// Bounds from k and the best friend degree only; no orbit work.
DistanceBounds distance_bounds(const Subspace& u);

struct DirectSumClassification {
    Subspace built;              // U = sum of alpha^{il} F_{q^r}, i < t
    unsigned base_degree = 1;    // r
    unsigned summand_count = 0;  // t
    unsigned mipo_degree = 0;    // deg mipo(alpha^l, F_{q^r})
    bool alpha_l_stabilizes = false; // alpha^l U == U
    bool is_field = false;           // U == F_{q^{rt}}
    bool base_is_best_friend = false;
    /// 2r whenever F_{q^r} is the best friend of U.
    std::optional<unsigned> predicted_distance;
};

/// Builds U = F_{q^r} + alpha^l F_{q^r} + ... + alpha^{(t-1)l} F_{q^r} and
/// reports the equivalent field tests (throws non_direct if the sum is not
/// direct). t >= 2 required.
DirectSumClassification classify_direct_sum(const Field& f, unsigned r, std::uint64_t l,
                                            unsigned t);

/// Looks for a coset gamma F_{q^{r'}} inside U with r' > r (r' | n,
/// r' <= k). If one exists, 2(k - r') is a certified upper bound for the
/// orbit distance. A sufficient detector only: absence of a coset proves
/// nothing.
std::optional<unsigned> subfield_coset_upper_bound(const Subspace& u);

/// Minimum pairwise distance of an arbitrary collection of subspaces
/// (e.g. a union of orbit codes), by exhaustive comparison. No structure
/// is exploited. Needs at least two members.
unsigned min_pairwise_distance(std::span<const Subspace> code);

} // namespace orbitcodes

#endif
