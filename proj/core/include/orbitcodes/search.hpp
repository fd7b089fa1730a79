#ifndef ORBITCODES_SEARCH_HPP
#define ORBITCODES_SEARCH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "orbitcodes/distance.hpp"
#include "orbitcodes/subspace.hpp"

namespace orbitcodes {

enum class SearchMode { exhaustive, random };

struct SearchSpec {
    unsigned k = 2;
    unsigned friend_degree = 1; // required best friend degree r
    unsigned target_distance = 0; // 0 = no target, report best found
    SearchMode mode = SearchMode::exhaustive;
    std::uint64_t trials = 0; // random mode
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    /// Skip the multiset evaluation of candidates whose certified upper
    /// bound (coset detector) is already below the target.
    bool prune = true;
    /// Exhaustive mode refuses larger search spaces ([n-1 choose k-1]_q).
    std::uint64_t space_cap = 50'000'000;
};

struct SearchResult {
    std::optional<std::pair<Subspace, unsigned>> best; // lex-smallest among max distance
    std::uint64_t candidates_enumerated = 0; // subspaces containing 1 visited
    std::uint64_t candidates_in_class = 0;   // with best friend degree == r
    std::uint64_t pruned = 0;                // skipped by certified bounds
    bool exhaustive_complete = false;
    bool target_met = false;
    std::map<unsigned, std::uint64_t> histogram; // exact distances only
};

/// Enumerates every k-dimensional subspace containing 1 through the RREF
/// lift of (k-1)-subspaces of F_q^{n-1} (exactly [n-1 choose k-1]_q of
/// them), filters by best friend degree, and evaluates distances with the
/// multiset method. Certifies non-existence of the target when complete.
SearchResult exhaustive_search(const Field& f, const SearchSpec& spec);

/// Samples random k-subspaces containing 1 with a counter-based generator
/// keyed by (seed, candidate index): results are identical for any job
/// count. Rejected candidates (wrong dimension or best friend) consume a
/// trial.
SearchResult random_search(const Field& f, const SearchSpec& spec);

/// The dimension-3 family span{1, alpha^2, alpha^3}: checks that F_q is the
/// best friend and the cardinality is (q^n-1)/(q-1), then returns the
/// subspace together with its multiset distance report.
std::pair<Subspace, DistanceReport> dim3_family(const Field& f);

/// [n choose k]_q, the number of k-dimensional subspaces of F_q^n.
/// Throws search_space_too_large if the value does not fit in 64 bits.
std::uint64_t gaussian_binomial(unsigned n, unsigned k, unsigned q);

/// SplitMix64 step; the counter-based generator used by random_search.
std::uint64_t splitmix64(std::uint64_t& state);

} // namespace orbitcodes

#endif
