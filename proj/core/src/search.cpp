#include "orbitcodes/search.hpp"

#include <algorithm>
#include <thread>

#include "orbitcodes/orbit.hpp"

namespace orbitcodes {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t gaussian_binomial(unsigned n, unsigned k, unsigned q) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    auto mul_ok = [](std::uint64_t a, std::uint64_t b, std::uint64_t& out) {
        if (a != 0 && b > UINT64_MAX / a) return false;
        out = a * b;
        return true;
    };
    // q-Pascal: G(i,j) = G(i-1,j-1) + q^j G(i-1,j); row[j] holds G(i,j)
    std::vector<std::uint64_t> row(k + 1, 0);
    row[0] = 1;
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = std::min(i, k); j >= 1; --j) {
            std::uint64_t qj = 1;
            for (unsigned t = 0; t < j; ++t)
                if (!mul_ok(qj, q, qj))
                    throw Error(errc::search_space_too_large, "Gaussian binomial overflow");
            std::uint64_t scaled;
            if (!mul_ok(row[j], qj, scaled) || scaled > UINT64_MAX - row[j - 1])
                throw Error(errc::search_space_too_large, "Gaussian binomial overflow");
            row[j] = row[j - 1] + scaled;
        }
    }
    return row[k];
}

namespace {

// Enumerates (k-1) x (n-1) matrices in reduced row echelon form and hands
// the lifted k x n candidate [e_0 ; 0 | R] to fn. The lift is itself in
// RREF, and ranges exactly over the subspaces containing phi(1).
template <typename Fn>
void enumerate_containing_one(const Field& f, unsigned k, Fn&& fn) {
    const unsigned n = f.n();
    const unsigned q = f.q();
    const unsigned kr = k - 1; // rows of R
    const unsigned nc = n - 1; // cols of R

    if (kr == 0) {
        Matrix cand(1, n, q);
        cand(0, 0) = 1;
        fn(cand);
        return;
    }
    if (kr > nc) return;

    std::vector<unsigned> pivots(kr);
    for (unsigned i = 0; i < kr; ++i) pivots[i] = i;

    auto emit_for_pivots = [&](const std::vector<unsigned>& piv) {
        std::vector<bool> is_pivot(nc, false);
        for (unsigned p : piv) is_pivot[p] = true;
        // free positions: (i, j) with j > piv[i], j not a pivot column
        std::vector<std::pair<unsigned, unsigned>> free_pos;
        for (unsigned i = 0; i < kr; ++i)
            for (unsigned j = piv[i] + 1; j < nc; ++j)
                if (!is_pivot[j]) free_pos.emplace_back(i, j);

        Matrix cand(k, n, q);
        cand(0, 0) = 1;
        for (unsigned i = 0; i < kr; ++i) cand(i + 1, 1 + piv[i]) = 1;

        std::vector<std::uint8_t> digits(free_pos.size(), 0);
        while (true) {
            for (std::size_t t = 0; t < free_pos.size(); ++t)
                cand(free_pos[t].first + 1, 1 + free_pos[t].second) = digits[t];
            fn(cand);
            std::size_t pos = digits.size();
            while (pos > 0 && digits[pos - 1] == q - 1) digits[--pos] = 0;
            if (pos == 0) break;
            ++digits[pos - 1];
        }
    };

    // lexicographic combinations of pivot columns
    while (true) {
        emit_for_pivots(pivots);
        int i = static_cast<int>(kr) - 1;
        while (i >= 0 && pivots[i] == nc - kr + i) --i;
        if (i < 0) break;
        ++pivots[i];
        for (unsigned j = i + 1; j < kr; ++j) pivots[j] = pivots[j - 1] + 1;
    }
}

void record_candidate(SearchResult& res, const SearchSpec& spec, const Subspace& u,
                      unsigned distance) {
    ++res.histogram[distance];
    if (spec.target_distance && distance >= spec.target_distance) res.target_met = true;
    if (!res.best || distance > res.best->second ||
        (distance == res.best->second &&
         compare_bytes(u.basis(), res.best->first.basis()) < 0)) {
        res.best = {u, distance};
    }
}

} // namespace

SearchResult exhaustive_search(const Field& f, const SearchSpec& spec) {
    const unsigned n = f.n();
    const unsigned k = spec.k;
    const unsigned r = spec.friend_degree;
    if (k < 1 || k > n) throw Error(errc::invalid_argument, "need 1 <= k <= n");
    if (r == 0 || k % r != 0 || n % r != 0)
        throw Error(errc::invalid_argument, "friend degree must divide k and n");

    std::uint64_t space = gaussian_binomial(n - 1, k - 1, f.q());
    if (space > spec.space_cap)
        throw Error(errc::search_space_too_large,
                    "search space has " + std::to_string(space) + " candidates");

    SearchResult res;
    enumerate_containing_one(f, k, [&](const Matrix& cand) {
        ++res.candidates_enumerated;
        Subspace u = Subspace::from_matrix(f, cand);
        if (best_friend_degree(u) != r) return;
        ++res.candidates_in_class;
        if (spec.prune && spec.target_distance) {
            if (auto bound = subfield_coset_upper_bound(u);
                bound && *bound < spec.target_distance) {
                ++res.pruned;
                return;
            }
        }
        record_candidate(res, spec, u, distance_multiset(u).distance);
    });

    if (res.candidates_enumerated != space)
        throw Error(errc::internal_inconsistency, "enumeration count != Gaussian binomial");
    res.exhaustive_complete = true;
    return res;
}

SearchResult random_search(const Field& f, const SearchSpec& spec) {
    const unsigned n = f.n();
    const unsigned k = spec.k;
    const unsigned r = spec.friend_degree;
    if (k < 1 || k > n) throw Error(errc::invalid_argument, "need 1 <= k <= n");
    if (r == 0 || k % r != 0 || n % r != 0)
        throw Error(errc::invalid_argument, "friend degree must divide k and n");

    auto evaluate_range = [&](std::uint64_t begin, std::uint64_t end, SearchResult& out) {
        Matrix cand(k, n, f.q());
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            ++out.candidates_enumerated;
            // counter-based stream: identical candidates for any job split
            std::uint64_t state = spec.seed ^ (idx * 0xd1342543de82ef95ull + 1);
            for (std::size_t c = 0; c < cand.data().size(); ++c) {
                // row 0 stays e_0
                std::size_t i = c / n;
                std::size_t j = c % n;
                if (i == 0) {
                    cand(0, j) = (j == 0) ? 1 : 0;
                } else {
                    cand(i, j) = static_cast<std::uint8_t>(splitmix64(state) % f.q());
                }
            }
            Subspace u = Subspace::from_matrix(f, cand);
            if (u.dim() != k) continue;
            if (best_friend_degree(u) != r) continue;
            ++out.candidates_in_class;
            if (spec.prune && spec.target_distance) {
                if (auto bound = subfield_coset_upper_bound(u);
                    bound && *bound < spec.target_distance) {
                    ++out.pruned;
                    continue;
                }
            }
            record_candidate(out, spec, u, distance_multiset(u).distance);
        }
    };

    SearchResult res;
    unsigned jobs = std::max(1u, spec.jobs);
    if (jobs == 1 || spec.trials < 2 * jobs) {
        evaluate_range(0, spec.trials, res);
    } else {
        std::vector<SearchResult> parts(jobs);
        std::vector<std::exception_ptr> errors(jobs);
        std::vector<std::thread> threads;
        std::uint64_t chunk = spec.trials / jobs;
        for (unsigned t = 0; t < jobs; ++t) {
            std::uint64_t b = t * chunk;
            std::uint64_t e = (t + 1 == jobs) ? spec.trials : b + chunk;
            threads.emplace_back([&, b, e, t] {
                try {
                    evaluate_range(b, e, parts[t]);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (auto& th : threads) th.join();
        for (auto& err : errors)
            if (err) std::rethrow_exception(err);
        for (auto& part : parts) {
            res.candidates_enumerated += part.candidates_enumerated;
            res.candidates_in_class += part.candidates_in_class;
            res.pruned += part.pruned;
            res.target_met = res.target_met || part.target_met;
            for (auto& [d, c] : part.histogram) res.histogram[d] += c;
            if (part.best) {
                if (!res.best || part.best->second > res.best->second ||
                    (part.best->second == res.best->second &&
                     compare_bytes(part.best->first.basis(), res.best->first.basis()) < 0))
                    res.best = part.best;
            }
        }
    }
    return res;
}

std::pair<Subspace, DistanceReport> dim3_family(const Field& f) {
    if (f.n() < 6) throw Error(errc::unsupported_parameters, "family needs n >= 6");
    std::vector<FieldElement> gens{f.one(), f.alpha_pow(2), f.alpha_pow(3)};
    Subspace u = Subspace::from_generators(f, gens);
    if (u.dim() != 3)
        throw Error(errc::internal_inconsistency, "span{1, a^2, a^3} is not 3-dimensional");
    if (best_friend_degree(u) != 1)
        throw Error(errc::unsupported_parameters,
                    "F_q is not the best friend of span{1, a^2, a^3} in this field");
    std::uint64_t expected = f.group_order() / (f.q() - 1);
    if (orbit_cardinality(u, 1) != expected)
        throw Error(errc::internal_inconsistency, "orbit cardinality != (q^n-1)/(q-1)");
    return {u, distance_multiset(u)};
}

} // namespace orbitcodes
