#include "orbitcodes/distance.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "orbitcodes/orbit.hpp"

namespace orbitcodes {

namespace {

constexpr std::uint64_t dense_diff_threshold = std::uint64_t(1) << 22;

std::uint64_t qpow(unsigned q, unsigned e) {
    std::uint64_t v = 1;
    while (e--) v *= q;
    return v;
}

// log_q(m (q^r - 1) + 1); throws unless the argument is an exact power of q
unsigned intersection_dim_from_multiplicity(std::uint64_t m, unsigned q, unsigned r) {
    std::uint64_t val = m * (qpow(q, r) - 1) + 1;
    unsigned dim = 0;
    while (val > 1) {
        if (val % q != 0)
            throw Error(errc::internal_inconsistency,
                        "multiplicity does not give a q-power intersection size");
        val /= q;
        ++dim;
    }
    return dim;
}

} // namespace

std::uint32_t RepProfile::multiplicity_of(std::uint64_t j) const {
    auto it = std::lower_bound(differences.begin(), differences.end(), j,
                               [](const auto& p, std::uint64_t v) { return p.first < v; });
    if (it == differences.end() || it->first != j) return 0;
    return it->second;
}

unsigned RepProfile::intersection_dim(std::uint64_t j) const {
    return intersection_dim_from_multiplicity(multiplicity_of(j), q, friend_degree);
}

static RepProfile build_profile(const Subspace& u, bool with_differences) {
    const Field& f = u.field();
    if (!f.primitive())
        throw Error(errc::not_primitive, "the multiset method needs a primitive field");
    if (!u.contains_one()) throw Error(errc::not_normalized, "representatives need 1 in U");

    RepProfile p;
    p.q = f.q();
    p.friend_degree = best_friend_degree(u);
    const std::uint64_t sub_order = qpow(f.q(), p.friend_degree) - 1;
    p.orbit_size = f.group_order() / sub_order;

    // logs of the nonzero elements, reduced mod N; each rep is hit exactly
    // q^r - 1 times
    std::unordered_map<std::uint64_t, std::uint32_t> hits;
    for (FieldElement e : u.nonzero_elements()) {
        ++hits[f.discrete_log(e) % p.orbit_size];
    }
    p.reps.reserve(hits.size());
    for (auto& [b, c] : hits) {
        if (c != sub_order)
            throw Error(errc::internal_inconsistency, "stabilizer class of unexpected size");
        p.reps.push_back(b);
    }
    std::sort(p.reps.begin(), p.reps.end());

    const std::uint64_t expected_s =
        (qpow(f.q(), static_cast<unsigned>(u.dim())) - 1) / sub_order;
    if (p.reps.size() != expected_s)
        throw Error(errc::internal_inconsistency, "representative count != (q^k-1)/(q^r-1)");

    if (!with_differences) return p;

    const std::uint64_t n_cls = p.orbit_size;
    if (n_cls <= dense_diff_threshold) {
        std::vector<std::uint32_t> counts(n_cls, 0);
        for (std::uint64_t bl : p.reps)
            for (std::uint64_t bm : p.reps) {
                if (bl == bm) continue;
                std::uint64_t j = bl >= bm ? bl - bm : bl + n_cls - bm;
                ++counts[j];
            }
        for (std::uint64_t j = 0; j < n_cls; ++j)
            if (counts[j]) p.differences.emplace_back(j, counts[j]);
    } else {
        std::unordered_map<std::uint64_t, std::uint32_t> counts;
        for (std::uint64_t bl : p.reps)
            for (std::uint64_t bm : p.reps) {
                if (bl == bm) continue;
                std::uint64_t j = bl >= bm ? bl - bm : bl + n_cls - bm;
                ++counts[j];
            }
        p.differences.assign(counts.begin(), counts.end());
        std::sort(p.differences.begin(), p.differences.end());
    }
    for (auto& [j, m] : p.differences) p.max_multiplicity = std::max(p.max_multiplicity, m);
    p.max_intersection_dim =
        intersection_dim_from_multiplicity(p.max_multiplicity, f.q(), p.friend_degree);
    return p;
}

RepProfile orbit_representatives(const Subspace& u) { return build_profile(u, false); }

RepProfile rep_profile(const Subspace& u) { return build_profile(u, true); }

DistanceReport distance_multiset(const Subspace& u, bool with_distribution) {
    RepProfile p = rep_profile(u);
    const Field& f = u.field();
    const unsigned k = static_cast<unsigned>(u.dim());

    DistanceReport rep;
    rep.method = DistanceMethod::multiset;
    rep.friend_degree = p.friend_degree;
    rep.max_intersection_dim = p.max_intersection_dim;
    rep.distance = 2 * (k - p.max_intersection_dim);

    if (with_distribution) {
        std::map<unsigned, std::uint64_t> distr;
        std::uint64_t nontrivial = 0;
        for (auto& [j, m] : p.differences) {
            unsigned dim = intersection_dim_from_multiplicity(m, f.q(), p.friend_degree);
            ++distr[2 * (k - dim)];
            ++nontrivial;
        }
        std::uint64_t trivially_far = p.orbit_size - 1 - nontrivial;
        if (trivially_far) distr[2 * k] += trivially_far;
        rep.distribution = std::move(distr);
    }
    return rep;
}

DistanceReport distance_bruteforce(const Subspace& u, std::uint64_t beta_log,
                                   bool with_distribution) {
    const Field& f = u.field();
    const unsigned k = static_cast<unsigned>(u.dim());
    const unsigned n = f.n();
    const std::uint64_t big_n = orbit_cardinality(u, beta_log);

    DistanceReport rep;
    rep.method = DistanceMethod::brute_force;
    rep.friend_degree = best_friend_degree(u);

    const std::uint64_t ord = f.group_order();
    const bool primitive_beta = std::gcd(beta_log % ord, ord) == 1;
    const unsigned floor_distance = primitive_beta ? 2 * rep.friend_degree : 2;

    FieldElement beta = f.alpha_pow(beta_log);
    std::vector<FieldElement> rows = u.basis_elements();

    Matrix scratch(2 * k, n, f.q());
    for (unsigned i = 0; i < k; ++i)
        std::copy(u.basis().row(i).begin(), u.basis().row(i).end(), scratch.row(i).begin());

    unsigned min_d = 2 * k;
    std::map<unsigned, std::uint64_t> distr;
    for (std::uint64_t j = 1; j < big_n; ++j) {
        for (auto& r : rows) r = f.mul(r, beta);
        for (unsigned i = 0; i < k; ++i) {
            auto digits = f.phi(rows[i]);
            std::copy(digits.begin(), digits.end(), scratch.row(k + i).begin());
        }
        unsigned rk = static_cast<unsigned>(rank(scratch));
        unsigned d = 2 * (rk - k);
        min_d = std::min(min_d, d);
        if (with_distribution) {
            ++distr[d];
        } else if (min_d <= floor_distance) {
            break;
        }
    }
    rep.distance = min_d;
    rep.max_intersection_dim = k - min_d / 2;
    if (with_distribution) rep.distribution = std::move(distr);
    return rep;
}

DistanceBounds distance_bounds(const Subspace& u) {
    if (!u.contains_one()) throw Error(errc::not_normalized, "bounds need 1 in U");
    const unsigned k = static_cast<unsigned>(u.dim());
    const unsigned r = best_friend_degree(u);
    DistanceBounds b;
    b.lower = 2 * r;
    b.upper = 2 * k;
    b.spread = (r == k);
    if (k > r) b.non_spread_upper = 2 * (k - r);
    return b;
}

DirectSumClassification classify_direct_sum(const Field& f, unsigned r, std::uint64_t l,
                                            unsigned t) {
    if (t < 2) throw Error(errc::invalid_argument, "direct sum needs t >= 2");
    Subspace base = Subspace::subfield(f, r);
    std::vector<FieldElement> base_elems = base.basis_elements();

    Matrix rows_mat(0, f.n(), f.q());
    const std::uint64_t ord = f.group_order();
    for (unsigned i = 0; i < t; ++i) {
        FieldElement scale = f.alpha_pow(l % ord * (i % ord) % ord);
        for (FieldElement b : base_elems) {
            FieldElement e = f.mul(b, scale);
            auto digits = f.phi(e);
            rows_mat.append_row(digits);
        }
    }
    if (rank(rows_mat) != std::size_t(r) * t)
        throw Error(errc::non_direct, "the summands alpha^{il} F_{q^r} overlap");

    DirectSumClassification c;
    c.built = Subspace::from_matrix(f, std::move(rows_mat));
    c.base_degree = r;
    c.summand_count = t;
    c.mipo_degree = f.minimal_polynomial(f.alpha_pow(l), r).degree();
    c.alpha_l_stabilizes = scalar_multiply(c.built, f.alpha_pow(l)) == c.built;
    c.is_field = (f.n() % (r * t) == 0) && c.built == Subspace::subfield(f, r * t);
    c.base_is_best_friend = best_friend_degree(c.built) == r;
    if (c.base_is_best_friend) c.predicted_distance = 2 * r;
    return c;
}

unsigned min_pairwise_distance(std::span<const Subspace> code) {
    if (code.size() < 2)
        throw Error(errc::invalid_argument, "need at least two subspaces");
    unsigned best = UINT32_MAX;
    for (std::size_t i = 0; i < code.size(); ++i)
        for (std::size_t j = i + 1; j < code.size(); ++j)
            best = std::min(best, subspace_distance(code[i], code[j]));
    return best;
}

std::optional<unsigned> subfield_coset_upper_bound(const Subspace& u) {
    if (!u.contains_one()) throw Error(errc::not_normalized, "coset detector needs 1 in U");
    const Field& f = u.field();
    const unsigned k = static_cast<unsigned>(u.dim());
    const unsigned r = best_friend_degree(u);

    auto degrees = f.subfield_degrees();
    std::vector<FieldElement> elems; // lazily filled
    for (auto it = degrees.rbegin(); it != degrees.rend(); ++it) {
        unsigned rp = *it;
        if (rp <= r || rp > k) continue;
        FieldElement g = f.subfield_generator(rp);
        // basis powers g^1..g^{rp-1}; g^0 adds nothing to the membership test
        std::vector<FieldElement> powers;
        FieldElement cur = g;
        for (unsigned i = 1; i < rp; ++i) {
            powers.push_back(cur);
            cur = f.mul(cur, g);
        }
        if (elems.empty()) elems = u.nonzero_elements();
        for (FieldElement gamma : elems) {
            bool inside = true;
            for (FieldElement p : powers) {
                if (!u.contains(f.mul(gamma, p))) {
                    inside = false;
                    break;
                }
            }
            if (inside) return 2 * (k - rp);
        }
    }
    return std::nullopt;
}

} // namespace orbitcodes
