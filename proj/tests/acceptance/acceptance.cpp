// Acceptance suite: every reference result the library must reproduce,
// one criterion per function, each with a hard wall-clock budget. Prints a
// PASS/FAIL line per criterion and exits nonzero if any fails.

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "orbitcodes/bigint.hpp"
#include "orbitcodes/distance.hpp"
#include "orbitcodes/fixtures.hpp"
#include "orbitcodes/linkage.hpp"
#include "orbitcodes/orbit.hpp"
#include "orbitcodes/parse.hpp"
#include "orbitcodes/search.hpp"

using namespace orbitcodes;

namespace {

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<void(std::vector<std::string>&)> run; // push failure messages
};

Field f26() { return Field::make(2, 6, std::vector<unsigned>{1, 1, 0, 0, 0, 0, 1}); }
Field f212() {
    return Field::make(2, 12, std::vector<unsigned>{1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1});
}
Field f27() { return Field::make(2, 7, std::vector<unsigned>{1, 1, 0, 0, 0, 0, 0, 1}); }

void expect(std::vector<std::string>& fails, bool ok, const std::string& what) {
    if (!ok) fails.push_back(what);
}

template <typename T>
void expect_eq(std::vector<std::string>& fails, const T& got, const T& want,
               const std::string& what) {
    if (!(got == want)) {
        if constexpr (std::is_arithmetic_v<T>) {
            fails.push_back(what + ": expected " + std::to_string(want) + ", got " +
                            std::to_string(got));
        } else {
            fails.push_back(what);
        }
    }
}

Subspace random_subspace_with_one(const Field& f, unsigned k, std::mt19937_64& rng) {
    while (true) {
        Matrix m(k, f.n(), f.q());
        m(0, 0) = 1;
        for (std::size_t i = 1; i < k; ++i)
            for (std::size_t j = 0; j < f.n(); ++j)
                m(i, j) = static_cast<std::uint8_t>(rng() % f.q());
        Subspace s = Subspace::from_matrix(f, std::move(m));
        if (s.dim() == k) return s;
    }
}

// criterion 1
void c_orbit_63(std::vector<std::string>& fails) {
    Field f = f26();
    Subspace u = parse_generator(f, "logs:0,1,4");
    expect_eq(fails, orbit_cardinality(u, 1), std::uint64_t(63), "N");
    expect_eq(fails, best_friend_degree(u), 1u, "r");
    expect_eq(fails, distance_multiset(u).distance, 4u, "multiset distance");
    expect_eq(fails, distance_bruteforce(u).distance, 4u, "brute distance");
}

// criterion 2
void c_orbit_1365_optimal(std::vector<std::string>& fails) {
    Field f = f212();
    Subspace u = parse_generator(f, "F(2)+a^1*F(2)+a^3*F(2)");
    expect_eq(fails, orbit_cardinality(u, 1), std::uint64_t(1365), "N");
    expect_eq(fails, best_friend_degree(u), 2u, "r");
    auto t0 = std::chrono::steady_clock::now();
    DistanceReport multi = distance_multiset(u);
    double multi_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    expect_eq(fails, multi.distance, 8u, "multiset distance");
    expect_eq(fails, multi.friend_dim(), 1u, "max dim_{F_4}(U cap U a^j)");
    expect(fails, multi_s < 1.0, "multiset method took " + std::to_string(multi_s) + "s (>= 1s)");
    t0 = std::chrono::steady_clock::now();
    DistanceReport brute = distance_bruteforce(u, 1, true); // full scan, no early exit
    double brute_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    expect_eq(fails, brute.distance, 8u, "brute distance");
    expect_eq(fails, brute.max_intersection_dim / 2, 1u, "brute max dim_{F_4}");
    expect(fails, brute_s < 30.0, "brute force took " + std::to_string(brute_s) + "s (>= 30s)");
}

// criterion 3
void c_orbit_1365_coset(std::vector<std::string>& fails) {
    Field f = f212();
    Subspace w = parse_generator(f, "F(4)+a^1*F(2)");
    expect_eq(fails, orbit_cardinality(w, 1), std::uint64_t(1365), "N");
    expect_eq(fails, best_friend_degree(w), 2u, "r");
    expect_eq(fails, distance_multiset(w).distance, 4u, "distance");
    auto bound = subfield_coset_upper_bound(w);
    expect(fails, bound.has_value() && *bound == 4, "coset upper bound should be 4");
}

// criterion 4
void c_spread(std::vector<std::string>& fails) {
    Field f = f26();
    OrbitCode code = spread_code(f, 3);
    expect_eq(fails, code.size(), std::uint64_t(9), "N");
    expect_eq(fails, distance_multiset(code.generator()).distance, 6u, "distance");
    auto members = code.members();
    expect(fails, is_spread(members), "members must partition the nonzero vectors");
}

// criterion 5
void c_f81(std::vector<std::string>& fails) {
    Field f = Field::make(3, 4, std::vector<unsigned>{2, 1, 0, 0, 1});
    FieldElement beta = f.alpha_pow(16);
    MinimalPolynomial mp = f.minimal_polynomial(beta);
    expect(fails,
           f.minimal_polynomial_base_coeffs(mp) == std::vector<unsigned>{1, 1, 1, 1, 1},
           "mipo(a^16) != x^4+x^3+x^2+x+1");
    Subspace u = Subspace::subfield(f, 2);
    auto info = stabilizer_order(u, 16);
    expect_eq(fails, info.stabilizer_size, std::uint64_t(1), "stabilizer order");
    expect_eq(fails, info.orbit_size, std::uint64_t(5), "orbit size");
    unsigned stab_plus = stab_plus_beta_degree(u, 16);
    unsigned bf = best_friend_degree(u);
    expect_eq(fails, stab_plus, 1u, "Stab+ degree");
    expect_eq(fails, bf, 2u, "best friend degree");
    expect(fails, stab_plus < bf, "Stab+ must be strictly smaller than the best friend");
}

// criterion 6
void c_oracle_equivalence(std::vector<std::string>& fails) {
    std::vector<std::pair<unsigned, unsigned>> params{{2, 8}, {2, 10}, {2, 12}, {3, 6}};
    std::mt19937_64 rng(0xACCE5508);
    std::uint64_t checked = 0, mismatches = 0;
    for (auto [q, n] : params) {
        Field f = (q == 2 && n == 12) ? f212() : Field::make(q, n);
        for (int trial = 0; trial < 60; ++trial) {
            unsigned k = 2 + rng() % (n / 2 - 1);
            Subspace u = random_subspace_with_one(f, k, rng);
            RepProfile prof = rep_profile(u);
            DistanceReport multi = distance_multiset(u);
            DistanceReport brute = distance_bruteforce(u, 1, true);
            if (multi.distance != brute.distance) ++mismatches;
            // per-exponent intersection dimensions
            std::vector<FieldElement> rows = u.basis_elements();
            FieldElement alpha = f.alpha();
            Matrix scratch(2 * k, f.n(), f.q());
            for (unsigned i = 0; i < k; ++i)
                std::copy(u.basis().row(i).begin(), u.basis().row(i).end(),
                          scratch.row(i).begin());
            for (std::uint64_t j = 1; j < prof.orbit_size; ++j) {
                for (auto& r : rows) r = f.mul(r, alpha);
                for (unsigned i = 0; i < k; ++i) {
                    auto digits = f.phi(rows[i]);
                    std::copy(digits.begin(), digits.end(), scratch.row(k + i).begin());
                }
                unsigned dim_direct = static_cast<unsigned>(2 * k - rank(scratch));
                if (dim_direct != prof.intersection_dim(j)) ++mismatches;
            }
            ++checked;
        }
    }
    expect(fails, checked >= 200, "need at least 200 random subspaces");
    expect_eq(fails, mismatches, std::uint64_t(0), "oracle mismatches");
}

// criterion 7
void c_exhaustive(std::vector<std::string>& fails) {
    Field f6 = f26();
    SearchSpec s6;
    s6.k = 3;
    s6.friend_degree = 1;
    s6.target_distance = 4;
    SearchResult r6 = exhaustive_search(f6, s6);
    expect(fails, r6.exhaustive_complete, "(6,3,1,2) search incomplete");
    expect(fails, r6.target_met, "(6,3,1,2) should admit distance 4");

    Field f8 = Field::make(2, 8, std::vector<unsigned>{1, 0, 0, 0, 1, 1, 1, 0, 1});
    SearchSpec s8;
    s8.k = 4;
    s8.friend_degree = 1;
    s8.target_distance = 6;
    s8.prune = false; // exact histogram: certify and report the true maximum
    SearchResult r8 = exhaustive_search(f8, s8);
    expect(fails, r8.exhaustive_complete, "(8,4,1,2) search incomplete");
    expect_eq(fails, r8.candidates_enumerated, std::uint64_t(11811),
              "(8,4,1,2) enumeration count");
    expect(fails, !r8.target_met, "(8,4,1,2) must not reach distance 6");
    expect(fails, r8.best && r8.best->second <= 4, "(8,4,1,2) best distance must be <= 4");
    expect(fails, gaussian_binomial(7, 3, 2) == 11811, "[7 choose 3]_2 formula");
}

// criterion 8
void c_dim3_family(std::vector<std::string>& fails) {
    for (auto [q, n] : fixtures::dim3_family_parameters()) {
        Field f = Field::make(q, n, fixtures::dim3_family_modulus(q, n));
        auto [u, rep] = dim3_family(f);
        std::uint64_t expected_n = f.group_order() / (q - 1);
        if (rep.distance != 4 || orbit_cardinality(u, 1) != expected_n) {
            fails.push_back("family fixture q=" + std::to_string(q) + " n=" + std::to_string(n));
        }
        if (rep.method != DistanceMethod::multiset)
            fails.push_back("family fixture must use the multiset method");
    }
}

// criterion 9
void c_linkage_partspread(std::vector<std::string>& fails) {
    Field f6 = f26();
    ConstituentCode c1 = ConstituentCode::from_orbit(spread_code(f6, 3), 6);
    Field f7 = f27();
    Matrix base = Matrix::from_rows(2, {{1, 0, 0, 0, 0, 0, 0},
                                        {0, 1, 0, 0, 1, 0, 1},
                                        {0, 0, 1, 1, 0, 1, 0}});
    std::vector<std::uint64_t> exps{0, 2, 5, 10, 20, 23, 57, 72, 75, 91, 95, 109, 113};
    LinkedCode linked = link_cyclic(c1, f7, base, exps);
    expect_eq(fails, linked.length(), std::size_t(13), "n");
    expect(fails, linked.cardinality() == BigUint(1165), "N != 1165");
    expect_eq(fails, linked.distance(), 6u, "construction distance");
    unsigned verified = verified_min_distance(linked, 2);
    expect_eq(fails, verified, 6u, "pairwise verified distance");
    expect(fails, linked.cardinality() <= BigUint(1169), "partial spread bound 1169");
}

// criterion 10
void c_linkage_chain(std::vector<std::string>& fails) {
    std::vector<ConstituentCode> cs;
    for (unsigned n = 6; n <= 20; ++n) {
        Field f = Field::make(2, n, fixtures::dim3_family_modulus(2, n));
        auto [u, rep] = dim3_family(f);
        if (rep.distance != 4) fails.push_back("constituent n=" + std::to_string(n));
        cs.push_back(ConstituentCode::from_orbit(OrbitCode(u, 1), rep.distance));
    }
    LinkedCode linked = link_many(cs);
    BigUint expected = BigUint::pow(2, 195);
    expected -= 1;
    expect(fails, linked.cardinality() == expected, "N != 2^195 - 1");
    expect_eq(fails, linked.distance(), 4u, "construction distance");
    auto bound = check_cardinality_bound(linked);
    expect(fails, bound.holds && bound.equality && bound.equality_expected,
           "cardinality bound equality (q=2, all best friends F_2)");
    std::mt19937_64 rng(0xACCE5510);
    unsigned min_seen = 6;
    int pairs = 0;
    while (pairs < 100) {
        std::vector<std::uint64_t> t1(cs.size()), t2(cs.size());
        auto draw = [&](std::vector<std::uint64_t>& t) {
            bool nz = false;
            for (std::size_t i = 0; i < t.size(); ++i) {
                t[i] = rng() % (cs[i].size() + 1);
                nz = nz || t[i];
            }
            if (!nz) t[0] = 1;
        };
        draw(t1);
        draw(t2);
        if (t1 == t2) continue;
        Matrix m1 = linked.member_from_tuple(t1);
        Matrix m2 = linked.member_from_tuple(t2);
        min_seen = std::min(min_seen,
                            static_cast<unsigned>(2 * (rank_of_stack(m1, m2) - linked.dim())));
        ++pairs;
    }
    expect(fails, min_seen >= 4, "random member pair below distance 4");
}

// criterion 11
void c_properties(std::vector<std::string>& fails) {
    std::mt19937_64 rng(0xACCE5511);

    // distance multiples and range on random primitive orbits
    for (auto [q, n] : {std::pair<unsigned, unsigned>{2, 8}, {3, 6}}) {
        Field f = Field::make(q, n);
        for (int t = 0; t < 20; ++t) {
            unsigned k = 2 + rng() % (n / 2 - 1);
            Subspace u = random_subspace_with_one(f, k, rng);
            DistanceReport rep = distance_multiset(u);
            unsigned r = rep.friend_degree;
            if (rep.distance % (2 * r) != 0 || rep.distance < 2 * r || rep.distance > 2 * k)
                fails.push_back("distance range/multiple violation");
        }
    }

    // dual distance distribution invariance
    {
        Field f = f26();
        OrbitCode code(parse_generator(f, "logs:0,1,4"), 1);
        auto members = code.members();
        std::map<unsigned, std::uint64_t> orig, dualized;
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                ++orig[subspace_distance(members[i], members[j])];
                ++dualized[subspace_distance(dual(members[i]), dual(members[j]))];
            }
        if (orig != dualized) fails.push_back("dual distance distribution differs");
    }

    // prime degree: full cardinality (q^n-1)/(q-1)
    for (unsigned n : {5u, 7u}) {
        Field f = Field::make(2, n);
        for (int t = 0; t < 10; ++t) {
            unsigned k = 1 + rng() % (n - 1);
            Subspace u = random_subspace_with_one(f, k, rng);
            if (orbit_cardinality(u, 1) != f.group_order())
                fails.push_back("prime-degree cardinality violation");
        }
    }

    // orbit size divisibility for non-primitive beta
    {
        Field f = f212();
        for (int t = 0; t < 15; ++t) {
            unsigned k = 1 + rng() % 6;
            Subspace u = random_subspace_with_one(f, k, rng);
            std::uint64_t e = 1 + rng() % (f.group_order() - 1);
            std::uint64_t bord = f.group_order() / std::gcd(e, f.group_order());
            std::uint64_t qk = std::uint64_t(1) << k;
            std::uint64_t divisor = bord / std::gcd(bord, qk - 1);
            if (orbit_cardinality(u, e) % divisor != 0)
                fails.push_back("non-primitive divisibility violation");
        }
    }

    // direct sum equivalences and the worst-case distance
    {
        Field f = f212();
        int built = 0;
        while (built < 50) {
            unsigned r = std::vector<unsigned>{1, 1, 2, 3}[rng() % 4];
            unsigned t = 2 + rng() % 3;
            if (r * t > 6) continue;
            std::uint64_t l = 1 + rng() % (f.group_order() - 1);
            try {
                auto cls = classify_direct_sum(f, r, l, t);
                ++built;
                bool eq1 = (cls.mipo_degree == cls.summand_count);
                if (eq1 != cls.alpha_l_stabilizes || eq1 != cls.is_field ||
                    eq1 == cls.base_is_best_friend)
                    fails.push_back("direct sum equivalence violation");
                if (cls.base_is_best_friend && cls.predicted_distance) {
                    DistanceReport rep = distance_bruteforce(cls.built);
                    if (rep.distance != *cls.predicted_distance)
                        fails.push_back("worst-case distance prediction violated");
                }
            } catch (const Error& e) {
                if (e.code() != errc::non_direct) throw;
            }
        }
    }
}

// criterion 12
void c_random_generator_best(std::vector<std::string>& fails) {
    Field f = f212();
    std::vector<std::uint64_t> winners;
    for (std::uint64_t j = 1; j < 63; ++j) {
        if (std::gcd<std::uint64_t>(j, 63) != 1) continue;
        FieldElement b = f.alpha_pow(65 * j);
        FieldElement b2 = f.mul(b, b);
        std::vector<FieldElement> gens{f.one(),           f.alpha_pow(1),
                                       f.alpha_pow(4),    f.alpha_pow(10),
                                       f.mul(f.alpha_pow(10), b), f.mul(f.alpha_pow(8), b2)};
        Subspace u = Subspace::from_generators(f, gens);
        if (u.dim() != 6) continue;
        if (best_friend_degree(u) != 1) continue;
        unsigned d = distance_multiset(u).distance;
        std::printf("        beta = a^%" PRIu64 " (j=%" PRIu64 "): distance %u\n", 65 * j, j, d);
        if (d == 8) winners.push_back(j);
    }
    expect(fails, !winners.empty(), "no order-63 beta reaches distance 8");
    expect(fails, winners == std::vector<std::uint64_t>{13, 53},
           "the distance-8 choices should be j = 13 and j = 53");
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "orbit of span{1,a,a^4} in F_2^6: N=63, r=1, d=4", 1.0, c_orbit_63},
        {2, "orbit of F_4+aF_4+a^3F_4 in F_2^12: N=1365, r=2, d=8", 31.0, c_orbit_1365_optimal},
        {3, "orbit of F_16+aF_4: N=1365, r=2, d=4, coset bound 4", 30.0, c_orbit_1365_coset},
        {4, "orbit of F_8 in F_2^6 is a (6,9,6,3) spread", 30.0, c_spread},
        {5, "non-primitive orbit of F_9 in F_3^4: trivial stabilizer", 30.0, c_f81},
        {6, "multiset method == brute force on 240 random subspaces", 300.0,
         c_oracle_equivalence},
        {7, "exhaustive: (6,3,1,2) admits d=4; (8,4,1,2) admits no d=6", 600.0, c_exhaustive},
        {8, "span{1,a^2,a^3} family: d=4, full cardinality, 24 fields", 120.0, c_dim3_family},
        {9, "cyclic linkage gives a (13,1165,6,3) code, fully verified", 300.0,
         c_linkage_partspread},
        {10, "15-fold linkage: 2^195-1 members at distance 4", 120.0, c_linkage_chain},
        {11, "structural property suites, zero violations", 300.0, c_properties},
        {12, "span{1,a,a^4,a^10,a^10 b,a^8 b^2} reaches d=8 for some order-63 b", 300.0,
         c_random_generator_best},
    };

    int failures = 0;
    for (auto& c : criteria) {
        std::vector<std::string> fails;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(fails);
        } catch (const std::exception& e) {
            fails.push_back(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.limit_seconds)
            fails.push_back("exceeded the time budget of " + std::to_string(c.limit_seconds) +
                            "s");
        bool ok = fails.empty();
        std::printf("[%2d/12] %s  %s  (%.2fs, budget %.0fs)\n", c.id, ok ? "PASS" : "FAIL",
                    c.name.c_str(), secs, c.limit_seconds);
        for (const auto& f : fails) std::printf("        - %s\n", f.c_str());
        if (!ok) ++failures;
    }
    std::printf("%d/12 criteria passed\n", 12 - failures);
    return failures == 0 ? 0 : 1;
}
