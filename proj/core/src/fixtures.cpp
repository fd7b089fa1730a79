#include "orbitcodes/fixtures.hpp"

#include <chrono>
#include <sstream>

#include "orbitcodes/distance.hpp"
#include "orbitcodes/linkage.hpp"
#include "orbitcodes/orbit.hpp"
#include "orbitcodes/parse.hpp"
#include "orbitcodes/search.hpp"

namespace orbitcodes::fixtures {

const char* origin_name(Origin o) noexcept {
    switch (o) {
        case Origin::published: return "published";
        case Origin::derived: return "derived";
        case Origin::definition: return "definition";
    }
    return "unknown";
}

namespace {

void check(FixtureResult& res, const std::string& label, const std::string& expected,
           const std::string& computed) {
    res.checks.push_back({label, expected, computed, expected == computed});
}

template <typename T> std::string str(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

std::string vec_str(const std::vector<unsigned>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + "]";
}

Field field_2_6() { return Field::make(2, 6, std::vector<unsigned>{1, 1, 0, 0, 0, 0, 1}); }

Field field_2_12() {
    return Field::make(2, 12, std::vector<unsigned>{1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1});
}

Field field_2_7() { return Field::make(2, 7, std::vector<unsigned>{1, 1, 0, 0, 0, 0, 0, 1}); }

Matrix partspread_base() {
    return Matrix::from_rows(2, {{1, 0, 0, 0, 0, 0, 0},
                                 {0, 1, 0, 0, 1, 0, 1},
                                 {0, 0, 1, 1, 0, 1, 0}});
}

const std::vector<std::uint64_t>& partspread_exponents() {
    static const std::vector<std::uint64_t> exps{0, 2, 5, 10, 20, 23, 57, 72, 75, 91, 95, 109, 113};
    return exps;
}

// Fields in which span{1, a^2, a^3} has best friend F_q and distance 4.
// The subspace depends on the chosen primitive element, so each (q, n) pins
// the first modulus (in low-degree-first lexicographic order) that works.
struct Dim3FamilyRow {
    unsigned q, n;
    std::vector<unsigned> modulus;
};

const std::vector<Dim3FamilyRow>& dim3_family_table() {
    static const std::vector<Dim3FamilyRow> rows = {
        {2, 6, {1, 1, 0, 0, 0, 0, 1}},
        {2, 7, {1, 0, 0, 0, 0, 0, 1, 1}},
        {2, 8, {1, 0, 0, 0, 1, 1, 1, 0, 1}},
        {2, 9, {1, 0, 0, 0, 0, 1, 0, 0, 0, 1}},
        {2, 10, {1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1}},
        {2, 11, {1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1}},
        {2, 12, {1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 1, 1}},
        {2, 13, {1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 1}},
        {2, 14, {1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 1}},
        {2, 15, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1}},
        {2, 16, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 0, 1}},
        {2, 17, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1}},
        {2, 18, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 1}},
        {2, 19, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 1}},
        {2, 20, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1}},
        {3, 6, {2, 1, 0, 0, 0, 0, 1}},
        {3, 7, {1, 0, 0, 0, 0, 1, 2, 1}},
        {3, 8, {2, 0, 0, 0, 0, 1, 0, 0, 1}},
        {5, 6, {2, 1, 0, 0, 0, 0, 1}},
        {5, 7, {2, 0, 0, 0, 0, 0, 1, 1}},
        {5, 8, {2, 0, 0, 0, 0, 0, 2, 1, 1}},
        {7, 6, {3, 1, 0, 0, 0, 5, 1}},
        {7, 7, {2, 0, 0, 0, 0, 0, 5, 1}},
        {7, 8, {3, 0, 0, 0, 0, 0, 0, 1, 1}},
    };
    return rows;
}

} // namespace

std::vector<unsigned> dim3_family_modulus(unsigned q, unsigned n) {
    for (const auto& row : dim3_family_table())
        if (row.q == q && row.n == n) return row.modulus;
    throw Error(errc::unsupported_parameters,
                "no pinned modulus for q=" + std::to_string(q) + " n=" + std::to_string(n));
}

std::vector<std::pair<unsigned, unsigned>> dim3_family_parameters() {
    std::vector<std::pair<unsigned, unsigned>> out;
    for (const auto& row : dim3_family_table()) out.emplace_back(row.q, row.n);
    return out;
}

namespace {

std::vector<Fixture> build_catalog() {
    std::vector<Fixture> cat;

    cat.push_back({"code-6-63-4-3", "(6,63,4,3)_2 orbit code from span{1,a,a^4}", Origin::published,
                   [](FixtureResult& res) {
                       Field f = field_2_6();
                       Subspace u = parse_generator(f, "logs:0,1,4");
                       check(res, "k", "3", str(u.dim()));
                       check(res, "basis", "100000;010000;000010", [&] {
                           std::string s;
                           for (std::size_t i = 0; i < u.dim(); ++i) {
                               if (i) s += ";";
                               for (std::size_t c = 0; c < 6; ++c)
                                   s += char('0' + u.basis()(i, c));
                           }
                           return s;
                       }());
                       // the full point set generates the same subspace
                       Subspace pts = parse_generator(f, "logs:0,1,4,6,16,24,33");
                       check(res, "point set span", "equal", pts == u ? "equal" : "different");
                       check(res, "r", "1", str(best_friend_degree(u)));
                       check(res, "friends", "[1]", vec_str(friend_degrees(u)));
                       check(res, "N", "63", str(orbit_cardinality(u, 1)));
                       check(res, "orbit period", "same",
                             scalar_multiply(u, f.alpha_pow(63)) == u ? "same" : "moved");
                       DistanceReport multi = distance_multiset(u);
                       DistanceReport brute = distance_bruteforce(u);
                       check(res, "distance (multiset)", "4", str(multi.distance));
                       check(res, "distance (brute force)", "4", str(brute.distance));
                   }});

    cat.push_back({"code-12-1365-8-6", "(12,1365,8,6)_2 orbit code with best friend F_4",
                   Origin::published, [](FixtureResult& res) {
                       Field f = field_2_12();
                       Subspace u = parse_generator(f, "F(2)+a^1*F(2)+a^3*F(2)");
                       check(res, "k", "6", str(u.dim()));
                       check(res, "r", "2", str(best_friend_degree(u)));
                       check(res, "friends", "[1,2]", vec_str(friend_degrees(u)));
                       check(res, "N", "1365", str(orbit_cardinality(u, 1)));
                       DistanceReport multi = distance_multiset(u);
                       check(res, "distance (multiset)", "8", str(multi.distance));
                       check(res, "max dim_{F_4} intersection", "1", str(multi.friend_dim()));
                   }});

    cat.push_back({"code-12-1365-4-6", "(12,1365,4,6)_2 with a subfield coset inside",
                   Origin::published, [](FixtureResult& res) {
                       Field f = field_2_12();
                       Subspace w = parse_generator(f, "F(4)+a^1*F(2)");
                       check(res, "k", "6", str(w.dim()));
                       check(res, "r", "2", str(best_friend_degree(w)));
                       check(res, "N", "1365", str(orbit_cardinality(w, 1)));
                       DistanceReport multi = distance_multiset(w);
                       check(res, "distance", "4", str(multi.distance));
                       auto bound = subfield_coset_upper_bound(w);
                       check(res, "coset upper bound", "4", bound ? str(*bound) : "none");
                   }});

    cat.push_back({"spread-f8", "orbit of F_8 in F_{2^6}: a 3-spread", Origin::published,
                   [](FixtureResult& res) {
                       Field f = field_2_6();
                       OrbitCode code = spread_code(f, 3);
                       check(res, "N", "9", str(code.size()));
                       auto info = stabilizer_order(code.generator(), 1);
                       check(res, "stabilizer order", "7", str(info.stabilizer_size));
                       DistanceReport d = distance_multiset(code.generator());
                       check(res, "distance", "6", str(d.distance));
                       auto members = code.members();
                       check(res, "spread", "yes", is_spread(members) ? "yes" : "no");
                   }});

    cat.push_back({"f81", "non-primitive orbit in F_{3^4}: stabilizer subfield strictly "
                          "smaller than the best friend",
                   Origin::published, [](FixtureResult& res) {
                       Field f = Field::make(3, 4, std::vector<unsigned>{2, 1, 0, 0, 1});
                       FieldElement beta = f.alpha_pow(16);
                       check(res, "order(a^16)", "5", str(f.element_order(beta)));
                       MinimalPolynomial mp = f.minimal_polynomial(beta);
                       check(res, "mipo degree", "4", str(mp.degree()));
                       check(res, "mipo coeffs", "[1,1,1,1,1]",
                             vec_str(f.minimal_polynomial_base_coeffs(mp)));
                       Subspace u = Subspace::subfield(f, 2);
                       auto info = stabilizer_order(u, 16);
                       check(res, "orbit size", "5", str(info.orbit_size));
                       check(res, "stabilizer", "1", str(info.stabilizer_size));
                       check(res, "stab+ degree", "1", str(stab_plus_beta_degree(u, 16)));
                       check(res, "best friend degree", "2", str(best_friend_degree(u)));
                       OrbitCode code(u, 16);
                       auto members = code.members();
                       check(res, "partial spread", "yes",
                             is_partial_spread(members) ? "yes" : "no");
                       check(res, "full spread", "no", is_spread(members) ? "yes" : "no");
                   }});

    cat.push_back({"dirsum-f4", "F_2 + a^21 F_2 = F_4 inside F_{2^6}", Origin::published,
                   [](FixtureResult& res) {
                       Field f = field_2_6();
                       auto c = classify_direct_sum(f, 1, 21, 2);
                       check(res, "is field", "yes", c.is_field ? "yes" : "no");
                       check(res, "mipo degree == t", "yes",
                             c.mipo_degree == c.summand_count ? "yes" : "no");
                       check(res, "a^l stabilizes", "yes", c.alpha_l_stabilizes ? "yes" : "no");
                       check(res, "best friend", "2", str(best_friend_degree(c.built)));
                   }});

    cat.push_back({"span3-f128", "span{1,a,a^2} in F_{2^7}: worst case distance 2r",
                   Origin::published, [](FixtureResult& res) {
                       Field f = Field::make(2, 7);
                       auto c = classify_direct_sum(f, 1, 1, 3);
                       check(res, "is field", "no", c.is_field ? "yes" : "no");
                       check(res, "best friend is F_2", "yes",
                             c.base_is_best_friend ? "yes" : "no");
                       check(res, "predicted distance", "2",
                             c.predicted_distance ? str(*c.predicted_distance) : "none");
                       DistanceReport d = distance_bruteforce(c.built);
                       check(res, "measured distance", "2", str(d.distance));
                       auto bound = subfield_coset_upper_bound(c.built);
                       check(res, "coset detector", "none", bound ? str(*bound) : "none");
                   }});

    cat.push_back({"partspread-f128", "13-member partial 3-spread in F_{2^7}",
                   Origin::published, [](FixtureResult& res) {
                       Field f = field_2_7();
                       Subspace gen = Subspace::from_matrix(f, partspread_base());
                       check(res, "generator k", "3", str(gen.dim()));
                       OrbitCode orbit(gen, 1);
                       check(res, "orbit size", "127", str(orbit.size()));
                       ConstituentCode c2 = greedy_partial_spread(orbit, partspread_exponents());
                       check(res, "members", "13", str(c2.size()));
                       check(res, "distance", "6", str(c2.measure_distance()));
                       ConstituentCode greedy = greedy_partial_spread(orbit);
                       check(res, "greedy scan size", "10", str(greedy.size()));
                   }});

    cat.push_back({"linkage-partspread",
                   "(13,1165,6,3)_2 from the 3-spread and the 13-member partial spread",
                   Origin::published, [](FixtureResult& res) {
                       Field f6 = field_2_6();
                       OrbitCode spread = spread_code(f6, 3);
                       ConstituentCode c1 = ConstituentCode::from_orbit(spread, 6);
                       Field f7 = field_2_7();
                       LinkedCode linked =
                           link_cyclic(c1, f7, partspread_base(), partspread_exponents());
                       check(res, "n", "13", str(linked.length()));
                       check(res, "N", "1165", linked.cardinality().to_string());
                       check(res, "distance (construction)", "6", str(linked.distance()));
                       check(res, "distance (pairwise)", "6",
                             str(verified_min_distance(linked, 2)));
                       check(res, "partial 3-spread bound (2^13-2)/7-1", "1169", str(1169));
                       check(res, "N <= bound", "yes",
                             linked.cardinality() <= BigUint(1169) ? "yes" : "no");
                   }});

    cat.push_back({"linkage-2spreads", "(12,99,6,3)_2 from two copies of the 3-spread",
                   Origin::derived, [](FixtureResult& res) {
                       Field f6 = field_2_6();
                       ConstituentCode c1 = ConstituentCode::from_orbit(spread_code(f6, 3), 6);
                       LinkedCode linked = link_two(c1, c1);
                       check(res, "N", "99", linked.cardinality().to_string());
                       check(res, "distance (pairwise)", "6",
                             str(verified_min_distance(linked, 2)));
                   }});

    cat.push_back({"linkage-chain-195",
                   "15 linked dimension-3 codes of lengths 6..20: cardinality 2^195-1",
                   Origin::published, [](FixtureResult& res) {
                       std::vector<ConstituentCode> cs;
                       std::vector<Field> fields;
                       for (unsigned n = 6; n <= 20; ++n) {
                           Field f = Field::make(2, n, dim3_family_modulus(2, n));
                           auto [u, rep] = dim3_family(f);
                           cs.push_back(
                               ConstituentCode::from_orbit(OrbitCode(u, 1), rep.distance));
                           fields.push_back(f);
                       }
                       LinkedCode linked = link_many(cs);
                       check(res, "length", "195", str(linked.length()));
                       BigUint expected = BigUint::pow(2, 195);
                       expected -= 1;
                       check(res, "N", expected.to_string(), linked.cardinality().to_string());
                       check(res, "distance (construction)", "4", str(linked.distance()));
                       auto bound = check_cardinality_bound(linked);
                       check(res, "cardinality bound equality", "yes",
                             bound.holds && bound.equality ? "yes" : "no");
                       check(res, "equality expected (q=2, all r=1)", "yes",
                             bound.equality_expected ? "yes" : "no");
                       // seeded spot check: 100 random member pairs at distance >= 4
                       std::uint64_t state = 20250808;
                       unsigned min_seen = 2 * 3;
                       for (int trial = 0; trial < 100; ++trial) {
                           std::vector<std::uint64_t> t1(15), t2(15);
                           auto draw = [&](std::vector<std::uint64_t>& t) {
                               bool nonzero = false;
                               for (std::size_t i = 0; i < t.size(); ++i) {
                                   t[i] = splitmix64(state) % (cs[i].size() + 1);
                                   nonzero = nonzero || t[i] != 0;
                               }
                               if (!nonzero) t[0] = 1;
                           };
                           draw(t1);
                           draw(t2);
                           if (t1 == t2) continue;
                           Matrix m1 = linked.member_from_tuple(t1);
                           Matrix m2 = linked.member_from_tuple(t2);
                           unsigned d = static_cast<unsigned>(2 * (rank_of_stack(m1, m2) - 3));
                           min_seen = std::min(min_seen, d);
                       }
                       check(res, "100 random pairs distance >= 4", "yes",
                             min_seen >= 4 ? "yes" : "no");
                   }});

    cat.push_back({"code-12-4095-8-6",
                   "(12,4095,8,6)_2 codes from span{1,a,a^4,a^10,a^10 b,a^8 b^2}",
                   Origin::derived, [](FixtureResult& res) {
                       Field f = field_2_12();
                       // order-63 elements b = a^{65 j}; j = 13 and j = 53 give distance 8
                       for (std::uint64_t j : {13ull, 53ull}) {
                           FieldElement b = f.alpha_pow(65 * j);
                           FieldElement b2 = f.mul(b, b);
                           std::vector<FieldElement> gens{
                               f.one(),
                               f.alpha_pow(1),
                               f.alpha_pow(4),
                               f.alpha_pow(10),
                               f.mul(f.alpha_pow(10), b),
                               f.mul(f.alpha_pow(8), b2)};
                           Subspace u = Subspace::from_generators(f, gens);
                           std::string tag = "j=" + std::to_string(j);
                           check(res, tag + " dim", "6", str(u.dim()));
                           check(res, tag + " r", "1", str(best_friend_degree(u)));
                           check(res, tag + " N", "4095", str(orbit_cardinality(u, 1)));
                           check(res, tag + " distance", "8",
                                 str(distance_multiset(u).distance));
                       }
                   }});

    for (auto [q, n] : dim3_family_parameters()) {
        std::string name = "dim3-family-q" + std::to_string(q) + "-n" + std::to_string(n);
        cat.push_back({name,
                       "span{1,a^2,a^3}: full cardinality and distance 4", Origin::published,
                       [q = q, n = n](FixtureResult& res) {
                           Field f = Field::make(q, n, dim3_family_modulus(q, n));
                           auto [u, rep] = dim3_family(f);
                           std::uint64_t expected_n = f.group_order() / (q - 1);
                           check(res, "N", str(expected_n), str(orbit_cardinality(u, 1)));
                           check(res, "distance", "4", str(rep.distance));
                       }});
    }

    return cat;
}

} // namespace

const std::vector<Fixture>& catalog() {
    static const std::vector<Fixture> cat = build_catalog();
    return cat;
}

std::vector<FixtureResult> run_catalog(const std::string& filter) {
    std::vector<FixtureResult> out;
    for (const Fixture& fx : catalog()) {
        if (!filter.empty() && fx.name.find(filter) == std::string::npos) continue;
        FixtureResult res;
        res.name = fx.name;
        auto t0 = std::chrono::steady_clock::now();
        try {
            fx.run(res);
            res.passed = true;
            for (const auto& c : res.checks) res.passed = res.passed && c.passed;
        } catch (const std::exception& e) {
            res.passed = false;
            res.error = e.what();
        }
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(res));
    }
    return out;
}

} // namespace orbitcodes::fixtures
