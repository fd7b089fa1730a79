#include <doctest.h>

#include <algorithm>
#include <set>

#include "orbitcodes/linkage.hpp"
#include "orbitcodes/parse.hpp"

using namespace orbitcodes;

namespace {

Field f26() { return Field::make(2, 6, std::vector<unsigned>{1, 1, 0, 0, 0, 0, 1}); }
Field f27() { return Field::make(2, 7, std::vector<unsigned>{1, 1, 0, 0, 0, 0, 0, 1}); }

Matrix partspread_base() {
    return Matrix::from_rows(2, {{1, 0, 0, 0, 0, 0, 0},
                                 {0, 1, 0, 0, 1, 0, 1},
                                 {0, 0, 1, 1, 0, 1, 0}});
}

const std::vector<std::uint64_t> partspread_exponents{0,  2,  5,  10, 20, 23, 57,
                                                      72, 75, 91, 95, 109, 113};

std::multiset<std::vector<std::uint8_t>> member_bag(const LinkedCode& code) {
    std::multiset<std::vector<std::uint8_t>> bag;
    for (const Matrix& m : code.materialize()) bag.insert(m.data());
    return bag;
}

} // namespace

TEST_CASE("two-code linkage sizes and distance") {
    Field f = f26();
    ConstituentCode spread = ConstituentCode::from_orbit(spread_code(f, 3), 6);
    LinkedCode linked = link_two(spread, spread);
    CHECK(linked.length() == 12);
    CHECK(linked.cardinality() == BigUint(99)); // 9 + 9 + 81
    CHECK(linked.distance() == 6);
    CHECK(verified_min_distance(linked) == 6);
    auto members = linked.materialize();
    CHECK(members.size() == 99);
    for (const Matrix& m : members) CHECK(rank(m) == 3);

    // a single-member second constituent gives N = 2 N1 + 1
    Matrix single = Matrix::from_rows(2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    ConstituentCode one = ConstituentCode::from_matrices({single}, 6);
    ConstituentCode spread2 = ConstituentCode::from_orbit(spread_code(f, 3), 6);
    LinkedCode with_one = link_two(spread2, one);
    CHECK(with_one.cardinality() == BigUint(2 * 9 + 1));

    Matrix wrong_k = Matrix::from_rows(2, {{1, 0, 0, 0}});
    CHECK_THROWS_AS(link_two(spread, ConstituentCode::from_matrices({wrong_k}, 2)), Error);
}

TEST_CASE("linking codes of different distance keeps the minimum") {
    Field f = f26();
    ConstituentCode spread = ConstituentCode::from_orbit(spread_code(f, 3), 6);
    Subspace u = parse_generator(f, "logs:0,1,4"); // distance-4 orbit
    ConstituentCode weaker = ConstituentCode::from_orbit(OrbitCode(u, 1), 4);
    LinkedCode linked = link_two(spread, weaker);
    CHECK(linked.cardinality() == BigUint(9 + 63 + 9 * 63));
    CHECK(linked.distance() == 4);
    CHECK(verified_min_distance(linked, 2) == 4); // min{6, 4}, not max
}

TEST_CASE("multi-fold linkage matches iterated two-fold linkage") {
    // three small constant dimension codes with k = 1
    Field f2 = Field::make(2, 2, std::vector<unsigned>{1, 1, 1});
    Field f3 = Field::make(2, 3, std::vector<unsigned>{1, 1, 0, 1});
    Field f3b = Field::make(2, 3, std::vector<unsigned>{1, 0, 1, 1});
    Subspace one2 = Subspace::subfield(f2, 1);
    Subspace one3 = Subspace::subfield(f3, 1);
    Subspace one3b = Subspace::subfield(f3b, 1);
    ConstituentCode a = ConstituentCode::from_orbit(OrbitCode(one2, 1), 2);
    ConstituentCode b = ConstituentCode::from_orbit(OrbitCode(one3, 1), 2);
    ConstituentCode c = ConstituentCode::from_orbit(OrbitCode(one3b, 1), 2);

    LinkedCode many = link_many({a, b, c});
    CHECK(many.cardinality() == BigUint(4 * 8 * 8 - 1));

    // associativity at the member level requires flattening the nested code;
    // compare the member multisets instead
    LinkedCode ab = link_two(a, b);
    std::multiset<std::vector<std::uint8_t>> nested;
    ConstituentCode ab_members =
        ConstituentCode::from_matrices(ab.materialize(), ab.distance());
    LinkedCode abc = link_two(ab_members, c);
    CHECK(abc.cardinality() == many.cardinality());
    CHECK(member_bag(abc) == member_bag(many));

    // t = 1 is the constituent itself
    LinkedCode solo = link_many({a});
    CHECK(solo.cardinality() == BigUint(3));
    auto solo_members = solo.materialize();
    CHECK(solo_members.size() == 3);
}

TEST_CASE("three spreads give the cube formula") {
    Field f = f26();
    ConstituentCode spread = ConstituentCode::from_orbit(spread_code(f, 3), 6);
    LinkedCode linked = link_many({spread, spread, spread});
    CHECK(linked.cardinality() == BigUint(999)); // 10^3 - 1
    CHECK(linked.length() == 18);
    CHECK(linked.distance() == 6);
}

TEST_CASE("cyclic linkage reaches every power of the second field") {
    Field f6 = f26();
    ConstituentCode c1 = ConstituentCode::from_orbit(spread_code(f6, 3), 6);
    Field f7 = f27();

    LinkedCode linked = link_cyclic(c1, f7, partspread_base(), partspread_exponents);
    CHECK(linked.length() == 13);
    CHECK(linked.cardinality() == BigUint(9 + 13 + 9 * 127));
    CHECK(linked.distance() == 6);

    // single exponent: N = N1 + 1 + (q^{n2}-1) N1
    LinkedCode tiny = link_cyclic(c1, f7, partspread_base(), {0});
    CHECK(tiny.cardinality() == BigUint(9 + 1 + 127 * 9));

    Matrix bad = Matrix::from_rows(2, {{1, 0, 0, 0, 0, 0, 0},
                                       {1, 0, 0, 0, 0, 0, 0},
                                       {0, 0, 1, 1, 0, 1, 0}});
    CHECK_THROWS_AS(link_cyclic(c1, f7, bad, {0}), Error); // rank loss
}

TEST_CASE("greedy partial spreads") {
    Field f7 = f27();
    Subspace gen = Subspace::from_matrix(f7, partspread_base());
    OrbitCode orbit(gen, 1);
    ConstituentCode picked = greedy_partial_spread(orbit, partspread_exponents);
    CHECK(picked.size() == 13);
    CHECK(picked.measure_distance() == 6);

    ConstituentCode scanned = greedy_partial_spread(orbit);
    CHECK(scanned.size() == 10);

    std::vector<std::uint64_t> colliding{0, 1};
    CHECK_THROWS_AS(greedy_partial_spread(orbit, colliding), Error);
    std::vector<std::uint64_t> single{0};
    CHECK(greedy_partial_spread(orbit, single).size() == 1);
}

TEST_CASE("union of orbit codes under the diagonal group") {
    Field f2 = Field::make(2, 2, std::vector<unsigned>{1, 1, 1});
    Field f3 = Field::make(2, 3, std::vector<unsigned>{1, 1, 0, 1});
    ConstituentCode a =
        ConstituentCode::from_orbit(OrbitCode(Subspace::subfield(f2, 1), 1), 2);
    ConstituentCode b =
        ConstituentCode::from_orbit(OrbitCode(Subspace::subfield(f3, 1), 1), 2);
    LinkedCode linked = link_two(a, b);
    CHECK(linked.cardinality() == BigUint(31)); // 2^5 - 1
    UnionOrbitReport rep = verify_union_of_orbits(linked);
    CHECK(rep.applicable);
    CHECK(rep.closed);
    CHECK(rep.orbit_count == 3); // 2^t - 1
    CHECK(rep.group_order == 21);

    // gcd(2,4) = 2: hypothesis fails, the verifier reports and claims nothing
    Field f4 = Field::make(2, 4, std::vector<unsigned>{1, 1, 0, 0, 1});
    ConstituentCode c =
        ConstituentCode::from_orbit(OrbitCode(Subspace::subfield(f4, 1), 1), 2);
    UnionOrbitReport bad = verify_union_of_orbits(link_two(a, c));
    CHECK_FALSE(bad.applicable);

    // t = 1: an orbit code is trivially one orbit
    UnionOrbitReport solo = verify_union_of_orbits(link_many({b}));
    CHECK(solo.applicable);
    CHECK(solo.closed);
    CHECK(solo.orbit_count == 1);
}

TEST_CASE("cardinality bound for linked orbit codes") {
    Field f2 = Field::make(2, 2, std::vector<unsigned>{1, 1, 1});
    Field f3 = Field::make(2, 3, std::vector<unsigned>{1, 1, 0, 1});
    ConstituentCode a =
        ConstituentCode::from_orbit(OrbitCode(Subspace::subfield(f2, 1), 1), 2);
    ConstituentCode b =
        ConstituentCode::from_orbit(OrbitCode(Subspace::subfield(f3, 1), 1), 2);
    auto bound = check_cardinality_bound(link_two(a, b));
    CHECK(bound.holds);
    CHECK(bound.equality); // q = 2, both best friends F_2
    CHECK(bound.equality_expected);

    // q = 3: always strict
    Field g2 = Field::make(3, 2);
    Field g3 = Field::make(3, 3);
    ConstituentCode ga =
        ConstituentCode::from_orbit(OrbitCode(Subspace::subfield(g2, 1), 1), 2);
    ConstituentCode gb =
        ConstituentCode::from_orbit(OrbitCode(Subspace::subfield(g3, 1), 1), 2);
    auto gbound = check_cardinality_bound(link_two(ga, gb));
    CHECK(gbound.holds);
    CHECK_FALSE(gbound.equality);
    CHECK_FALSE(gbound.equality_expected);

    // single full-orbit constituent over F_2: equality N = 2^n - 1
    auto solo = check_cardinality_bound(link_many({b}));
    CHECK(solo.equality);
}
