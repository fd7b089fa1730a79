#include <doctest.h>

#include "orbitcodes/json_io.hpp"
#include "orbitcodes/orbit.hpp"
#include "orbitcodes/parse.hpp"

using namespace orbitcodes;

namespace {
Field f26() { return Field::make(2, 6, std::vector<unsigned>{1, 1, 0, 0, 0, 0, 1}); }
} // namespace

TEST_CASE("inline field syntax") {
    FieldSpec s = parse_field_inline("2,6,1,1,0,0,0,0,1");
    CHECK(s.q == 2);
    CHECK(s.n == 6);
    CHECK(s.modulus == std::vector<unsigned>{1, 1, 0, 0, 0, 0, 1});
    FieldSpec d = parse_field_inline("3,4");
    CHECK(d.modulus.empty());
    CHECK_THROWS_AS(parse_field_inline("2"), Error);
    CHECK_THROWS_AS(parse_field_inline("2,6,1,1"), Error);
    CHECK_THROWS_AS(parse_field_inline("2,x"), Error);
}

TEST_CASE("generator forms agree") {
    Field f = f26();
    Subspace by_logs = parse_generator(f, "logs:0,1,4");
    Subspace by_rows = parse_generator(f, "rows:100000;010000;000010");
    CHECK(by_logs == by_rows);

    Field f12 = Field::make(2, 12, std::vector<unsigned>{1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1});
    Subspace by_sum = parse_generator(f12, "F(2)+a^1*F(2)+a^3*F(2)");
    CHECK(by_sum.dim() == 6);
    Subspace plain = parse_generator(f12, "F(12)");
    CHECK(plain == Subspace::whole(f12));

    CHECK_THROWS_AS(parse_generator(f, "rows:10"), Error);
    CHECK_THROWS_AS(parse_generator(f, "rows:falsch"), Error);
    CHECK_THROWS_AS(parse_generator(f, "nonsense"), Error);
    CHECK_THROWS_AS(parse_generator(f, "a^2 F(1)"), Error);
}

TEST_CASE("field spec JSON round trip") {
    Field f = f26();
    std::string text = field_spec_to_json(f.spec());
    FieldSpec back = field_spec_from_json(text);
    CHECK(back == f.spec());
    CHECK_THROWS(field_spec_from_json("{\"q\": 2}"));
}

TEST_CASE("subspace JSON round trip") {
    Field f = f26();
    Subspace u = parse_generator(f, "logs:0,1,4");
    Subspace back = subspace_from_json(f, subspace_to_json(u));
    CHECK(back == u);
    // gen_logs alone reconstructs the span
    Subspace from_logs = subspace_from_json(f, R"({"gen_logs": [0, 1, 4]})");
    CHECK(from_logs == u);
    CHECK_THROWS_AS(
        subspace_from_json(f, R"({"k": 2, "rows": [[1,0,0,0,0,0],[0,1,0,0,0,0],[0,0,0,0,1,0]]})"),
        Error);
}

TEST_CASE("orbit descriptor round trip") {
    Field f = f26();
    OrbitCode code(parse_generator(f, "logs:0,1,4"), 1);
    std::string text = orbit_descriptor_to_json(code, 4);
    OrbitCode back = orbit_from_descriptor_json(text);
    CHECK(back.size() == 63);
    CHECK(back.generator() == code.generator());
    CHECK(same_field(back.field(), f));

    // a stated N that contradicts the orbit is rejected
    std::string lying = R"({"q":2,"n":6,"modulus":[1,1,0,0,0,0,1],
        "generator":{"gen_logs":[0,1,4]},"beta_log":1,"N":62})";
    CHECK_THROWS_AS(orbit_from_descriptor_json(lying), Error);
}

TEST_CASE("constituent descriptors") {
    std::string orbit_desc = R"({
        "q": 2, "n": 6, "modulus": [1,1,0,0,0,0,1],
        "generator": {"gen_logs": [0, 9, 18]},
        "beta_log": 1, "distance": 6
    })";
    ConstituentCode c = constituent_from_json(orbit_desc);
    CHECK(c.size() == 9); // the F_8 spread
    CHECK(c.distance() == 6);

    std::string explicit_desc = R"({
        "q": 2, "distance": 2,
        "matrices": [[[1,0],[0,1]]]
    })";
    ConstituentCode e = constituent_from_json(explicit_desc);
    CHECK(e.size() == 1);
    CHECK(e.dim() == 2);

    std::string subset_desc = R"({
        "q": 2, "n": 7, "modulus": [1,1,0,0,0,0,0,1],
        "base": [[1,0,0,0,0,0,0],[0,1,0,0,1,0,1],[0,0,1,1,0,1,0]],
        "exponents": [0, 2, 5]
    })";
    ConstituentCode s = constituent_from_json(subset_desc);
    CHECK(s.size() == 3);
    CHECK(s.distance() == 6); // measured: pairwise trivial intersections
}

TEST_CASE("linked code JSON carries the construction") {
    Field f = f26();
    ConstituentCode spread = ConstituentCode::from_orbit(spread_code(f, 3), 6);
    LinkedCode linked = link_two(spread, spread);
    std::string text = linked_code_to_json(linked);
    CHECK(text.find("\"construction\":\"two\"") != std::string::npos);
    CHECK(text.find("\"N\":\"99\"") != std::string::npos);
}

TEST_CASE("exported constituents read back as constituents") {
    Field f6 = f26();
    ConstituentCode c1 = ConstituentCode::from_orbit(spread_code(f6, 3), 6);
    Field f7 = Field::make(2, 7, std::vector<unsigned>{1, 1, 0, 0, 0, 0, 0, 1});
    Matrix base = Matrix::from_rows(2, {{1, 0, 0, 0, 0, 0, 0},
                                        {0, 1, 0, 0, 1, 0, 1},
                                        {0, 0, 1, 1, 0, 1, 0}});
    LinkedCode linked = link_cyclic(c1, f7, base, {0, 2, 5, 10, 20});
    // pull each constituent blob out of the linked document and re-import
    auto doc = linked_code_to_json(linked);
    std::size_t pos = doc.find("\"constituents\":[");
    REQUIRE(pos != std::string::npos);
    // crude but sufficient: re-parse through the public reader per blob
    for (const auto& c : linked.constituents()) {
        LinkedCode single = link_many({c});
        std::string text = linked_code_to_json(single);
        // extract the single constituent object
        std::size_t open = text.find("\"constituents\":[") + 16;
        int depth = 0;
        std::size_t end = open;
        do {
            if (text[end] == '{') ++depth;
            if (text[end] == '}') --depth;
            ++end;
        } while (depth > 0);
        ConstituentCode back = constituent_from_json(text.substr(open, end - open));
        CHECK(back.size() == c.size());
        CHECK(back.length() == c.length());
        CHECK(back.distance() == c.distance());
        CHECK(back.member(0) == c.member(0));
    }
}
