#include "orbitcodes/json_io.hpp"

#include <json.hpp>

namespace orbitcodes {

using nlohmann::json;

namespace {

json spec_to_obj(const FieldSpec& spec) {
    return json{{"q", spec.q}, {"n", spec.n}, {"modulus", spec.modulus}};
}

FieldSpec spec_from_obj(const json& j) {
    FieldSpec spec;
    spec.q = j.at("q").get<unsigned>();
    spec.n = j.at("n").get<unsigned>();
    spec.modulus = j.at("modulus").get<std::vector<unsigned>>();
    return spec;
}

json subspace_to_obj(const Subspace& s, bool with_gen_logs) {
    json rows = json::array();
    for (std::size_t i = 0; i < s.dim(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < s.basis().cols(); ++c) row.push_back(s.basis()(i, c));
        rows.push_back(std::move(row));
    }
    json out{{"k", s.dim()}, {"rows", std::move(rows)}};
    if (with_gen_logs && s.field().primitive() && !s.is_zero()) {
        json logs = json::array();
        for (FieldElement e : s.basis_elements()) logs.push_back(s.field().discrete_log(e));
        out["gen_logs"] = std::move(logs);
    }
    return out;
}

Subspace subspace_from_obj(const Field& f, const json& j) {
    if (j.contains("gen_logs") && !j.contains("rows")) {
        std::vector<FieldElement> gens;
        for (auto& l : j.at("gen_logs")) gens.push_back(f.alpha_pow(l.get<std::uint64_t>()));
        return Subspace::from_generators(f, gens);
    }
    auto rows = j.at("rows").get<std::vector<std::vector<std::uint8_t>>>();
    if (rows.empty()) return Subspace::zero(f);
    Matrix m = Matrix::from_rows(f.q(), rows);
    Subspace s = Subspace::from_matrix(f, std::move(m));
    if (j.contains("k") && s.dim() != j.at("k").get<std::size_t>())
        throw Error(errc::invalid_argument, "stated k does not match the rows");
    return s;
}

json matrix_to_obj(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(i, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

std::string field_spec_to_json(const FieldSpec& spec) { return spec_to_obj(spec).dump(); }

FieldSpec field_spec_from_json(std::string_view text) {
    return spec_from_obj(json::parse(text));
}

std::string subspace_to_json(const Subspace& s, bool with_gen_logs) {
    return subspace_to_obj(s, with_gen_logs).dump();
}

Subspace subspace_from_json(const Field& f, std::string_view text) {
    return subspace_from_obj(f, json::parse(text));
}

std::string orbit_descriptor_to_json(const OrbitCode& code, std::optional<unsigned> distance) {
    const Field& f = code.field();
    json out = spec_to_obj(f.spec());
    out["beta_log"] = code.beta_log();
    out["generator"] = subspace_to_obj(code.generator(), f.primitive());
    out["N"] = code.size();
    out["best_friend_degree"] = best_friend_degree(code.generator());
    if (distance) out["distance"] = *distance;
    return out.dump();
}

OrbitCode orbit_from_descriptor_json(std::string_view text) {
    json j = json::parse(text);
    Field f = Field::make(j.at("q").get<unsigned>(), j.at("n").get<unsigned>(),
                          j.contains("modulus")
                              ? std::optional(j.at("modulus").get<std::vector<unsigned>>())
                              : std::nullopt);
    Subspace gen = subspace_from_obj(f, j.at("generator"));
    std::uint64_t beta_log = j.value<std::uint64_t>("beta_log", 1);
    OrbitCode code(gen, beta_log);
    if (j.contains("N") && code.size() != j.at("N").get<std::uint64_t>())
        throw Error(errc::invalid_argument, "stated N does not match the orbit");
    return code;
}

std::string linked_code_to_json(const LinkedCode& code) {
    json out;
    switch (code.kind()) {
        case LinkedCode::Kind::two: out["construction"] = "two"; break;
        case LinkedCode::Kind::many: out["construction"] = "many"; break;
        case LinkedCode::Kind::cyclic: out["construction"] = "cyclic"; break;
    }
    out["q"] = code.q();
    out["k"] = code.dim();
    out["n"] = code.length();
    out["N"] = code.cardinality().to_string();
    out["distance"] = code.distance();
    // constituents in the same descriptor forms constituent_from_json reads
    json cons = json::array();
    for (const auto& c : code.constituents()) {
        json jc;
        if (c.orbit_backed()) {
            jc = spec_to_obj(c.orbit_field().spec());
            jc["beta_log"] = c.beta_log();
            if (!c.exponents().empty()) {
                jc["base"] = matrix_to_obj(c.base_matrix());
                jc["exponents"] = c.exponents();
            } else {
                Subspace gen = Subspace::from_matrix(c.orbit_field(), c.base_matrix());
                jc["generator"] = subspace_to_obj(gen, false);
            }
        } else {
            jc["q"] = c.q();
            json ms = json::array();
            for (std::uint64_t l = 0; l < c.size(); ++l) ms.push_back(matrix_to_obj(c.member(l)));
            jc["matrices"] = std::move(ms);
        }
        jc["N"] = c.size();
        jc["distance"] = c.distance();
        cons.push_back(std::move(jc));
    }
    out["constituents"] = std::move(cons);
    json algebra;
    algebra["tuples"] = "l_i in [0, N_i], index 0 is the zero block, member l_i - 1 otherwise";
    if (code.kind() == LinkedCode::Kind::cyclic)
        algebra["mixed_powers"] = code.cyclic_power_range();
    out["index_algebra"] = std::move(algebra);
    return out.dump();
}

ConstituentCode constituent_from_json(std::string_view text) {
    json j = json::parse(text);
    if (j.contains("matrices")) {
        unsigned q = j.at("q").get<unsigned>();
        std::vector<Matrix> mats;
        for (auto& jm : j.at("matrices"))
            mats.push_back(Matrix::from_rows(q, jm.get<std::vector<std::vector<std::uint8_t>>>()));
        return ConstituentCode::from_matrices(std::move(mats), j.at("distance").get<unsigned>());
    }
    Field f = Field::make(j.at("q").get<unsigned>(), j.at("n").get<unsigned>(),
                          j.contains("modulus")
                              ? std::optional(j.at("modulus").get<std::vector<unsigned>>())
                              : std::nullopt);
    std::optional<unsigned> distance;
    if (j.contains("distance")) distance = j.at("distance").get<unsigned>();
    if (j.contains("exponents")) {
        Matrix base;
        if (j.contains("base")) {
            base = Matrix::from_rows(f.q(),
                                     j.at("base").get<std::vector<std::vector<std::uint8_t>>>());
        } else {
            base = subspace_from_obj(f, j.at("generator")).basis();
        }
        return ConstituentCode::from_orbit_subset(
            f, std::move(base), j.at("exponents").get<std::vector<std::uint64_t>>(), distance);
    }
    Subspace gen = subspace_from_obj(f, j.at("generator"));
    OrbitCode code(gen, j.value<std::uint64_t>("beta_log", 1));
    if (!distance) {
        ConstituentCode tmp = ConstituentCode::from_orbit(code, 0);
        distance = tmp.measure_distance();
    }
    return ConstituentCode::from_orbit(code, *distance);
}

} // namespace orbitcodes
