// occ: construct and analyze cyclic orbit subspace codes from the command line.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbitcodes/distance.hpp"
#include "orbitcodes/fixtures.hpp"
#include "orbitcodes/json_io.hpp"
#include "orbitcodes/linkage.hpp"
#include "orbitcodes/orbit.hpp"
#include "orbitcodes/parse.hpp"
#include "orbitcodes/search.hpp"

using nlohmann::json;
using namespace orbitcodes;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_bad_input = 2;
constexpr int exit_certified_negative = 3;
constexpr int exit_budget_exhausted = 4;
constexpr int exit_inconsistent = 5;

struct FieldArgs {
    std::string inline_spec;
    std::string file;
    std::uint64_t table_threshold = std::uint64_t(1) << 22;
    bool allow_non_primitive = false;
};

void add_field_options(CLI::App* cmd, FieldArgs& args) {
    auto* a = cmd->add_option("--field", args.inline_spec, "field as q,n[,c0,...,cn]");
    auto* b = cmd->add_option("--field-file", args.file, "field spec JSON file");
    cmd->add_option("--table-threshold", args.table_threshold,
                    "build log tables when q^n is at most this");
    cmd->add_flag("--allow-non-primitive", args.allow_non_primitive,
                  "accept irreducible non-primitive moduli");
    a->excludes(b);
}

Field make_field(const FieldArgs& args) {
    FieldSpec spec;
    if (!args.file.empty()) {
        std::ifstream in(args.file);
        if (!in) throw Error(errc::invalid_argument, "cannot open " + args.file);
        std::stringstream ss;
        ss << in.rdbuf();
        spec = field_spec_from_json(ss.str());
    } else if (!args.inline_spec.empty()) {
        spec = parse_field_inline(args.inline_spec);
    } else {
        throw Error(errc::invalid_argument, "--field or --field-file required");
    }
    FieldOptions opts;
    opts.table_threshold = args.table_threshold;
    opts.non_primitive_allowed = args.allow_non_primitive;
    std::optional<std::vector<unsigned>> mod;
    if (!spec.modulus.empty()) mod = spec.modulus;
    return Field::make(spec.q, spec.n, mod, opts);
}

std::string read_arg_or_file(const std::string& arg) {
    if (!arg.empty() && arg.front() == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw Error(errc::invalid_argument, "cannot open " + arg.substr(1));
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return arg;
}

void emit(const json& doc, bool as_json) {
    if (as_json) {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    // human-readable flat dump with the same numbers
    std::function<void(const std::string&, const json&)> walk = [&](const std::string& prefix,
                                                                    const json& v) {
        if (v.is_object()) {
            for (auto& [k, val] : v.items())
                walk(prefix.empty() ? k : prefix + "." + k, val);
        } else if (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array())) {
            for (std::size_t i = 0; i < v.size(); ++i)
                walk(prefix + "[" + std::to_string(i) + "]", v[i]);
        } else {
            std::cout << prefix << ": " << v.dump() << "\n";
        }
    };
    walk("", doc);
}

json field_report(const Field& f) {
    json out;
    out["q"] = f.q();
    out["n"] = f.n();
    out["modulus"] = f.spec().modulus;
    out["size"] = f.size();
    out["group_order"] = f.group_order();
    out["primitive"] = f.primitive();
    out["tables"] = f.has_tables();
    return out;
}

json distance_report_obj(const DistanceReport& rep) {
    json out;
    out["distance"] = rep.distance;
    out["method"] = rep.method == DistanceMethod::multiset ? "multiset" : "brute";
    out["max_intersection_dim"] = rep.max_intersection_dim;
    out["friend_degree"] = rep.friend_degree;
    if (rep.distribution) {
        json d = json::object();
        for (auto& [dist, count] : *rep.distribution) d[std::to_string(dist)] = count;
        out["distribution"] = std::move(d);
    }
    return out;
}

int classify_exit(const Error& e) {
    switch (e.code()) {
        case errc::internal_inconsistency: return exit_inconsistent;
        default: return exit_bad_input;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic orbit subspace codes: fields, orbits, distances, linkage, search"};
    app.require_subcommand(1);
    bool as_json = false;

    // ---- field ----
    FieldArgs field_args;
    auto* cmd_field = app.add_subcommand("field", "build and inspect a field");
    add_field_options(cmd_field, field_args);
    std::int64_t mipo_log = -1;
    unsigned mipo_base = 1;
    std::int64_t order_log = -1;
    unsigned subfield_r = 0;
    bool show_companion = false;
    cmd_field->add_option("--mipo-log", mipo_log, "minimal polynomial of alpha^LOG");
    cmd_field->add_option("--base-degree", mipo_base, "subfield degree r for --mipo-log");
    cmd_field->add_option("--order-log", order_log, "multiplicative order of alpha^LOG");
    cmd_field->add_option("--subfield-gen", subfield_r, "discrete log of the F_{q^r} generator");
    cmd_field->add_flag("--companion", show_companion, "include the companion matrix");

    // ---- analyze ----
    FieldArgs an_field;
    std::string an_gen;
    std::uint64_t an_beta = 1;
    auto* cmd_an = app.add_subcommand("analyze", "orbit code report for a generator");
    add_field_options(cmd_an, an_field);
    cmd_an->add_option("--gen", an_gen, "generator (rows:/logs:/sum form)")->required();
    cmd_an->add_option("--beta-log", an_beta, "orbit under beta = alpha^LOG (default 1)");

    // ---- distance ----
    FieldArgs di_field;
    std::string di_gen, di_method = "auto", di_csv;
    std::uint64_t di_beta = 1;
    bool di_distribution = false;
    auto* cmd_di = app.add_subcommand("distance", "orbit code distance");
    add_field_options(cmd_di, di_field);
    cmd_di->add_option("--gen", di_gen, "generator (rows:/logs:/sum form)")->required();
    cmd_di->add_option("--beta-log", di_beta, "orbit under beta = alpha^LOG (default 1)");
    cmd_di->add_option("--method", di_method, "auto|brute|multiset")
        ->check(CLI::IsMember({"auto", "brute", "multiset"}));
    cmd_di->add_flag("--distribution", di_distribution, "include the distance distribution");
    cmd_di->add_option("--csv", di_csv, "write the distribution as CSV to this file");

    // ---- orbit ----
    FieldArgs or_field;
    std::string or_gen, or_export;
    std::uint64_t or_beta = 1;
    std::uint64_t or_list = 0;
    bool or_partial = false;
    auto* cmd_or = app.add_subcommand("orbit", "enumerate an orbit code");
    add_field_options(cmd_or, or_field);
    cmd_or->add_option("--gen", or_gen, "generator (rows:/logs:/sum form)")->required();
    cmd_or->add_option("--beta-log", or_beta, "orbit under beta = alpha^LOG (default 1)");
    cmd_or->add_option("--list", or_list, "list the first LIST members");
    cmd_or->add_flag("--check-partial-spread", or_partial, "check pairwise intersections");
    cmd_or->add_option("--export", or_export, "write the code descriptor JSON here");

    // ---- link ----
    std::vector<std::string> lk_constituents;
    std::string lk_export;
    bool lk_two = false, lk_many = false, lk_cyclic = false;
    bool lk_verify = false;
    unsigned lk_jobs = 1;
    auto* cmd_lk = app.add_subcommand("link", "linkage constructions");
    auto* flag_two = cmd_lk->add_flag("--two", lk_two, "two-constituent linkage");
    auto* flag_many = cmd_lk->add_flag("--many", lk_many, "t-fold linkage");
    auto* flag_cyclic =
        cmd_lk->add_flag("--cyclic", lk_cyclic, "cyclic-enhanced linkage (all powers)");
    flag_two->excludes(flag_many)->excludes(flag_cyclic);
    flag_many->excludes(flag_cyclic);
    cmd_lk->add_option("--constituent", lk_constituents,
                       "constituent descriptor JSON (or @file), repeatable")
        ->required();
    cmd_lk->add_flag("--verify", lk_verify, "exhaustive pairwise distance check");
    cmd_lk->add_option("--jobs", lk_jobs, "threads for --verify");
    cmd_lk->add_option("--export", lk_export, "write the linked code JSON here");

    // ---- search ----
    FieldArgs se_field;
    SearchSpec se_spec;
    std::string se_mode = "exhaustive";
    unsigned se_q = 0, se_n = 0;
    std::vector<unsigned> se_modulus;
    bool se_no_prune = false;
    auto* cmd_se = app.add_subcommand("search", "search generators with a prescribed best friend");
    add_field_options(cmd_se, se_field);
    cmd_se->add_option("--q", se_q, "base field size (alternative to --field)");
    cmd_se->add_option("--n", se_n, "extension degree (with --q)");
    cmd_se->add_option("--modulus", se_modulus, "modulus coefficients, low degree first");
    cmd_se->add_option("--mode", se_mode, "exhaustive|random")
        ->check(CLI::IsMember({"exhaustive", "random"}));
    cmd_se->add_option("--k", se_spec.k, "subspace dimension")->required();
    cmd_se->add_option("--r", se_spec.friend_degree, "required best friend degree (default 1)");
    cmd_se->add_option("--target-d", se_spec.target_distance, "target distance");
    cmd_se->add_option("--trials", se_spec.trials, "random mode trial count");
    auto* seed_opt = cmd_se->add_option("--seed", se_spec.seed, "random mode seed (required)");
    cmd_se->add_option("--jobs", se_spec.jobs, "worker threads (random mode)");
    cmd_se->add_flag("--no-prune", se_no_prune, "disable certified-bound pruning");
    cmd_se->add_option("--space-cap", se_spec.space_cap, "exhaustive candidate cap");

    // ---- verify-paper ----
    std::string vp_filter;
    auto* cmd_vp =
        app.add_subcommand("verify-paper", "re-check the published reference values");
    cmd_vp->add_option("--filter", vp_filter, "run only fixtures whose name contains this");

    for (CLI::App* sub : app.get_subcommands({}))
        sub->add_flag("--json", as_json, "emit a single JSON document");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e); // prints help or the message
        return code == 0 ? exit_ok : exit_bad_input;
    }

    try {
        if (cmd_field->parsed()) {
            Field f = make_field(field_args);
            json out = field_report(f);
            out["command"] = "field";
            if (order_log >= 0)
                out["order"] = f.element_order(f.alpha_pow(static_cast<std::uint64_t>(order_log)));
            if (mipo_log >= 0) {
                MinimalPolynomial mp =
                    f.minimal_polynomial(f.alpha_pow(static_cast<std::uint64_t>(mipo_log)),
                                         mipo_base);
                json jm;
                jm["base_degree"] = mp.base_degree;
                jm["degree"] = mp.degree();
                if (mipo_base == 1) jm["coeffs"] = f.minimal_polynomial_base_coeffs(mp);
                out["mipo"] = std::move(jm);
            }
            if (subfield_r) out["subfield_gen_log"] = f.discrete_log(f.subfield_generator(subfield_r));
            if (show_companion) {
                json rows = json::array();
                Matrix m = f.companion_matrix();
                for (std::size_t i = 0; i < m.rows(); ++i) {
                    json row = json::array();
                    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(i, c));
                    rows.push_back(std::move(row));
                }
                out["companion"] = std::move(rows);
            }
            emit(out, as_json);
            return exit_ok;
        }

        if (cmd_an->parsed()) {
            Field f = make_field(an_field);
            Subspace u = parse_generator(f, an_gen);
            OrbitCode code(u, an_beta);
            json out;
            out["command"] = "analyze";
            out["field"] = field_report(f);
            out["k"] = code.generator().dim();
            out["N"] = code.size();
            unsigned r = best_friend_degree(code.generator());
            out["best_friend_degree"] = r;
            if (code.generator().contains_one())
                out["friends"] = friend_degrees(code.generator());
            auto stab = stabilizer_order(code.generator(), an_beta);
            out["stabilizer_order"] = stab.stabilizer_size;
            out["stab_plus_degree"] = stab_plus_beta_degree(code.generator(), an_beta);
            if (code.generator().contains_one()) {
                DistanceBounds b = distance_bounds(code.generator());
                out["bounds"] = {{"lower", b.lower}, {"upper", b.upper}};
                if (b.non_spread_upper) out["bounds"]["non_spread_upper"] = *b.non_spread_upper;
                out["spread"] = b.spread;
            }
            DistanceReport rep = code.beta_primitive() && code.generator().contains_one()
                                     ? distance_multiset(code.generator())
                                     : distance_bruteforce(code.generator(), an_beta);
            out["distance"] = distance_report_obj(rep);
            emit(out, as_json);
            return exit_ok;
        }

        if (cmd_di->parsed()) {
            Field f = make_field(di_field);
            Subspace u = parse_generator(f, di_gen);
            std::uint64_t ord = f.group_order();
            bool beta_primitive = std::gcd(di_beta % ord, ord) == 1;
            DistanceReport rep;
            if (di_method == "multiset" ||
                (di_method == "auto" && beta_primitive && f.primitive() && u.contains_one())) {
                if (!beta_primitive)
                    throw Error(errc::unsupported_parameters,
                                "the multiset method needs a primitive beta; use --method brute");
                // a primitive beta generates the same orbit as alpha
                rep = distance_multiset(u, di_distribution);
            } else {
                rep = distance_bruteforce(u, di_beta, di_distribution);
            }
            json out = distance_report_obj(rep);
            out["command"] = "distance";
            out["k"] = u.dim();
            out["N"] = orbit_cardinality(u, di_beta);
            if (!di_csv.empty()) {
                if (!rep.distribution)
                    throw Error(errc::invalid_argument, "--csv needs --distribution");
                std::ofstream csv(di_csv);
                csv << "distance,count\n";
                for (auto& [dv, cv] : *rep.distribution) csv << dv << "," << cv << "\n";
                out["csv"] = di_csv;
            }
            emit(out, as_json);
            return exit_ok;
        }

        if (cmd_or->parsed()) {
            Field f = make_field(or_field);
            Subspace u = parse_generator(f, or_gen);
            OrbitCode code(u, or_beta);
            json out;
            out["command"] = "orbit";
            out["N"] = code.size();
            out["k"] = code.generator().dim();
            out["beta_log"] = code.beta_log();
            if (or_list) {
                json members = json::array();
                std::uint64_t limit = std::min<std::uint64_t>(or_list, code.size());
                for (std::uint64_t i = 0; i < limit; ++i)
                    members.push_back(json::parse(subspace_to_json(code.member(i))));
                out["members"] = std::move(members);
            }
            if (or_partial) {
                auto members = code.members();
                out["partial_spread"] = is_partial_spread(members);
                out["spread"] = is_spread(members);
            }
            std::string desc = orbit_descriptor_to_json(code);
            if (!or_export.empty()) {
                std::ofstream outf(or_export);
                outf << desc << "\n";
                out["export"] = or_export;
            }
            out["descriptor"] = json::parse(desc);
            emit(out, as_json);
            return exit_ok;
        }

        if (cmd_lk->parsed()) {
            std::string lk_mode = lk_cyclic ? "cyclic" : (lk_many ? "many" : "two");
            std::vector<std::string> texts;
            for (const auto& c : lk_constituents) texts.push_back(read_arg_or_file(c));
            LinkedCode linked = [&] {
                if (lk_mode == "cyclic") {
                    if (texts.size() != 2)
                        throw Error(errc::invalid_argument, "cyclic mode needs 2 constituents");
                    ConstituentCode c1 = constituent_from_json(texts[0]);
                    json j2 = json::parse(texts[1]);
                    Field f2 = Field::make(
                        j2.at("q").get<unsigned>(), j2.at("n").get<unsigned>(),
                        j2.contains("modulus")
                            ? std::optional(j2.at("modulus").get<std::vector<unsigned>>())
                            : std::nullopt);
                    Matrix base = Matrix::from_rows(
                        f2.q(), j2.at("base").get<std::vector<std::vector<std::uint8_t>>>());
                    auto exps = j2.at("exponents").get<std::vector<std::uint64_t>>();
                    return link_cyclic(c1, f2, base, exps);
                }
                std::vector<ConstituentCode> cs;
                for (const auto& t : texts) cs.push_back(constituent_from_json(t));
                if (lk_mode == "two") {
                    if (cs.size() != 2)
                        throw Error(errc::invalid_argument, "two mode needs 2 constituents");
                    return link_two(cs[0], cs[1]);
                }
                return link_many(std::move(cs));
            }();
            json out = json::parse(linked_code_to_json(linked));
            out["command"] = "link";
            if (lk_verify) out["verified_distance"] = verified_min_distance(linked, lk_jobs);
            if (!lk_export.empty()) {
                std::ofstream outf(lk_export);
                outf << linked_code_to_json(linked) << "\n";
                out["export"] = lk_export;
            }
            emit(out, as_json);
            return exit_ok;
        }

        if (cmd_se->parsed()) {
            Field f = se_q ? Field::make(se_q, se_n,
                                         se_modulus.empty()
                                             ? std::nullopt
                                             : std::optional(se_modulus))
                           : make_field(se_field);
            se_spec.prune = !se_no_prune;
            se_spec.mode = se_mode == "random" ? SearchMode::random : SearchMode::exhaustive;
            if (se_spec.mode == SearchMode::random && seed_opt->count() == 0)
                throw Error(errc::invalid_argument, "random mode requires --seed");
            SearchResult res = se_spec.mode == SearchMode::random ? random_search(f, se_spec)
                                                                  : exhaustive_search(f, se_spec);
            json out;
            out["command"] = "search";
            out["mode"] = se_mode;
            out["candidates_enumerated"] = res.candidates_enumerated;
            out["candidates_in_class"] = res.candidates_in_class;
            out["pruned"] = res.pruned;
            out["exhaustive_complete"] = res.exhaustive_complete;
            out["target_met"] = res.target_met;
            json hist = json::object();
            for (auto& [d, c] : res.histogram) hist[std::to_string(d)] = c;
            out["histogram"] = std::move(hist);
            if (res.best) {
                out["best"] = json::parse(subspace_to_json(res.best->first, f.primitive()));
                out["best_distance"] = res.best->second;
            }
            emit(out, as_json);
            if (!se_spec.target_distance || res.target_met) return exit_ok;
            return res.exhaustive_complete ? exit_certified_negative : exit_budget_exhausted;
        }

        if (cmd_vp->parsed()) {
            auto results = fixtures::run_catalog(vp_filter);
            bool all_pass = !results.empty();
            json out;
            out["command"] = "verify-paper";
            json items = json::array();
            for (const auto& r : results) {
                all_pass = all_pass && r.passed;
                json item;
                item["name"] = r.name;
                item["passed"] = r.passed;
                item["seconds"] = r.seconds;
                if (!r.error.empty()) item["error"] = r.error;
                json checks = json::array();
                for (const auto& c : r.checks) {
                    checks.push_back({{"label", c.label},
                                      {"expected", c.expected},
                                      {"computed", c.computed},
                                      {"passed", c.passed}});
                }
                item["checks"] = std::move(checks);
                items.push_back(std::move(item));
                if (!as_json) {
                    std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name;
                    if (!r.error.empty()) std::cout << "  (" << r.error << ")";
                    if (!r.passed && r.error.empty()) {
                        for (const auto& c : r.checks)
                            if (!c.passed)
                                std::cout << "  [" << c.label << ": expected " << c.expected
                                          << ", got " << c.computed << "]";
                    }
                    std::cout << "\n";
                }
            }
            out["fixtures"] = std::move(items);
            out["all_passed"] = all_pass;
            if (as_json) emit(out, true);
            if (results.empty()) {
                std::cerr << "no fixture matches '" << vp_filter << "'\n";
                return exit_bad_input;
            }
            return all_pass ? exit_ok : exit_inconsistent;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return classify_exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bad_input;
    }
    return exit_ok;
}
