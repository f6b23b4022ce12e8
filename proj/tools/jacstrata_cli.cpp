// jacstrata command-line interface: deterministic JSON/DOT reports over
// numerical semigroups, their monomial module fixed points, strata, flat
// limits, and finite-field oracles.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "jacstrata/deform.hpp"
#include "jacstrata/oracle.hpp"
#include "jacstrata/strata.hpp"

using jacstrata::Error;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kToolVersion = "0.1.0";

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::string cur;
    for (char c : csv + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else if (!std::isspace((unsigned char)c)) {
            cur += c;
        }
    }
    return out;
}

json header(const std::string& subcommand, const std::vector<int>& gens) {
    json h;
    h["tool_version"] = kToolVersion;
    h["subcommand"] = subcommand;
    h["semigroup"] = json{{"generators", gens}};
    return h;
}

json module_json(const jacstrata::GammaSemimodule& m) {
    json j;
    j["below_v0"] = m.orders_below();
    if (m.shift() != 0) j["shift"] = m.shift();
    return j;
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(output_path, std::ios::binary);
    if (!f) throw Error(jacstrata::ErrorCode::OutOfRange, "cannot open " + output_path);
    f << text;
}

std::string render(const json& doc, const std::string& format) {
    if (format == "text") {
        std::string out;
        for (auto it = doc.begin(); it != doc.end(); ++it)
            out += it.key() + ": " + it.value().dump() + "\n";
        return out;
    }
    return doc.dump(2) + "\n";
}

struct CommonArgs {
    std::string generators;
    std::string format = "json";
    std::string output;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--generators", args.generators, "comma-separated semigroup generators")
        ->required();
    cmd->add_option("--format", args.format, "output format: json | text | dot")
        ->check(CLI::IsMember({"json", "text", "dot"}));
    cmd->add_option("--output", args.output, "write to a file instead of stdout");
}

json identity_json(const jacstrata::IdentityReport& r) {
    json j;
    j["gap_count_is_delta"] = r.gap_count_is_delta;
    j["below_count_is_gamma"] = r.below_count_is_gamma;
    j["forward_symmetry"] = r.forward_symmetry;
    j["conductor_bounds"] = r.conductor_bounds;
    j["symmetric_gap_pairs"] = r.symmetric_gap_pairs;
    j["pair_count_matches"] = r.pair_count_matches;
    j["all_hold"] = r.all_hold();
    return j;
}

const char* psplit_name(jacstrata::PSplit p) {
    switch (p) {
        case jacstrata::PSplit::P1: return "P1";
        case jacstrata::PSplit::P2: return "P2";
        default: return "not_applicable";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"strata and flat limits of compactified Jacobians of monomial curves"};
    app.require_subcommand(1);

    CommonArgs analyze_args, semi_args, strat_args, limit_args, closure_args, dag_args,
        oracle_args, report_args;

    auto* analyze = app.add_subcommand("analyze", "semigroup invariants and remark checks");
    add_common(analyze, analyze_args);

    auto* semi = app.add_subcommand("semimodules", "enumerate monomial modules");
    add_common(semi, semi_args);
    int semi_codim = -1;
    bool semi_normalized = false;
    semi->add_option("--codim", semi_codim, "restrict to a fixed codimension");
    semi->add_flag("--normalized", semi_normalized, "restrict to modules containing 0");

    auto* strat = app.add_subcommand("stratify", "stratify normalized fixed points by r");
    add_common(strat, strat_args);

    auto* limit = app.add_subcommand("limit", "flat limit of a one-parameter family");
    add_common(limit, limit_args);
    std::string family_expr;
    limit->add_option("--family", family_expr, "family expression, e.g. \"t^2+b\"")
        ->required();

    auto* closure = app.add_subcommand("closure", "search a boundary certificate");
    add_common(closure, closure_args);
    std::string module_csv, coeff_csv = "1,-1";
    int max_bdeg = 1, max_support = 2;
    closure->add_option("--module", module_csv, "target module generators below v0")
        ->required();
    closure->add_option("--max-bdeg", max_bdeg, "largest b-exponent per term");
    closure->add_option("--max-support", max_support, "largest number of t-terms");
    closure->add_option("--coeffs", coeff_csv, "coefficient set, e.g. 1,-1");

    auto* dag = app.add_subcommand("dag", "containment graphs for M = C curves");
    add_common(dag, dag_args);

    auto* oracle = app.add_subcommand("oracle", "invariant subspaces over a prime field");
    add_common(oracle, oracle_args);
    int field_q = 2, oracle_codim = -1;
    oracle->add_option("--field", field_q, "prime field size (2 or 3)");
    oracle->add_option("--codim", oracle_codim, "codimension d of E(C, d)");

    auto* report = app.add_subcommand("report-example2",
                                      "certificate search over every Filt fixed point");
    add_common(report, report_args);
    int report_bdeg = -1, report_support = -1;
    report->add_option("--max-bdeg", report_bdeg, "override ladder: single-rung b-degree");
    report->add_option("--max-support", report_support, "override ladder: single-rung support");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 64;
    }

    if (const char* threads = std::getenv("JACSTRATA_THREADS")) {
#ifdef _OPENMP
        const int n = std::atoi(threads);
        if (n >= 1) omp_set_num_threads(n);
#endif
    }

    try {
        if (analyze->parsed()) {
            auto gens = parse_int_list(analyze_args.generators);
            auto s = jacstrata::make_semigroup(gens);
            json doc = header("analyze", gens);
            doc["v0"] = s->conductor();
            doc["delta"] = s->delta();
            doc["gamma"] = s->gamma();
            doc["gaps"] = s->gaps();
            doc["elements_below_v0"] = s->elements_below();
            doc["minimal_generators"] = s->generators();
            doc["symmetric"] = jacstrata::is_symmetric(*s);
            auto tags = jacstrata::classify_type(*s);
            doc["type"] = tags.primary();
            doc["locally_planar"] = tags.locally_planar;
            doc["min_components"] = 2 * s->delta() - s->conductor() + 1;
            doc["remarks"] = identity_json(jacstrata::check_identities(*s));
            auto c06 = jacstrata::arithmetic_progression_conditions(*s);
            doc["arithmetic_progression_conditions"] = json::array({c06[0], c06[1], c06[2]});
            auto chain = jacstrata::normalization_chain(*s);
            doc["normalization_deltas"] = chain.deltas;
            emit(render(doc, analyze_args.format), analyze_args.output);
        } else if (semi->parsed()) {
            auto gens = parse_int_list(semi_args.generators);
            auto s = jacstrata::make_semigroup(gens);
            jacstrata::EnumOptions opt;
            if (semi_codim >= 0) opt.codim = semi_codim;
            opt.normalized_only = semi_normalized;
            auto mods = jacstrata::enumerate_semimodules(s, opt);
            json doc = header("semimodules", gens);
            doc["count"] = mods.size();
            json arr = json::array();
            for (const auto& m : mods) {
                json j = module_json(m);
                auto rk = jacstrata::ranks(m);
                j["codim"] = rk.codim;
                j["r"] = rk.r;
                j["normalized"] = m.is_normalized();
                arr.push_back(std::move(j));
            }
            doc["modules"] = std::move(arr);
            emit(render(doc, semi_args.format), semi_args.output);
        } else if (strat->parsed()) {
            auto gens = parse_int_list(strat_args.generators);
            auto s = jacstrata::make_semigroup(gens);
            auto rep = jacstrata::stratify(s);
            json doc = header("stratify", gens);
            doc["min_components"] = rep.min_components;
            doc["r_range"] = json::array({rep.r_lo, rep.r_hi});
            doc["witnesses_complete"] = rep.witnesses_complete;
            doc["extra_strata"] = rep.extra_strata;
            json arr = json::array();
            for (const auto& st : rep.strata) {
                json j;
                j["r"] = st.r;
                j["size"] = st.modules.size();
                j["descending_only"] = st.descending_only;
                if (st.witness) {
                    j["witness"] = module_json(st.modules[*st.witness].module);
                    j["witness_end_is_gamma"] = st.modules[*st.witness].end_is_gamma;
                }
                json mods = json::array();
                for (const auto& a : st.modules) {
                    json mj = module_json(a.module);
                    mj["descends"] = a.descends;
                    mj["end_is_gamma"] = a.end_is_gamma;
                    if (a.in_filt) mj["in_filt"] = *a.in_filt;
                    if (a.p_split) mj["p_split"] = psplit_name(*a.p_split);
                    mods.push_back(std::move(mj));
                }
                j["modules"] = std::move(mods);
                arr.push_back(std::move(j));
            }
            doc["strata"] = std::move(arr);
            emit(render(doc, strat_args.format), strat_args.output);
        } else if (limit->parsed()) {
            auto gens = parse_int_list(limit_args.generators);
            auto s = jacstrata::make_semigroup(gens);
            auto fam = jacstrata::parse_family(family_expr, *s);
            auto lim = jacstrata::flat_limit(s, fam);
            json doc = header("limit", gens);
            doc["family"] = fam.expr();
            if (fam.truncated_terms) doc["truncated_terms"] = true;
            doc["monomial"] = lim.monomial;
            doc["codim"] = lim.codim;
            doc["orders"] = lim.orders;
            if (lim.monomial) {
                doc["limit_below_v0"] = lim.module->orders_below();
            } else {
                json basis = json::array();
                for (const auto& row : lim.basis) {
                    json r = json::array();
                    for (const auto& x : row) r.push_back(x.str());
                    basis.push_back(std::move(r));
                }
                doc["basis"] = std::move(basis);
            }
            emit(render(doc, limit_args.format), limit_args.output);
        } else if (closure->parsed()) {
            auto gens = parse_int_list(closure_args.generators);
            auto s = jacstrata::make_semigroup(gens);
            auto elements = parse_int_list(module_csv);
            auto target = jacstrata::semimodule_create(s, elements, jacstrata::CreateMode::Generate);
            jacstrata::SearchBudget budget;
            budget.max_b_degree = max_bdeg;
            budget.max_support = max_support;
            budget.coefficients.clear();
            for (int c : parse_int_list(coeff_csv)) budget.coefficients.push_back(c);
            auto fam = jacstrata::certificate_search(s, target, budget);
            json doc = header("closure", gens);
            doc["target_below_v0"] = target.orders_below();
            doc["budget"] = budget.describe();
            doc["found"] = fam.has_value();
            if (fam) {
                doc["family"] = fam->expr();
                auto lim = jacstrata::flat_limit(s, *fam);
                doc["verified"] = lim.monomial && *lim.module == target;
            } else {
                doc["note"] = "no certificate within budget";
            }
            emit(render(doc, closure_args.format), closure_args.output);
        } else if (dag->parsed()) {
            auto gens = parse_int_list(dag_args.generators);
            auto s = jacstrata::make_semigroup(gens);
            auto g = jacstrata::strata_dag(*s);
            if (dag_args.format == "dot") {
                emit(jacstrata::to_dot(g), dag_args.output);
            } else {
                json doc = header("dag", gens);
                json nodes = json::array();
                for (const auto& n : g.nodes)
                    nodes.push_back(json{{"level", n.level}, {"r", n.r}});
                json edges = json::array();
                for (const auto& e : g.edges) {
                    json ej;
                    ej["from"] = json{{"level", g.nodes[e.from].level}, {"r", g.nodes[e.from].r}};
                    ej["to"] = json{{"level", g.nodes[e.to].level}, {"r", g.nodes[e.to].r}};
                    ej["kind"] =
                        e.kind == jacstrata::StrataDag::EdgeKind::Open ? "open" : "closure";
                    edges.push_back(std::move(ej));
                }
                doc["nodes"] = std::move(nodes);
                doc["edges"] = std::move(edges);
                emit(render(doc, dag_args.format), dag_args.output);
            }
        } else if (oracle->parsed()) {
            auto gens = parse_int_list(oracle_args.generators);
            auto s = jacstrata::make_semigroup(gens);
            const int d = oracle_codim >= 0 ? oracle_codim : s->delta();
            auto subs = jacstrata::enumerate_invariant_subspaces(*s, field_q, d);
            json doc = header("oracle", gens);
            doc["field"] = field_q;
            doc["codim"] = d;
            doc["count"] = subs.size();
            long long monomial = 0;
            json coords = json::array();
            for (const auto& x : subs)
                if (x.monomial) {
                    ++monomial;
                    coords.push_back(x.pivots);
                }
            doc["monomial_count"] = monomial;
            doc["monomial_below_v0"] = std::move(coords);
            if (d == s->delta()) {
                auto rep = jacstrata::oracle_report(s, field_q);
                doc["orders_strictly_increasing"] = rep.orders_strictly_increasing;
                doc["filt_count"] = rep.filt_count;
                doc["monomial_filt_count"] = rep.monomial_filt_count;
                doc["monomial_matches_enumeration"] = rep.monomial_matches_enumeration;
                doc["filt_flags_agree"] = rep.filt_flags_agree;
                json strata = json::object();
                for (const auto& [r, n] : rep.per_stratum)
                    strata[std::to_string(r)] = n;
                doc["per_stratum"] = std::move(strata);
            }
            emit(render(doc, oracle_args.format), oracle_args.output);
        } else if (report->parsed()) {
            auto gens = parse_int_list(report_args.generators);
            auto s = jacstrata::make_semigroup(gens);
            std::vector<jacstrata::SearchBudget> ladder = jacstrata::default_ladder();
            if (report_bdeg >= 0 || report_support >= 0) {
                jacstrata::SearchBudget b;
                b.max_b_degree = report_bdeg >= 0 ? report_bdeg : 1;
                b.max_support = report_support >= 0 ? report_support : 2;
                b.coefficients = {1, -1};
                ladder = {b};
            }
            auto rep = jacstrata::filt_certificate_report(s, ladder);
            json doc = header("report-example2", gens);
            json rungs = json::array();
            for (const auto& b : ladder) rungs.push_back(b.describe());
            doc["budget_ladder"] = std::move(rungs);
            doc["all_found"] = rep.all_found;
            json entries = json::array();
            for (const auto& e : rep.entries) {
                json j = module_json(e.module);
                j["found"] = e.found;
                if (e.found) {
                    j["family"] = e.family->expr();
                    j["rung"] = e.rung;
                } else {
                    j["note"] = "no certificate within budget";
                }
                entries.push_back(std::move(j));
            }
            doc["points"] = std::move(entries);
            emit(render(doc, report_args.format), report_args.output);
        }
    } catch (const Error& e) {
        json err;
        err["error"] = e.code_name();
        err["message"] = e.what();
        std::cerr << err.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        json err;
        err["error"] = "Usage";
        err["message"] = e.what();
        std::cerr << err.dump() << "\n";
        return 64;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
