#include "poisson/cli.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "poisson/algebra.hpp"
#include "poisson/catalog.hpp"
#include "poisson/cohomology.hpp"
#include "poisson/deformations.hpp"
#include "poisson/errors.hpp"
#include "poisson/identities.hpp"
#include "poisson/structure.hpp"
#include "poisson/symalg.hpp"

namespace poisson {

namespace {

struct Opts {
    std::string input = "-";
    std::string identities;
    std::string idempotent;
    int degree = -1;
    bool basis = false;
    std::string operators;
    std::string terms;
    long order = -1;
    unsigned truncation = 1;
    std::vector<std::string> params;
    std::string emit;
    std::string out;
    std::uint64_t seed = 1;
    bool pretty = false;
    std::string name;
};

std::size_t line_of_offset(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

Json read_json_input(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream f(path);
        if (!f) throw input_error("cannot read '" + path + "'");
        std::ostringstream buf;
        buf << f.rdbuf();
        text = buf.str();
    }
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw input_error(path + ":" + std::to_string(line_of_offset(text, e.byte)) + ": " +
                          e.what());
    }
    // A piped-in result envelope stands for its payload.
    if (j.is_object() && j.contains("status") && j.contains("payload")) {
        if (j["status"] != "ok")
            throw input_error("upstream command failed: " +
                              j.value("message", std::string("(no message)")));
        return j["payload"];
    }
    return j;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw input_error("cannot write '" + path + "'");
    f << text << "\n";
}

Vec parse_coords(const std::string& csv) {
    Vec v;
    std::istringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t a = item.find_first_not_of(" \t");
        std::size_t b = item.find_last_not_of(" \t");
        if (a == std::string::npos) throw input_error("empty coordinate in '" + csv + "'");
        v.push_back(Rational::parse(item.substr(a, b - a + 1)));
    }
    if (v.empty()) throw input_error("no coordinates in '" + csv + "'");
    return v;
}

std::map<std::string, Rational> parse_params(const std::vector<std::string>& kvs) {
    std::map<std::string, Rational> out;
    for (const auto& kv : kvs) {
        std::size_t eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw input_error("--param expects name=value, got '" + kv + "'");
        out[kv.substr(0, eq)] = Rational::parse(kv.substr(eq + 1));
    }
    return out;
}

Json check_result_json(const CheckResult& r) {
    Json j;
    j["identity"] = r.identity;
    j["passed"] = r.passed;
    if (!r.passed && r.witness_arity > 0) {
        Json w = Json::array();
        for (std::size_t i = 0; i < r.witness_arity; ++i) w.push_back(r.witness[i]);
        j["witness"] = w;
        j["residual"] = vec_to_json(r.residual);
    }
    return j;
}

Json cmd_check(const Opts& o, std::vector<std::string>& diags) {
    AlgebraStructure a = algebra_from_json(read_json_input(o.input));
    std::vector<std::string> wanted;
    std::string list =
        o.identities.empty() ? "admissible,flexible,cyclic,sigma3,power_associative" : o.identities;
    std::istringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ',')) wanted.push_back(tok);

    Json checks = Json::array();
    bool all = true;
    for (const auto& w : wanted) {
        CheckResult r;
        if (w == "admissible")
            r = check_admissible(a);
        else if (w == "flexible")
            r = check_flexible(a);
        else if (w == "cyclic")
            r = check_cyclic(a);
        else if (w == "sigma3")
            r = check_sigma3(a);
        else if (w == "power_associative" || w == "power")
            r = check_power_associative(a, 8, 5, o.seed);
        else
            throw input_error("unknown identity '" + w +
                              "' (admissible, flexible, cyclic, sigma3, power_associative)");
        all = all && r.passed;
        checks.push_back(check_result_json(r));
    }
    if (!all) diags.push_back("one or more identities fail; see the witness entries");
    Json payload;
    payload["dim"] = a.dim();
    payload["identities"] = checks;
    payload["all_passed"] = all;
    return payload;
}

Json cmd_split(const Opts& o) {
    AlgebraStructure a = algebra_from_json(read_json_input(o.input));
    return pair_to_json(split(a));
}

Json cmd_pierce(const Opts& o) {
    AlgebraStructure a = algebra_from_json(read_json_input(o.input));
    Vec e = parse_coords(o.idempotent);
    PierceDecomposition d = pierce(a, e);
    Json payload;
    payload["idempotent"] = vec_to_json(d.idempotent);
    payload["p00"] = subspace_to_json(d.p00);
    payload["p11"] = subspace_to_json(d.p11);
    return payload;
}

Json cmd_nilradical(const Opts& o) {
    AlgebraStructure a = algebra_from_json(read_json_input(o.input));
    RadicalReport r = radicals(a, 25, o.seed);
    Json payload;
    payload["jacobson_of_product"] = subspace_to_json(r.jacobson_of_product);
    payload["nilradical"] = subspace_to_json(r.nilradical);
    payload["is_nilalgebra"] = r.is_nilalgebra;
    payload["certified"] = r.nilalgebra_certified;
    payload["principal_idempotent"] =
        r.principal_idempotent ? vec_to_json(*r.principal_idempotent) : Json(nullptr);
    return payload;
}

Json cmd_cohomology(const Opts& o, std::vector<std::string>& diags) {
    AlgebraStructure a = algebra_from_json(read_json_input(o.input));
    CohomologyReport rep = cohomology_report(a);
    Json payload;
    payload["dim"] = a.dim();
    if (o.degree == -1 || o.degree == 0) {
        Json h0;
        h0["dim"] = rep.h0_basis.dim();
        if (o.basis) h0["basis"] = subspace_to_json(rep.h0_basis)["basis"];
        payload["h0"] = h0;
    }
    if (o.degree == -1 || o.degree == 1) {
        Json h1;
        h1["dim_Z1"] = rep.h1_dims[0];
        h1["dim_B1"] = rep.h1_dims[1];
        h1["dim_H1"] = rep.h1_dims[2];
        payload["h1"] = h1;
        if (o.basis && o.degree == 1)
            diags.push_back("degree 1 reports dimensions only; no basis is stored");
    }
    if (o.degree == -1 || o.degree == 2) {
        Json h2;
        h2["dim_Z2"] = rep.dim_Z2;
        h2["dim_B2"] = rep.dim_B2;
        h2["dim_H2"] = rep.dim_H2;
        if (o.basis) {
            Json z = Json::array(), b = Json::array();
            for (const auto& c : rep.z2_basis) z.push_back(cochain2_to_json(c));
            for (const auto& c : rep.b2_basis) b.push_back(cochain2_to_json(c));
            h2["Z2_basis"] = z;
            h2["B2_basis"] = b;
        }
        payload["h2"] = h2;
    }
    if (!o.operators.empty()) {
        Cochain2 phi = cochain2_from_json(read_json_input(o.operators));
        ClassicalOperators ops = classical_operators(split(a), phi);
        Json oj;
        oj["chevalley_skew"] = cochain3_to_json(ops.chevalley_skew);
        oj["harrison_sym"] = cochain3_to_json(ops.harrison_sym);
        oj["chevalley_sym"] = cochain3_to_json(ops.chevalley_sym);
        oj["harrison_skew"] = cochain3_to_json(ops.harrison_skew);
        oj["correction_skew"] = cochain3_to_json(ops.correction_skew);
        oj["correction_sym"] = cochain3_to_json(ops.correction_sym);
        oj["lichnerowicz"] =
            ops.lichnerowicz_defined ? cochain3_to_json(ops.lichnerowicz) : Json(nullptr);
        Json coeffs = Json::array();
        for (const auto& c : delta2_decomposition_coefficients()) coeffs.push_back(c.str());
        oj["decomposition_coefficients"] = coeffs;
        payload["operators"] = oj;
        if (!ops.lichnerowicz_defined)
            diags.push_back("cochain is not a skew biderivation; lichnerowicz value omitted");
    }
    return payload;
}

Json cmd_products(const Opts& o) {
    AlgebraStructure bracket = algebra_from_json(read_json_input(o.input));
    CompatibleProducts cp = compatible_products(bracket);
    auto space_json = [&](const Subspace& s) {
        Json j;
        j["dim"] = s.dim();
        if (o.basis) {
            Json tables = Json::array();
            for (const auto& row : s.basis())
                tables.push_back(algebra_to_json(AlgebraStructure::unflatten(bracket.dim(), row)));
            j["basis"] = tables;
        }
        return j;
    };
    Json payload;
    payload["dim"] = cp.dim_bracket;
    payload["linear"] = space_json(cp.linear_space);
    payload["associative_core"] = space_json(cp.associative_core);
    return payload;
}

Json cmd_deform(const Opts& o, std::vector<std::string>& diags) {
    AlgebraStructure base = algebra_from_json(read_json_input(o.input));
    Json tj = read_json_input(o.terms);
    if (tj.is_object() && tj.contains("terms")) tj = tj["terms"];
    if (!tj.is_array()) throw input_error("--terms expects a JSON array of cochains");
    std::vector<Cochain2> terms;
    for (const auto& t : tj) terms.push_back(cochain2_from_json(t));
    if (o.order >= 0) {
        while (terms.size() < static_cast<std::size_t>(o.order))
            terms.push_back(Cochain2(base.dim()));
        terms.resize(static_cast<std::size_t>(o.order), Cochain2(base.dim()));
    }
    FormalDeformation d(base, terms);
    d.validate();
    ObstructionReport rep = obstructions(d);
    Json orders = Json::array();
    for (const auto& ord : rep.orders) {
        Json oj;
        oj["order"] = ord.order;
        oj["vanishes"] = ord.vanishes;
        orders.push_back(oj);
    }
    Json payload;
    payload["dim"] = base.dim();
    payload["orders"] = orders;
    payload["all_vanish"] = rep.all_vanish;
    payload["first_failing"] = rep.first_failing;
    if (!rep.all_vanish) {
        for (const auto& ord : rep.orders)
            if (ord.order == rep.first_failing) {
                payload["first_failing_residual"] = cochain3_to_json(ord.residual);
                break;
            }
        diags.push_back("deformation obstructed at order " + std::to_string(rep.first_failing));
    }
    return payload;
}

Json cmd_symalg(const Opts& o) {
    AlgebraStructure lie = algebra_from_json(read_json_input(o.input));
    SymAlg s = build_symalg(lie, o.truncation);
    AlgebraStructure combined = combine(s.pair, true);
    Json payload = algebra_to_json(combined);
    payload["generators"] = s.basis.generators;
    payload["truncation"] = s.basis.truncation;
    Json monos = Json::array();
    for (const auto& m : s.basis.monomials) monos.push_back(m);
    payload["monomials"] = monos;
    if (!o.emit.empty()) write_text(o.emit, o.pretty ? payload.dump(2) : payload.dump());
    return payload;
}

Json cmd_catalog_list() {
    Json payload = Json::array();
    for (const auto& name : catalog_names()) {
        Json e;
        e["name"] = name;
        e["params"] = catalog_params(name);
        payload.push_back(e);
    }
    return payload;
}

Json cmd_catalog_show(const Opts& o) {
    auto params = parse_params(o.params);
    AlgebraStructure a = catalog_get(o.name, params);
    Json payload;
    payload["name"] = o.name;
    if (!params.empty()) {
        Json pj;
        for (const auto& [k, v] : params) pj[k] = v.str();
        payload["params"] = pj;
    }
    Json aj = algebra_to_json(a);
    for (const auto& [k, v] : aj.items()) payload[k] = v;
    if (!o.emit.empty()) write_text(o.emit, o.pretty ? payload.dump(2) : payload.dump());
    return payload;
}

Json cmd_catalog_audit(std::vector<std::string>& diags) {
    AuditReport rep = audit_all();
    Json entries = Json::array();
    for (const auto& e : rep.entries) {
        Json ej;
        ej["fixture"] = e.fixture;
        ej["passed"] = e.passed;
        if (!e.failures.empty()) ej["failures"] = e.failures;
        entries.push_back(ej);
    }
    Json payload;
    payload["all_passed"] = rep.all_passed;
    payload["entries"] = entries;
    if (!rep.all_passed) diags.push_back("catalog audit found failing fixtures");
    return payload;
}

int emit(const Json& payload, const std::vector<std::string>& diags, const Opts& o) {
    Json env;
    env["status"] = "ok";
    env["payload"] = payload;
    env["diagnostics"] = diags;
    std::string text = o.pretty ? env.dump(2) : env.dump();
    if (!o.out.empty())
        write_text(o.out, text);
    else
        std::cout << text << "\n";
    return 0;
}

int emit_error(const std::string& kind, const std::string& message, bool pretty) {
    Json env;
    env["status"] = "error";
    env["error_kind"] = kind;
    env["message"] = message;
    env["diagnostics"] = Json::array();
    std::cout << (pretty ? env.dump(2) : env.dump()) << "\n";
    return kind == "internal" ? 2 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"Exact computer algebra for admissible Poisson structures"};
    app.require_subcommand(1);
    Opts o;
    app.add_flag("--pretty", o.pretty, "indent JSON output");
    app.add_option("--out", o.out, "write the result to a file instead of standard output");
    app.add_option("--seed", o.seed, "seed for randomized checks");

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", o.input, "algebra JSON file, or - for standard input");
        sub->fallthrough();
    };

    auto* c_check = app.add_subcommand("check", "verify defining identities of a product table");
    add_input(c_check);
    c_check->add_option("--identities", o.identities, "comma-separated subset to check");

    auto* c_split = app.add_subcommand("split", "decompose a product into bracket and product");
    add_input(c_split);

    auto* c_pierce = app.add_subcommand("pierce", "eigenspace decomposition at an idempotent");
    add_input(c_pierce);
    c_pierce->add_option("--idempotent", o.idempotent, "coordinates, e.g. 0,0,1")->required();

    auto* c_nil = app.add_subcommand("nilradical", "radical chain of an admissible algebra");
    add_input(c_nil);

    auto* c_coh = app.add_subcommand("cohomology", "cocycle and coboundary dimensions");
    add_input(c_coh);
    c_coh->add_option("--degree", o.degree, "restrict to degree 0, 1 or 2")
        ->check(CLI::Range(0, 2));
    c_coh->add_flag("--basis", o.basis, "include basis tables");
    c_coh->add_option("--operators", o.operators,
                      "cochain JSON file; also emit its classical operator values");

    auto* c_prod = app.add_subcommand("products", "commutative products compatible with a bracket");
    add_input(c_prod);
    c_prod->add_flag("--basis", o.basis, "include basis tables");

    auto* c_def = app.add_subcommand("deform", "order-by-order obstructions of a formal family");
    add_input(c_def);
    c_def->add_option("--terms", o.terms, "JSON file with the cochain terms")->required();
    c_def->add_option("--order", o.order, "pad or truncate the family to this order");

    auto* c_sym = app.add_subcommand("symalg", "truncated symmetric algebra of a Lie bracket");
    add_input(c_sym);
    c_sym->add_option("--truncation", o.truncation, "maximal monomial degree")
        ->required()
        ->check(CLI::PositiveNumber);
    c_sym->add_option("--emit", o.emit, "also write the algebra JSON to a file");

    auto* c_cat = app.add_subcommand("catalog", "named algebras with known invariants");
    c_cat->require_subcommand(1);
    c_cat->fallthrough();
    auto* c_list = c_cat->add_subcommand("list", "all fixture names and their parameters");
    c_list->fallthrough();
    auto* c_show = c_cat->add_subcommand("show", "emit one fixture as algebra JSON");
    c_show->add_option("name", o.name, "fixture name")->required();
    c_show->add_option("--param", o.params, "parameter as name=value (repeatable)");
    c_show->add_option("--emit", o.emit, "also write the algebra JSON to a file");
    c_show->fallthrough();
    auto* c_audit = c_cat->add_subcommand("audit", "check every fixture against its invariants");
    c_audit->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return emit_error("input", e.what(), o.pretty);
    }

    try {
        std::vector<std::string> diags;
        Json payload;
        if (app.got_subcommand(c_check))
            payload = cmd_check(o, diags);
        else if (app.got_subcommand(c_split))
            payload = cmd_split(o);
        else if (app.got_subcommand(c_pierce))
            payload = cmd_pierce(o);
        else if (app.got_subcommand(c_nil))
            payload = cmd_nilradical(o);
        else if (app.got_subcommand(c_coh))
            payload = cmd_cohomology(o, diags);
        else if (app.got_subcommand(c_prod))
            payload = cmd_products(o);
        else if (app.got_subcommand(c_def))
            payload = cmd_deform(o, diags);
        else if (app.got_subcommand(c_sym))
            payload = cmd_symalg(o);
        else if (c_cat->got_subcommand(c_list))
            payload = cmd_catalog_list();
        else if (c_cat->got_subcommand(c_show))
            payload = cmd_catalog_show(o);
        else
            payload = cmd_catalog_audit(diags);
        return emit(payload, diags, o);
    } catch (const input_error& e) {
        return emit_error("input", e.what(), o.pretty);
    } catch (const internal_error& e) {
        return emit_error("internal", e.what(), o.pretty);
    } catch (const std::exception& e) {
        return emit_error("internal", e.what(), o.pretty);
    }
}

int run_cli(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args);
}

}  // namespace poisson
