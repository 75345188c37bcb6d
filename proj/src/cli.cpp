#include "hamfix/cli.hpp"

#include "hamfix/dh.hpp"
#include "hamfix/fano6.hpp"
#include "hamfix/json_io.hpp"
#include "hamfix/localization.hpp"
#include "hamfix/toric.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <sstream>

namespace hamfix {

namespace {

struct Outcome {
    Json body;
    int code = 0;
};

int code_of(const Report& r) { return r.passed() ? 0 : 1; }

FixedPointData load_data(const std::string& path) {
    Document doc = parse_document(load_json_file(path));
    switch (doc.kind) {
        case PayloadKind::fixed_point_data: return fixed_point_data_from_json(doc.payload);
        case PayloadKind::suite_request: return suite_request_from_json(doc.payload).data;
        case PayloadKind::polytope: break;
    }
    throw StructuralError(path + " holds a polytope, not fixed point data");
}

LatticePolytope load_polytope(const std::string& arg) {
    for (const auto& e : delpezzo_catalog())
        if (e.name == arg) return e.polytope;
    Document doc = parse_document(load_json_file(arg));
    if (doc.kind != PayloadKind::polytope) throw StructuralError(arg + " does not hold a polytope");
    return polytope_from_json(doc.payload);
}

CircleDirection parse_xi(const std::string& text) {
    IntVec v;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            size_t used = 0;
            v.push_back(std::stol(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw StructuralError("--xi expects integers separated by commas");
        }
    }
    try {
        return CircleDirection(v);
    } catch (const PreconditionError& e) {
        throw StructuralError(e.what());
    }
}

Outcome cmd_validate(const std::string& path) {
    Report r = validate(load_data(path));
    return {{{"report", to_json(r)}}, code_of(r)};
}

Outcome cmd_normalize(const std::string& path) {
    FixedPointData d = load_data(path);
    try {
        Normalization n = weight_sum_normalize(d);
        return {{{"constant", to_json(n.constant)}, {"fixed_point_data", to_json(n.data)}}, 0};
    } catch (const WeightSumMismatch& e) {
        Json res = Json::object();
        for (const auto& [id, r] : e.residuals()) res[id] = to_json(r);
        return {{{"constant", to_json(e.constant())}, {"residuals", res}, {"error", e.what()}}, 1};
    }
}

Outcome cmd_localize(const std::string& which, const std::string& path) {
    FixedPointData d = load_data(path);
    Rational s = which == "4d" ? abbv_sum_4d(d) : abbv_sum_6d(d);
    return {{{"sum", to_json(s)}}, s == 0 ? 0 : 1};
}

Outcome cmd_chi_y(const std::string& path) {
    FixedPointData d = load_data(path);
    Json body{{"chi_y", to_json(chi_y(d))}};
    if (d.half_dim == 3) {
        ToddC1C2 t = todd_and_c1c2(d);
        body["todd"] = to_json(t.todd);
        body["c1c2"] = to_json(t.c1c2);
    }
    return {body, 0};
}

Outcome cmd_dh(const std::string& poly, const std::string& xi_text) {
    LatticePolytope P = load_polytope(poly);
    CircleDirection xi = parse_xi(xi_text);
    Json body{{"xi", xi.to_string()}, {"dh", to_json(dh_function_toric(P, xi))}};
    if (P.dim() != 2 || !is_generic(P, xi)) return {body, 0};
    Report r = fibre_area_bound_check(P, xi);
    body["report"] = to_json(r);
    return {body, code_of(r)};
}

Outcome cmd_scan(const std::string& poly, int bound) {
    LatticePolytope P = load_polytope(poly);
    Json items = Json::array();
    int code = 0;
    for (const auto& item : scan_directions(P, bound)) {
        items.push_back({{"xi", item.xi.to_string()}, {"report", to_json(item.report)}});
        code = std::max(code, code_of(item.report));
    }
    return {{{"items", items}}, code};
}

Outcome cmd_graph(const std::string& path) {
    SurfaceGraph sg = surface_graph(load_data(path));
    return {{{"graph", to_json(sg.graph)}, {"report", to_json(sg.report)}}, code_of(sg.report)};
}

Outcome cmd_chains(const std::string& path) {
    FixedPointData d = load_data(path);
    Report r = chainres_check(d);
    Json body{{"report", to_json(r)}};
    if (r.passed()) {
        Json chains = Json::array();
        for (const auto& c : maximal_downward_chains(d)) chains.push_back(to_json(c));
        body["chains"] = chains;
    }
    return {body, code_of(r)};
}

Outcome cmd_abc(const std::string& path) {
    TypeCounts t = type_abc_classify(load_data(path));
    Json body{{"n_a", t.n_a}, {"n_b", t.n_b}, {"n_c", t.n_c}, {"b2", t.b2}, {"max_weights", t.max_weights},
              {"report", to_json(t.report)}};
    return {body, code_of(t.report)};
}

Outcome cmd_suite(const std::string& path) {
    Document doc = parse_document(load_json_file(path));
    SuiteRequest req;
    if (doc.kind == PayloadKind::suite_request)
        req = suite_request_from_json(doc.payload);
    else if (doc.kind == PayloadKind::fixed_point_data)
        req.data = fixed_point_data_from_json(doc.payload);
    else
        throw StructuralError(path + " holds a polytope, not fixed point data");

    SmallHamiltonian s = small_hamiltonian_suite(req.data);
    Report all = s.report;
    Json body{{"genus", s.genus}};
    if (s.witness) {
        body["witness"] = *s.witness;
        body["witness_c1"] = *s.witness_c1;
    }
    if (req.cycle) {
        CycleInequality c = cycle_inequality(req.data, req.cycle);
        body["cycle"] = {{"report", to_json(c.report)}};
        if (c.witness) {
            body["cycle"]["witness"] = *c.witness;
            body["cycle"]["witness_c1"] = *c.witness_c1;
        }
        all.append(c.report);
    }
    body["report"] = to_json(s.report);
    return {body, code_of(all)};
}

Outcome cmd_enumerate() {
    Table04 t = enumerate_04();
    Json rows = Json::array();
    for (const auto& row : t.rows)
        rows.push_back({{"max_weights", row.max_weights}, {"n_a", row.n_a}, {"n_b", row.n_b}, {"n_c", row.n_c},
                        {"total", row.total()}, {"volume", to_json(row.volume)}, {"b2", row.b2}});
    return {{{"rows", rows}, {"report", to_json(t.report)}}, code_of(t.report)};
}

Json error_body(const char* kind, const std::string& message) { return {{"error", {{"kind", kind}, {"message", message}}}}; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact checks on fixed point data of Hamiltonian circle actions", "hamfix"};
    bool pretty = false;
    app.add_flag("--pretty", pretty, "Indented JSON output");
    app.require_subcommand(1);
    app.fallthrough();  // inherited, so --pretty works after a subcommand

    std::function<Outcome()> action;
    std::string file, which, poly, xi;
    int bound = 1;

    auto* v = app.add_subcommand("validate", "Check fixed point data");
    v->add_option("file", file)->required();
    v->callback([&] { action = [&] { return cmd_validate(file); }; });

    auto* n = app.add_subcommand("normalize", "Shift H so that H = -sum of weights");
    n->add_option("file", file)->required();
    n->callback([&] { action = [&] { return cmd_normalize(file); }; });

    auto* l = app.add_subcommand("localize", "Localisation sum");
    l->add_option("dimension", which)->required()->check(CLI::IsMember({"4d", "6d"}));
    l->add_option("file", file)->required();
    l->callback([&] { action = [&] { return cmd_localize(which, file); }; });

    auto* c = app.add_subcommand("chi-y", "chi_y genus, and Todd genus and c1c2 in dimension 6");
    c->add_option("file", file)->required();
    c->callback([&] { action = [&] { return cmd_chi_y(file); }; });

    auto* dh = app.add_subcommand("dh", "Duistermaat-Heckman function");
    dh->require_subcommand(1);
    auto* dht = dh->add_subcommand("toric", "Slice lengths of a polygon");
    dht->add_option("polytope", poly, "Polytope file or catalog name")->required();
    dht->add_option("--xi", xi, "Circle direction a,b")->required();
    dht->callback([&] { action = [&] { return cmd_dh(poly, xi); }; });

    auto* t = app.add_subcommand("toric", "Toric sweeps");
    t->require_subcommand(1);
    auto* ts = t->add_subcommand("scan", "Check every primitive direction up to a bound");
    ts->add_option("polytope", poly, "Polytope file or catalog name")->required();
    ts->add_option("--bound", bound, "Max-norm of directions")->check(CLI::PositiveNumber);
    ts->callback([&] { action = [&] { return cmd_scan(poly, bound); }; });

    auto* f = app.add_subcommand("fano6", "Checks on 6-dim fixed point data");
    f->require_subcommand(1);
    auto* fg = f->add_subcommand("graph", "Graph of fixed surfaces");
    fg->add_option("file", file)->required();
    fg->callback([&] { action = [&] { return cmd_graph(file); }; });
    auto* fc = f->add_subcommand("chains", "Downward chains with a fourfold minimum");
    fc->add_option("file", file)->required();
    fc->callback([&] { action = [&] { return cmd_chains(file); }; });
    auto* fa = f->add_subcommand("abc", "Type A/B/C counts");
    fa->add_option("file", file)->required();
    fa->callback([&] { action = [&] { return cmd_abc(file); }; });
    auto* fs = f->add_subcommand("suite", "Inequalities with positive-genus extrema");
    fs->add_option("file", file)->required();
    fs->callback([&] { action = [&] { return cmd_suite(file); }; });

    auto* e = app.add_subcommand("enumerate-04", "Enumerate point counts with a fourfold minimum");
    e->callback([&] { action = [&] { return cmd_enumerate(); }; });

    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    try {
        app.parse(reversed_args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& ex) {
        err << ex.what() << "\n" << app.help();
        return 2;
    }

    Json body;
    int code = 0;
    try {
        Outcome o = action();
        body = std::move(o.body);
        code = o.code;
    } catch (const StructuralError& ex) {
        body = error_body("structural", ex.what());
        code = 2;
    } catch (const PreconditionError& ex) {
        body = error_body("precondition", ex.what());
        code = 2;
    } catch (const IncompleteDataError& ex) {
        body = error_body("incomplete", ex.what());
        code = 2;
    } catch (const InconsistentDataError& ex) {
        body = error_body("inconsistent", ex.what());
        code = 1;
    }
    out << (pretty ? body.dump(2) : body.dump()) << "\n";
    if (code == 2 && body.contains("error")) err << body["error"]["message"].get<std::string>() << "\n";
    return code;
}

}  // namespace hamfix
