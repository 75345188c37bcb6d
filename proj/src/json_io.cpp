#include "hamfix/json_io.hpp"

#include <climits>
#include <fstream>
#include <set>

namespace hamfix {

namespace {

const char* payload_key(PayloadKind k) {
    switch (k) {
        case PayloadKind::fixed_point_data: return "fixed_point_data";
        case PayloadKind::polytope: return "polytope";
        case PayloadKind::suite_request: return "suite_request";
    }
    return "";
}

void require_object(const Json& j, const std::string& what, const std::set<std::string>& allowed) {
    if (!j.is_object()) throw StructuralError(what + " must be an object");
    for (const auto& [key, value] : j.items())
        if (!allowed.count(key)) throw StructuralError("unknown key '" + key + "' in " + what);
}

const Json& required(const Json& j, const std::string& key, const std::string& what) {
    auto it = j.find(key);
    if (it == j.end()) throw StructuralError(what + " lacks '" + key + "'");
    return *it;
}

long get_long(const Json& j, const std::string& what) {
    if (!j.is_number_integer()) throw StructuralError(what + " must be an integer");
    return j.get<long>();
}

int get_int(const Json& j, const std::string& what) {
    long v = get_long(j, what);
    if (v < INT_MIN || v > INT_MAX) throw StructuralError(what + " out of range");
    return static_cast<int>(v);
}

bool get_bool(const Json& j, const std::string& what) {
    if (!j.is_boolean()) throw StructuralError(what + " must be a boolean");
    return j.get<bool>();
}

std::string get_string(const Json& j, const std::string& what) {
    if (!j.is_string()) throw StructuralError(what + " must be a string");
    return j.get<std::string>();
}

std::vector<int> get_ints(const Json& j, const std::string& what) {
    if (!j.is_array()) throw StructuralError(what + " must be an array");
    std::vector<int> out;
    for (const auto& x : j) out.push_back(get_int(x, what));
    return out;
}

FixedComponent component_from_json(const Json& j) {
    require_object(j, "component",
                   {"id", "kind", "H", "weights", "genus", "normal_degrees", "area", "b2", "fibre_intersection", "fibre_class"});
    FixedComponent c;
    c.id = get_string(required(j, "id", "component"), "id");
    const std::string what = "component " + c.id;
    c.kind = parse_kind(get_string(required(j, "kind", what), what + " kind"));
    c.H = rational_from_json(required(j, "H", what));
    c.weights = get_ints(required(j, "weights", what), what + " weights");
    if (j.contains("genus")) c.genus = get_int(j["genus"], what + " genus");
    if (j.contains("normal_degrees")) c.normal_degrees = get_ints(j["normal_degrees"], what + " normal_degrees");
    if (j.contains("area")) c.area = rational_from_json(j["area"]);
    if (j.contains("b2")) c.b2 = get_int(j["b2"], what + " b2");
    if (j.contains("fibre_intersection")) c.fibre_intersection = get_int(j["fibre_intersection"], what + " fibre_intersection");
    if (j.contains("fibre_class")) c.fibre_class = get_bool(j["fibre_class"], what + " fibre_class");
    return c;
}

GradientEdge edge_from_json(const Json& j) {
    require_object(j, "edge", {"bottom", "top", "weight", "interior"});
    GradientEdge e;
    e.bottom = get_string(required(j, "bottom", "edge"), "edge bottom");
    e.top = get_string(required(j, "top", "edge"), "edge top");
    e.weight = get_int(required(j, "weight", "edge"), "edge weight");
    if (j.contains("interior")) {
        const Json& in = j["interior"];
        if (!in.is_array()) throw StructuralError("edge interior must be an array");
        std::vector<std::array<int, 2>> pairs;
        for (const auto& p : in) {
            auto ws = get_ints(p, "interior weights");
            if (ws.size() != 2) throw StructuralError("interior weights come in pairs");
            pairs.push_back({ws[0], ws[1]});
        }
        e.interior = std::move(pairs);
    }
    return e;
}

}  // namespace

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return make_rational(j.get<long>());
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw StructuralError(std::string("bad rational: ") + e.what());
        }
    }
    throw StructuralError("rationals must be integers or \"p/q\" strings");
}

FixedPointData fixed_point_data_from_json(const Json& j) {
    require_object(j, "fixed_point_data", {"half_dim", "relative_fano", "fano", "components", "edges"});
    FixedPointData d;
    d.half_dim = get_int(required(j, "half_dim", "fixed_point_data"), "half_dim");
    if (j.contains("relative_fano")) d.relative_fano = get_bool(j["relative_fano"], "relative_fano");
    if (j.contains("fano")) d.fano = get_bool(j["fano"], "fano");
    const Json& comps = required(j, "components", "fixed_point_data");
    if (!comps.is_array()) throw StructuralError("components must be an array");
    for (const auto& c : comps) d.components.push_back(component_from_json(c));
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw StructuralError("edges must be an array");
        for (const auto& e : j["edges"]) d.edges.push_back(edge_from_json(e));
    }
    return d;
}

LatticePolytope polytope_from_json(const Json& j) {
    require_object(j, "polytope", {"dim", "vertices"});
    int dim = get_int(required(j, "dim", "polytope"), "dim");
    if (dim != 2 && dim != 3) throw StructuralError("polytope dim must be 2 or 3");
    const Json& vs = required(j, "vertices", "polytope");
    if (!vs.is_array()) throw StructuralError("vertices must be an array");
    std::vector<IntVec> pts;
    for (const auto& v : vs) {
        if (!v.is_array() || static_cast<int>(v.size()) != dim) throw StructuralError("vertex of the wrong length");
        IntVec p;
        for (const auto& x : v) p.push_back(get_long(x, "vertex coordinate"));
        pts.push_back(std::move(p));
    }
    try {
        return LatticePolytope::from_points(dim, pts);
    } catch (const PreconditionError& e) {
        throw StructuralError(e.what());
    }
}

SuiteRequest suite_request_from_json(const Json& j) {
    require_object(j, "suite_request", {"fixed_point_data", "cycle"});
    SuiteRequest r;
    r.data = fixed_point_data_from_json(required(j, "fixed_point_data", "suite_request"));
    if (j.contains("cycle")) {
        if (!j["cycle"].is_array()) throw StructuralError("cycle must be an array");
        std::vector<std::string> ids;
        for (const auto& x : j["cycle"]) ids.push_back(get_string(x, "cycle entry"));
        r.cycle = std::move(ids);
    }
    return r;
}

Document parse_document(const Json& j) {
    if (!j.is_object()) throw StructuralError("document must be a JSON object");
    if (j.contains("schema_version")) {
        if (j["schema_version"] != "1") throw StructuralError("unrecognised schema_version");
        if (j.size() != 2) throw StructuralError("document holds schema_version and exactly one payload");
        for (auto k : {PayloadKind::fixed_point_data, PayloadKind::polytope, PayloadKind::suite_request})
            if (j.contains(payload_key(k))) return {k, j[payload_key(k)]};
        throw StructuralError("document has no recognised payload");
    }
    if (j.contains("components")) return {PayloadKind::fixed_point_data, j};
    if (j.contains("vertices")) return {PayloadKind::polytope, j};
    if (j.contains("fixed_point_data")) return {PayloadKind::suite_request, j};
    throw StructuralError("cannot tell the payload type");
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw StructuralError("cannot read " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw StructuralError(path + ": " + e.what());
    }
}

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const FixedPointData& d) {
    Json comps = Json::array();
    for (const auto& c : d.components) {
        Json o{{"id", c.id}, {"kind", to_string(c.kind)}, {"H", to_json(c.H)}, {"weights", c.weights}};
        if (c.is_surface()) o["genus"] = c.genus;
        if (!c.normal_degrees.empty()) o["normal_degrees"] = c.normal_degrees;
        if (c.area) o["area"] = to_json(*c.area);
        if (c.b2) o["b2"] = *c.b2;
        if (c.fibre_intersection) o["fibre_intersection"] = *c.fibre_intersection;
        if (c.fibre_class) o["fibre_class"] = true;
        comps.push_back(std::move(o));
    }
    Json edges = Json::array();
    for (const auto& e : d.edges) {
        Json o{{"bottom", e.bottom}, {"top", e.top}, {"weight", e.weight}};
        if (e.interior) {
            Json in = Json::array();
            for (const auto& p : *e.interior) in.push_back({p[0], p[1]});
            o["interior"] = std::move(in);
        }
        edges.push_back(std::move(o));
    }
    return {{"half_dim", d.half_dim}, {"relative_fano", d.relative_fano}, {"fano", d.fano}, {"components", comps}, {"edges", edges}};
}

Json to_json(const LatticePolytope& p) {
    Json vs = Json::array();
    for (const auto& v : p.vertices()) vs.push_back(v);
    return {{"dim", p.dim()}, {"vertices", vs}};
}

Json to_json(const Report& r) {
    Json fs = Json::array();
    for (const auto& f : r.findings())
        fs.push_back({{"check", f.check}, {"status", to_string(f.status)}, {"detail", f.detail}, {"witnesses", f.witnesses}});
    return {{"status", to_string(r.overall())}, {"violations", r.violation_count()}, {"findings", fs}};
}

Json to_json(const Polynomial& p) {
    Json cs = Json::array();
    for (const auto& c : p.coefficients()) cs.push_back(to_json(c));
    return {{"coefficients", cs}, {"text", p.to_string("t")}};
}

Json to_json(const PiecewisePolynomial& f) {
    Json bs = Json::array();
    for (const auto& b : f.breakpoints) bs.push_back(to_json(b));
    Json ps = Json::array();
    for (const auto& p : f.pieces) ps.push_back(to_json(p));
    return {{"breakpoints", bs}, {"pieces", ps}};
}

Json to_json(const LabelledGraph& g) {
    Json vs = Json::array();
    for (const auto& v : g.vertices) {
        Json o{{"id", v.id}, {"kind", to_string(v.kind)}, {"H", to_json(v.H)}, {"weights", v.weights}};
        if (v.kind == ComponentKind::surface) o["genus"] = v.genus;
        if (v.fibre_intersection) o["fibre_intersection"] = *v.fibre_intersection;
        vs.push_back(std::move(o));
    }
    Json es = Json::array();
    for (const auto& e : g.edges) es.push_back({{"bottom", e.bottom}, {"top", e.top}, {"weight", e.weight}});
    return {{"vertices", vs}, {"edges", es}, {"min", g.v_min}, {"max", g.v_max}};
}

Json to_json(const Chain& c) { return {{"components", c.components}, {"weights", c.weights}}; }

Json wrap_document(PayloadKind kind, Json payload) {
    return {{"schema_version", "1"}, {payload_key(kind), std::move(payload)}};
}

}  // namespace hamfix
