#include "hamfix/fano6.hpp"

#include "hamfix/dh.hpp"
#include "hamfix/localization.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <variant>

namespace hamfix {

namespace {

std::vector<int> sorted(std::vector<int> w) {
    std::sort(w.begin(), w.end());
    return w;
}

std::string edge_name(const std::string& bottom, const std::string& top) { return bottom + "->" + top; }

void record(Report& r, const std::string& check, const std::vector<std::string>& bad, const std::string& pass_detail,
            const std::string& fail_detail) {
    if (bad.empty())
        r.pass(check, pass_detail);
    else
        r.fail(check, fail_detail, bad);
}

const GradientEdge* find_edge(const FixedPointData& data, const std::string& a, const std::string& b) {
    for (const auto& e : data.edges)
        if ((e.bottom == a && e.top == b) || (e.bottom == b && e.top == a)) return &e;
    return nullptr;
}

bool all_moduli(const FixedComponent& c, int lo, int hi) {
    return std::all_of(c.weights.begin(), c.weights.end(), [&](int w) { return std::abs(w) >= lo && std::abs(w) <= hi; });
}

}  // namespace

SurfaceGraph surface_graph(const FixedPointData& data) {
    if (data.half_dim != 3) throw PreconditionError("surface graph needs 6-dim data");
    check_structure(data);
    auto [min_id, max_id] = extremal(data);
    if (!data.at(min_id).is_surface() || !data.at(max_id).is_surface())
        throw PreconditionError("surface graph needs fixed surfaces at both extrema");

    SurfaceGraph out;
    LabelledGraph& g = out.graph;
    for (const auto* c : sorted_by_level(data))
        if (c->is_surface()) g.vertices.push_back({c->id, c->kind, c->H, c->weights, c->genus, c->fibre_intersection, c->area});
    for (const auto& e : data.edges)
        if (data.at(e.bottom).is_surface() && data.at(e.top).is_surface()) g.edges.push_back({e.bottom, e.top, e.weight});
    g.v_min = min_id;
    g.v_max = max_id;

    std::vector<std::string> over, count, genus, match;
    for (const auto& v : g.vertices) {
        int deg = g.degree(v.id);
        if (deg > 2) over.push_back(v.id);
        int steep = static_cast<int>(std::count_if(v.weights.begin(), v.weights.end(), [](int w) { return std::abs(w) > 1; }));
        if (v.genus > 0 && deg != steep) count.push_back(v.id);
    }
    for (const auto& comp : g.components()) {
        std::set<int> genera;
        for (const auto& id : comp) genera.insert(g.find(id)->genus);
        if (genera.size() > 1) genus.insert(genus.end(), comp.begin(), comp.end());
    }
    for (const auto& e : g.edges) {
        const auto& b = g.find(e.bottom)->weights;
        const auto& t = g.find(e.top)->weights;
        if (std::find(b.begin(), b.end(), e.weight) == b.end() || std::find(t.begin(), t.end(), -e.weight) == t.end())
            match.push_back(edge_name(e.bottom, e.top));
    }
    record(out.report, "surface-degree", over, "every surface lies in at most two isotropy 4-manifolds",
           "surface in more than two isotropy 4-manifolds");
    record(out.report, "isotropy-count", count, "degree equals the number of weights of modulus > 1",
           "degree differs from the number of weights of modulus > 1");
    record(out.report, "genus-constant", genus, "genus is constant on connected components",
           "genus changes along a connected component");
    record(out.report, "edge-weights", match, "edge weight n appears as +n below and -n above",
           "edge weight missing from its endpoint weights");
    return out;
}

LabelledGraph positive_genus_part(const LabelledGraph& g) {
    return g.subgraph([](const GraphVertex& v) { return v.kind == ComponentKind::surface && v.genus > 0; });
}

LabelledGraph genus_part(const LabelledGraph& g, int genus) {
    return g.subgraph([genus](const GraphVertex& v) { return v.kind == ComponentKind::surface && v.genus == genus; });
}

std::optional<VertexMap> find_reflection(const LabelledGraph& q) {
    for (const auto& v : q.vertices)
        if (v.kind != ComponentKind::point) return std::nullopt;
    return find_involution(q);
}

bool reflective_check(const LabelledGraph& q) { return find_reflection(q).has_value(); }

Report nonref_check(const LabelledGraph& q) {
    Report r;
    if (!reflective_check(q)) {
        r.pass("reflective-extrema", "graph is not reflective");
        return r;
    }
    std::vector<std::string> bad;
    if (sorted(q.find(q.v_min)->weights) != std::vector<int>{1, 1}) bad.push_back(q.v_min);
    if (sorted(q.find(q.v_max)->weights) != std::vector<int>{-1, -1}) bad.push_back(q.v_max);
    record(r, "reflective-extrema", bad, "reflective graph has weights {1,1} and {-1,-1} at the extrema",
           "reflective graph with non-unit extremal weights");
    return r;
}

namespace {

// First pair, in (H, id) order, whose labels disagree.
std::vector<std::string> offending_pair(const LabelledGraph& q, const LabelledGraph& g, const MatchOptions& opts) {
    auto order = [](const LabelledGraph& x) {
        std::vector<const GraphVertex*> vs;
        for (const auto& v : x.vertices) vs.push_back(&v);
        std::sort(vs.begin(), vs.end(), [](auto* a, auto* b) { return a->H != b->H ? a->H < b->H : a->id < b->id; });
        return vs;
    };
    auto qs = order(q);
    auto gs = order(g);
    if (qs.size() != gs.size())
        return {"vertex count " + std::to_string(qs.size()) + " vs " + std::to_string(gs.size())};
    VertexMap naive;
    for (size_t i = 0; i < qs.size(); ++i) naive[qs[i]->id] = gs[i]->id;
    for (size_t i = 0; i < qs.size(); ++i) {
        if (qs[i]->H != gs[i]->H || weight_signature(*qs[i]) != weight_signature(*gs[i]))
            return {qs[i]->id, gs[i]->id};
        for (size_t j = 0; j < i; ++j) {
            int a = q.edge_weight(qs[i]->id, qs[j]->id);
            int b = g.edge_weight(gs[i]->id, gs[j]->id);
            if (a < opts.min_edge_weight) a = 0;
            if (b < opts.min_edge_weight) b = 0;
            if (a != b) return {qs[i]->id, gs[i]->id};
        }
    }
    return {"no consistent assignment"};
}

}  // namespace

FibreCorrespondence fibre_correspondence(const LabelledGraph& g, const LabelledGraph& q) {
    for (const auto& v : q.vertices)
        if (v.kind != ComponentKind::point) throw PreconditionError("fibre graph must have isolated fixed points");
    const GraphVertex* gmin = g.find(g.v_min);
    if (!gmin || gmin->kind != ComponentKind::surface || gmin->genus < 1)
        throw PreconditionError("surface graph needs a positive-genus minimum");
    const int genus = gmin->genus;
    const int chi = static_cast<int>(q.vertices.size());

    FibreCorrespondence out;
    LabelledGraph plus = positive_genus_part(g);
    bool doubled = std::any_of(plus.vertices.begin(), plus.vertices.end(),
                               [](const GraphVertex& v) { return v.fibre_intersection && *v.fibre_intersection == 2; });
    out.case_number = doubled ? 1 : 2;

    MatchOptions opts;
    opts.match_kind = false;
    opts.min_edge_weight = 2;

    if (out.case_number == 2) {
        int n_plus = static_cast<int>(plus.vertices.size());
        if (n_plus == chi)
            out.report.pass("positive-genus-count", std::to_string(n_plus) + " surfaces of positive genus");
        else
            out.report.fail("positive-genus-count",
                            std::to_string(n_plus) + " surfaces of positive genus, fibre has " + std::to_string(chi) +
                                " fixed points");
        LabelledGraph gg = genus_part(g, genus);
        if (auto iso = find_isomorphism(q, gg, opts)) {
            out.mapping = *iso;
            out.report.pass("fibre-isomorphism", "fibre graph matches the genus-" + std::to_string(genus) + " subgraph");
        } else {
            out.report.fail("fibre-isomorphism", "no label-preserving isomorphism", offending_pair(q, gg, opts));
        }
        return out;
    }

    auto interior_plus = plus.subgraph([&](const GraphVertex& v) { return v.id != g.v_min && v.id != g.v_max; });
    int n_inner = static_cast<int>(interior_plus.vertices.size());
    if (chi % 2 == 0 && n_inner == chi / 2 - 1)
        out.report.pass("inner-positive-genus-count", std::to_string(n_inner) + " non-extremal surfaces of positive genus");
    else
        out.report.fail("inner-positive-genus-count", std::to_string(n_inner) + " non-extremal surfaces of positive genus, expected " +
                                                          std::to_string(chi / 2 - 1));
    if (reflective_check(q))
        out.report.pass("fibre-reflective");
    else
        out.report.fail("fibre-reflective", "a surface meets the fibre twice but the fibre graph has no reflection");

    out.mapping[q.v_min] = g.v_min;
    out.mapping[q.v_max] = g.v_max;
    auto q_inner = q.subgraph([&](const GraphVertex& v) { return v.id != q.v_min && v.id != q.v_max; });
    std::vector<std::string> unmatched;
    auto restrict = [](const LabelledGraph& g, const std::vector<std::string>& keep) {
        std::set<std::string> ids(keep.begin(), keep.end());
        return g.subgraph([&](const GraphVertex& v) { return ids.count(v.id) > 0; });
    };
    std::vector<LabelledGraph> targets;
    for (const auto& comp : interior_plus.components()) targets.push_back(restrict(interior_plus, comp));
    for (const auto& comp : q_inner.components()) {
        auto part = restrict(q_inner, comp);
        std::optional<VertexMap> iso;
        for (const auto& t : targets)
            if ((iso = find_isomorphism(part, t, opts))) break;
        if (iso) {
            for (const auto& [a, b] : *iso) out.mapping[a] = b;
        } else {
            auto pair = offending_pair(part, interior_plus, opts);
            unmatched.insert(unmatched.end(), pair.begin(), pair.end());
        }
    }
    record(out.report, "component-isomorphism", unmatched, "each half of the fibre graph matches the inner surfaces",
           "a half of the fibre graph does not match the inner surfaces");

    std::vector<std::string> outside;
    for (const auto& v : g.vertices)
        if (v.H < -3 || v.H > 3) outside.push_back(v.id);
    record(out.report, "reflective-height-range", outside, "H within [-3,3]", "reflective fibre but H leaves [-3,3]");
    return out;
}

namespace {

using ChainResult = std::variant<Chain, std::string>;  // chain, or the component lacking a continuation

ChainResult extend_chain(const FixedPointData& data, const GradientEdge& start) {
    Chain ch;
    ch.components = {start.top, start.bottom};
    ch.weights = {start.weight};
    std::string cur = start.bottom;
    while (true) {
        const auto& comp = data.at(cur);
        auto ws = sorted(comp.weights);
        if (ws.empty() || ws.front() >= -1) break;
        int need = -ws.front();
        const GradientEdge* next = nullptr;
        for (const auto& e : data.edges)
            if (e.top == cur && e.weight == need && (!next || e.bottom < next->bottom)) next = &e;
        if (!next) return cur;
        if (!(data.at(next->bottom).H < comp.H)) throw InconsistentDataError("edge " + edge_name(next->bottom, cur) + " is not downward");
        ch.components.push_back(next->bottom);
        ch.weights.push_back(next->weight);
        cur = next->bottom;
    }
    return ch;
}

}  // namespace

std::vector<Chain> maximal_downward_chains(const FixedPointData& data) {
    check_structure(data);
    std::vector<Chain> out;
    for (const auto& e : data.edges) {
        if (e.weight <= 1) continue;
        auto r = extend_chain(data, e);
        if (auto* missing = std::get_if<std::string>(&r))
            throw IncompleteDataError("no edge continues the chain below " + *missing);
        out.push_back(std::get<Chain>(r));
    }
    return out;
}

namespace {

// Fano data whose minimum is a fixed fourfold; records failing hypotheses.
bool fourfold_min_hypotheses(const FixedPointData& data, Report& r, bool need_point_max, bool need_big_max) {
    bool ok = true;
    if (!data.fano) {
        r.fail("hypothesis.fano", "data is not flagged fano");
        ok = false;
    }
    std::pair<std::string, std::string> ext;
    try {
        ext = extremal(data);
    } catch (const InconsistentDataError& e) {
        r.fail("hypothesis.extrema", e.what());
        return false;
    }
    if (data.half_dim != 3 || data.at(ext.first).kind != ComponentKind::fourfold) {
        r.fail("hypothesis.fourfold-minimum", "minimum is not a fixed fourfold", {ext.first});
        ok = false;
    }
    if (need_point_max && !data.at(ext.second).is_point()) {
        r.fail("hypothesis.point-maximum", "maximum is not an isolated point", {ext.second});
        ok = false;
    }
    if (need_big_max && data.at(ext.second).is_point()) {
        r.fail("hypothesis.maximum-dimension", "maximum is an isolated point", {ext.second});
        ok = false;
    }
    return ok;
}

std::string describe(const Chain& c) {
    std::string s;
    for (const auto& id : c.components) s += (s.empty() ? "" : ">") + id;
    return s;
}

}  // namespace

Report chainres_check(const FixedPointData& data) {
    check_structure(data);
    Report r;
    if (!fourfold_min_hypotheses(data, r, false, false)) return r;

    std::set<std::string> wide;
    for (const auto& c : data.components)
        if (!all_moduli(c, 1, 2)) wide.insert(c.id);
    record(r, "weight-modulus", {wide.begin(), wide.end()}, "every weight has modulus at most 2",
           "weight of modulus above 2");

    std::vector<std::string> bad, skipped;
    for (const auto& e : data.edges) {
        if (e.weight <= 1) continue;
        auto res = extend_chain(data, e);
        if (auto* missing = std::get_if<std::string>(&res)) {
            std::string name = edge_name(e.bottom, e.top) + " stops at " + *missing;
            (wide.count(*missing) ? skipped : bad).push_back(name);
            continue;
        }
        const Chain& ch = std::get<Chain>(res);
        if (std::any_of(ch.components.begin(), ch.components.end(), [&](const std::string& id) { return wide.count(id) > 0; })) {
            skipped.push_back(describe(ch));
            continue;
        }
        const auto& p1 = data.at(ch.components[0]);
        const auto& p2 = data.at(ch.components[1]);
        bool ok = ch.components.size() == 2 && ch.weights[0] == 2 && p1.is_point() && p2.is_point() &&
                  sorted(p2.weights) == std::vector<int>{-1, -1, 2} && p2.H == 0 && p1.H >= 2;
        if (!ok) bad.push_back(describe(ch));
    }
    if (!bad.empty())
        r.fail("chain-shape", "chain is not (p1, p2) with weight 2, p2 = {-1,-1,2} at H=0 and H(p1) >= 2", bad);
    else if (!skipped.empty())
        r.inconclusive("chain-shape", "chains through components with wide weights are not analysed", skipped);
    else
        r.pass("chain-shape", "every chain has length 2 and ends at {-1,-1,2} on level 0");
    return r;
}

TypeCounts type_abc_classify(const FixedPointData& data) {
    check_structure(data);
    TypeCounts out;
    Report& r = out.report;
    if (!fourfold_min_hypotheses(data, r, true, false)) return out;
    auto [min_id, max_id] = extremal(data);
    const auto& mx = data.at(max_id);
    out.max_weights = sorted(mx.weights);

    const std::vector<int> A{-2, -1, 1}, B{-1, -1, 2}, C{-1, -1, 1};
    std::vector<std::string> unknown, off_level;
    int points = 0;
    for (const auto* c : sorted_by_level(data)) {
        if (c->is_point()) ++points;
        if (c->id == min_id || c->id == max_id) continue;
        if (c->is_surface()) {
            if (c->H != 0 || sorted(c->weights) != std::vector<int>{-1, 1}) off_level.push_back(c->id);
            continue;
        }
        if (!c->is_point()) continue;
        auto w = sorted(c->weights);
        if (w == A)
            ++out.n_a;
        else if (w == B)
            ++out.n_b;
        else if (w == C)
            ++out.n_c;
        else
            unknown.push_back(c->id);
    }
    out.b2 = points;

    bool type1 = out.max_weights == std::vector<int>{-1, -1, -1};
    bool type2 = out.max_weights == std::vector<int>{-2, -1, -1};
    if (type1 || type2)
        r.pass("maximum-weights");
    else
        r.fail("maximum-weights", "maximum must carry {-1,-1,-1} or {-1,-1,-2}", {max_id});
    record(r, "point-types", unknown, "every non-extremal point has type A, B or C", "weights match none of A, B, C");
    if (type1 || type2) {
        int want_b = out.n_a + (type2 ? 1 : 0);
        std::string detail = "n_A=" + std::to_string(out.n_a) + ", n_B=" + std::to_string(out.n_b);
        if (out.n_b == want_b)
            r.pass("type-count-relation", detail);
        else
            r.fail("type-count-relation", detail + ", expected n_B=" + std::to_string(want_b));
    } else {
        r.inconclusive("type-count-relation", "maximum type not admissible");
    }
    record(r, "surfaces-at-level-zero", off_level, "fixed surfaces sit on level 0 with weights {-1,1}",
           "fixed surface off level 0 or with weights other than {-1,1}");
    const auto& mn = data.at(min_id);
    if (mn.b2) {
        if (*mn.b2 == out.b2)
            r.pass("minimum-b2", "b2 = " + std::to_string(out.b2));
        else
            r.fail("minimum-b2", "b2 of the minimum is " + std::to_string(*mn.b2) + ", isolated points " + std::to_string(out.b2),
                   {min_id});
    }
    return out;
}

FixedPointData synthetic_04_data(const std::vector<int>& max_weights, int n_a, int n_b, int n_c, int level0_spheres) {
    auto w = sorted(max_weights);
    bool type2 = w == std::vector<int>{-2, -1, -1};
    if (!type2 && w != std::vector<int>{-1, -1, -1}) throw PreconditionError("unsupported maximum weights");
    FixedPointData d;
    d.half_dim = 3;
    d.fano = d.relative_fano = true;

    FixedComponent mn;
    mn.id = "min";
    mn.kind = ComponentKind::fourfold;
    mn.H = -1;
    mn.weights = {1};
    mn.b2 = n_a + n_b + n_c + 1;
    d.components.push_back(mn);
    auto point = [&](std::string id, Rational H, std::vector<int> ws) {
        FixedComponent p;
        p.id = std::move(id);
        p.H = H;
        p.weights = std::move(ws);
        d.components.push_back(p);
    };
    point("max", type2 ? 4 : 3, type2 ? std::vector<int>{-1, -1, -2} : std::vector<int>{-1, -1, -1});
    for (int i = 0; i < n_a; ++i) point("a" + std::to_string(i), 2, {1, -1, -2});
    for (int i = 0; i < n_b; ++i) point("b" + std::to_string(i), 0, {2, -1, -1});
    for (int i = 0; i < n_c; ++i) point("c" + std::to_string(i), 1, {1, -1, -1});
    for (int i = 0; i < level0_spheres; ++i) {
        FixedComponent s;
        s.id = "s" + std::to_string(i);
        s.kind = ComponentKind::surface;
        s.H = 0;
        s.weights = {-1, 1};
        s.normal_degrees = {0, 0};
        d.components.push_back(s);
    }
    for (int i = 0; i < std::min(n_a, n_b); ++i) d.edges.push_back({"b" + std::to_string(i), "a" + std::to_string(i), 2, {}});
    if (type2 && n_b > n_a) d.edges.push_back({"b" + std::to_string(n_a), "max", 2, {}});
    return d;
}

Table04 enumerate_04() {
    Table04 t;
    const std::vector<std::vector<int>> types{{-1, -1, -1}, {-1, -1, -2}};
    for (const auto& mw : types) {
        bool type2 = mw.back() == -2;
        for (int n_a = 0;; ++n_a) {
            int n_b = n_a + (type2 ? 1 : 0);
            bool any = false;
            for (int n_c = 0;; ++n_c) {
                Rational vol = reduced_volume(synthetic_04_data(mw, n_a, n_b, n_c), 0);
                if (vol <= 0) break;  // volume falls by 1 per type-C point
                any = true;
                t.rows.push_back({mw, n_a, n_b, n_c, vol, n_a + n_b + n_c + 1});
            }
            if (!any) break;  // and by 2 per type-A point
        }
    }
    int max_total = 0, max_b2 = 0;
    for (const auto& row : t.rows) {
        max_total = std::max(max_total, row.total());
        max_b2 = std::max(max_b2, row.b2);
    }
    if (max_total == 8)
        t.report.pass("total-bound", "largest n_A+n_B+n_C is 8");
    else
        t.report.fail("total-bound", "largest n_A+n_B+n_C is " + std::to_string(max_total));
    if (max_b2 <= 9)
        t.report.pass("b2-bound", "largest b2 is " + std::to_string(max_b2));
    else
        t.report.fail("b2-bound", "largest b2 is " + std::to_string(max_b2));
    return t;
}

Report semifree_check(const FixedPointData& data) {
    check_structure(data);
    Report r;
    if (!fourfold_min_hypotheses(data, r, false, true)) return r;
    std::vector<std::string> wide, level0;
    for (const auto* c : sorted_by_level(data)) {
        if (!all_moduli(*c, 1, 1)) wide.push_back(c->id);
        if (c->H == 0 && (!c->is_surface() || sorted(c->weights) != std::vector<int>{-1, 1})) level0.push_back(c->id);
    }
    record(r, "semifree", wide, "every weight is +1 or -1", "weight of modulus above 1");
    record(r, "level-zero-surfaces", level0, "level 0 holds only surfaces with weights {-1,1}",
           "level 0 component other than a surface with weights {-1,1}");
    return r;
}

long c1_of_surface(const FixedComponent& s) {
    if (!s.is_surface() || s.normal_degrees.size() != 2)
        throw PreconditionError("c1 of a surface needs two normal degrees: " + s.id);
    return 2 - 2L * s.genus + s.normal_degrees[0] + s.normal_degrees[1];
}

Rational isotropy_degree_sum(const GradientEdge& e) {
    FixedPointData inner;
    inner.half_dim = 2;
    if (e.interior) {
        int i = 0;
        for (const auto& [a, b] : *e.interior) {
            if (a == 0 || b == 0) throw StructuralError("zero weight inside isotropy 4-manifold of " + edge_name(e.bottom, e.top));
            FixedComponent p;
            p.id = "p" + std::to_string(i++);
            p.weights = {a, b};
            inner.components.push_back(p);
        }
    }
    return abbv_sum_4d(inner);
}

namespace {

// Index of a weight equal to `want` at surface s, avoiding `taken`.
std::optional<size_t> slot_of(const FixedComponent& s, int want, std::optional<size_t> taken) {
    for (size_t i = 0; i < s.weights.size(); ++i)
        if (s.weights[i] == want && (!taken || *taken != i)) return i;
    return std::nullopt;
}

// Weight that surface `at` carries towards `other` along edge e.
int weight_towards(const GradientEdge& e, const std::string& at) { return e.bottom == at ? e.weight : -e.weight; }

struct Slots {
    std::vector<std::optional<size_t>> prev, next;
};

// For a cyclic (closed) or linear sequence of surfaces, pick which normal line
// faces each neighbour. Returns nullopt when a slot cannot be determined.
std::optional<Slots> assign_slots(const FixedPointData& data, const std::vector<std::string>& seq, bool closed) {
    const size_t n = seq.size();
    Slots s{std::vector<std::optional<size_t>>(n), std::vector<std::optional<size_t>>(n)};
    size_t steps = closed ? n : n - 1;
    for (size_t i = 0; i < steps; ++i) {
        size_t j = (i + 1) % n;
        const auto* e = find_edge(data, seq[i], seq[j]);
        if (!e) continue;
        s.next[i] = slot_of(data.at(seq[i]), weight_towards(*e, seq[i]), s.prev[i]);
        s.prev[j] = slot_of(data.at(seq[j]), weight_towards(*e, seq[j]), s.next[j]);
        if (!s.next[i] || !s.prev[j]) return std::nullopt;
    }
    for (size_t i = 0; i < n; ++i) {
        const auto& c = data.at(seq[i]);
        if (s.prev[i] && !s.next[i]) s.next[i] = 1 - *s.prev[i];
        if (s.next[i] && !s.prev[i]) s.prev[i] = 1 - *s.next[i];
        if (!s.prev[i] && !s.next[i]) {
            if (c.normal_degrees[0] != c.normal_degrees[1] && c.weights[0] != c.weights[1]) return std::nullopt;
            s.prev[i] = 0;
            s.next[i] = 1;
        }
        if (*s.prev[i] == *s.next[i]) return std::nullopt;
    }
    return s;
}

std::optional<std::vector<std::string>> closed_cycle(const LabelledGraph& gg) {
    for (const auto& comp : gg.components()) {
        if (comp.size() < 2) continue;
        bool all2 = std::all_of(comp.begin(), comp.end(), [&](const std::string& id) { return gg.degree(id) == 2; });
        if (!all2) continue;
        std::vector<std::string> seq{comp.front()};
        std::string prev, cur = comp.front();
        while (true) {
            auto nb = gg.neighbours(cur);
            std::string next = nb[0] != prev ? nb[0] : nb[1];
            if (next == seq.front()) break;
            seq.push_back(next);
            prev = cur;
            cur = next;
        }
        return seq;
    }
    return std::nullopt;
}

}  // namespace

CycleInequality cycle_inequality(const FixedPointData& data, const std::optional<std::vector<std::string>>& cycle) {
    CycleInequality out;
    Report& r = out.report;
    SurfaceGraph sg = surface_graph(data);
    const auto& mn = data.at(sg.graph.v_min);
    if (mn.genus < 1) throw PreconditionError("cycle inequality needs a positive-genus minimum");
    const int g = mn.genus;

    std::vector<std::string> seq;
    if (cycle) {
        seq = *cycle;
        for (const auto& id : seq)
            if (!data.at(id).is_surface() || data.at(id).weights.size() != 2)
                throw PreconditionError("cycle entry is not a 6-dim fixed surface: " + id);
    } else if (auto found = closed_cycle(genus_part(sg.graph, g))) {
        seq = *found;
    } else {
        r.inconclusive("cycle-closure", "genus-" + std::to_string(g) + " surfaces form an open chain; no closure data");
        return out;
    }
    if (seq.empty()) throw PreconditionError("empty cycle");

    auto slots = assign_slots(data, seq, true);
    if (!slots) {
        r.inconclusive("cycle-closure", "cannot tell which normal line faces which neighbour");
        return out;
    }

    const size_t n = seq.size();
    std::vector<std::string> iso_bad, iso_mismatch, unit_bad;
    for (size_t i = 0; i < n; ++i) {
        size_t j = (i + 1) % n;
        const auto& a = data.at(seq[i]);
        const auto& b = data.at(seq[j]);
        long step = a.normal_degrees[*slots->next[i]] + b.normal_degrees[*slots->prev[j]];
        std::string name = seq[i] + "~" + seq[j];
        if (const auto* e = find_edge(data, seq[i], seq[j])) {
            if (e->interior && isotropy_degree_sum(*e) != step) iso_mismatch.push_back(name);
            if (step > 0) iso_bad.push_back(name);
        } else if (step > 0) {
            unit_bad.push_back(name);
        }
    }
    record(r, "isotropy-step", iso_bad, "n_bot + n_top <= 0 along every isotropy 4-manifold",
           "positive degree sum along an isotropy 4-manifold");
    record(r, "isotropy-localisation", iso_mismatch, "degrees agree with the interior fixed points",
           "degree sum differs from the sum over interior fixed points");
    record(r, "unit-step", unit_bad, "c1(L1) + c1(L2) <= 0 across weight-1 steps", "positive degree sum across a weight-1 step");

    const FixedComponent* best = nullptr;
    long best_c1 = 0;
    for (const auto& id : seq) {
        const auto& c = data.at(id);
        long v = c1_of_surface(c);
        if (!best || v < best_c1 || (v == best_c1 && id < best->id)) {
            best = &c;
            best_c1 = v;
        }
    }
    out.witness = best->id;
    out.witness_c1 = best_c1;
    long bound = 2 - 2L * g;
    if (best_c1 <= bound)
        r.pass("cycle-witness", best->id + " has c1 = " + std::to_string(best_c1) + " <= " + std::to_string(bound));
    else
        r.fail("cycle-witness", "smallest c1 on the cycle is " + std::to_string(best_c1) + " > " + std::to_string(bound),
               {best->id});
    return out;
}

Report nosphere_check(const FixedPointData& data) {
    check_structure(data);
    Report r;
    bool ok = true;
    if (!data.relative_fano) {
        r.fail("hypothesis.relative-fano", "data is not flagged relative fano");
        ok = false;
    }
    const auto& mn = data.at(extremal(data).first);
    if (!mn.is_surface() || mn.genus < 1) {
        r.fail("hypothesis.positive-genus-minimum", "minimum is not a surface of positive genus", {mn.id});
        ok = false;
    }
    if (!ok) return r;
    std::vector<std::string> low;
    for (const auto* c : sorted_by_level(data))
        if (c->is_surface() && c->genus == 0 && c->H < 0) low.push_back(c->id);
    record(r, "sphere-height", low, "every fixed sphere has H >= 0", "fixed sphere below level 0");
    return r;
}

namespace {

Rational weight_product_inverse(const FixedComponent& c) {
    long p = 1;
    for (int w : c.weights) p *= w;
    return make_rational(1, p);
}

struct ChainSums {
    Rational rhs;
    Rational lhs;
};

// Right side of the per-component identity sum(beta + c1) = ..., evaluated on one
// connected component of positive-genus surfaces.
std::optional<ChainSums> chain_sums(const FixedPointData& data, const LabelledGraph& plus,
                                    const std::vector<std::string>& comp) {
    std::vector<std::string> seq;
    bool closed = std::all_of(comp.begin(), comp.end(), [&](const std::string& id) { return plus.degree(id) == 2; });
    if (comp.size() == 1) {
        seq = comp;
        closed = false;
    } else {
        std::string start = comp.front();
        if (!closed)
            for (const auto& id : comp)
                if (plus.degree(id) == 1) {
                    start = id;
                    break;
                }
        std::string prev, cur = start;
        std::set<std::string> seen;
        while (seen.insert(cur).second) {
            seq.push_back(cur);
            auto nb = plus.neighbours(cur);
            std::string next;
            for (const auto& x : nb)
                if (x != prev && !seen.count(x)) next = x;
            if (next.empty()) break;
            prev = cur;
            cur = next;
        }
        if (seq.size() != comp.size()) return std::nullopt;
    }
    auto slots = assign_slots(data, seq, closed);
    if (!slots) return std::nullopt;

    ChainSums s{0, 0};
    const size_t n = seq.size();
    for (size_t i = 0; i < n; ++i) {
        const auto& c = data.at(seq[i]);
        s.lhs += beta(c) + c1_of_surface(c);
        s.rhs += (1 + weight_product_inverse(c)) * (2 - 2 * c.genus);
    }
    size_t steps = closed ? n : n - 1;
    for (size_t i = 0; i < steps; ++i) {
        size_t j = (i + 1) % n;
        const auto& a = data.at(seq[i]);
        const auto& b = data.at(seq[j]);
        int w = a.weights[*slots->next[i]];
        long pair = a.normal_degrees[*slots->next[i]] + b.normal_degrees[*slots->prev[j]];
        s.rhs += pair * (1 - make_rational(1, long(w) * w));
    }
    return s;
}

}  // namespace

SmallHamiltonian small_hamiltonian_suite(const FixedPointData& data) {
    check_structure(data);
    SmallHamiltonian out;
    Report& r = out.report;

    const std::vector<std::string> conclusions{"sphere-height", "isolated-weights", "isolated-local-sum",
                                               "sphere-local-sum", "positive-genus-sum", "chain-sum", "witness"};
    auto give_up = [&](const std::string& why) {
        for (const auto& c : conclusions) r.inconclusive(c, why);
        return out;
    };

    // Hypotheses.
    bool hyp = true;
    if (data.half_dim != 3 || std::any_of(data.components.begin(), data.components.end(),
                                           [](const FixedComponent& c) { return c.kind == ComponentKind::fourfold; })) {
        r.fail("hypothesis.dimension", "needs 6-dim data without fixed fourfolds");
        return give_up("hypotheses not met");
    }
    if (!data.relative_fano) {
        r.fail("hypothesis.relative-fano", "data is not flagged relative fano");
        hyp = false;
    }
    std::string min_id, max_id;
    try {
        std::tie(min_id, max_id) = extremal(data);
    } catch (const InconsistentDataError& e) {
        r.fail("hypothesis.positive-genus-extrema", e.what());
        return give_up("hypotheses not met");
    }
    const auto& mn = data.at(min_id);
    const auto& mx = data.at(max_id);
    if (!mn.is_surface() || !mx.is_surface() || mn.genus < 1 || mn.genus != mx.genus) {
        r.fail("hypothesis.positive-genus-extrema", "extrema must be surfaces of one positive genus", {min_id, max_id});
        return give_up("hypotheses not met");
    }
    const int g = mn.genus;
    out.genus = g;
    {
        std::vector<std::string> outside, sums;
        for (const auto* c : sorted_by_level(data)) {
            if (c->H < -3 || c->H > 3) outside.push_back(c->id);
            long ws = std::accumulate(c->weights.begin(), c->weights.end(), 0L);
            if (c->H != -ws) sums.push_back(c->id);
        }
        if (!outside.empty()) {
            r.fail("hypothesis.height-range", "H outside [-3,3]", outside);
            hyp = false;
        }
        if (!sums.empty()) {
            r.fail("hypothesis.weight-sum", "H differs from minus the weight sum", sums);
            hyp = false;
        }
    }
    Rational total = abbv_sum_6d(data);
    if (total != 0) {
        r.fail("hypothesis.localisation", "localisation sum is " + to_string(total));
        hyp = false;
    }
    if (!hyp) return give_up("hypotheses not met");
    for (const auto& h : {"hypothesis.relative-fano", "hypothesis.positive-genus-extrema", "hypothesis.height-range",
                          "hypothesis.weight-sum", "hypothesis.localisation"})
        r.pass(h);

    std::vector<const FixedComponent*> points, spheres, plus;
    for (const auto* c : sorted_by_level(data)) {
        if (c->is_point())
            points.push_back(c);
        else if (c->genus == 0)
            spheres.push_back(c);
        else
            plus.push_back(c);
    }

    // Fixed spheres sit on level 0: H >= 0 from the minimum, H <= 0 from the maximum.
    std::vector<std::string> off;
    for (const auto* s : spheres)
        if (s->H != 0) off.push_back(s->id);
    record(r, "sphere-height", off, "every fixed sphere lies on level 0", "fixed sphere off level 0");
    const bool spheres_ok = off.empty();

    std::set<std::string> wide;
    for (const auto* p : points)
        if (!all_moduli(*p, 1, 2)) wide.insert(p->id);
    record(r, "isolated-weights", {wide.begin(), wide.end()}, "isolated weights have modulus 1 or 2",
           "isolated point with a weight of modulus above 2");

    std::vector<std::string> pos_alpha;
    for (const auto* p : points)
        if (!wide.count(p->id) && alpha(*p) > 0) pos_alpha.push_back(p->id);
    if (!pos_alpha.empty())
        r.fail("isolated-local-sum", "positive local sum at an isolated point", pos_alpha);
    else if (!wide.empty())
        r.inconclusive("isolated-local-sum", "points with wide weights are not analysed", {wide.begin(), wide.end()});
    else
        r.pass("isolated-local-sum", "alpha <= 0 at every isolated point");

    std::vector<std::string> bad_sphere, skipped_sphere;
    for (const auto* s : spheres) {
        if (s->H != 0) {
            skipped_sphere.push_back(s->id);
            continue;
        }
        if (sorted(s->weights) != std::vector<int>{-1, 1} || beta(*s) != -c1_of_surface(*s) || beta(*s) > 0)
            bad_sphere.push_back(s->id);
    }
    if (!bad_sphere.empty())
        r.fail("sphere-local-sum", "sphere on level 0 without weights {-1,1} or with positive beta", bad_sphere);
    else if (!skipped_sphere.empty())
        r.inconclusive("sphere-local-sum", "spheres off level 0 are not analysed", skipped_sphere);
    else
        r.pass("sphere-local-sum", "beta = -c1 <= 0 on every fixed sphere");

    const bool local_ok = spheres_ok && wide.empty() && pos_alpha.empty() && bad_sphere.empty();
    Rational beta_plus = 0;
    for (const auto* s : plus) beta_plus += beta(*s);
    if (!local_ok)
        r.inconclusive("positive-genus-sum", "depends on the isolated-point and sphere checks");
    else if (beta_plus >= 0)
        r.pass("positive-genus-sum", "sum of beta over positive genus is " + to_string(beta_plus));
    else
        r.fail("positive-genus-sum", "sum of beta over positive genus is " + to_string(beta_plus));

    // Per connected component of positive-genus surfaces.
    bool chains_ok = true;
    {
        SurfaceGraph sg = surface_graph(data);
        LabelledGraph pg = positive_genus_part(sg.graph);
        std::vector<std::string> positive, undetermined;
        for (const auto& comp : pg.components()) {
            auto sums = chain_sums(data, pg, comp);
            if (!sums || sums->lhs != sums->rhs) {
                undetermined.push_back(comp.front());
                continue;
            }
            if (sums->rhs > 0) positive.push_back(comp.front());
        }
        if (!positive.empty()) {
            r.fail("chain-sum", "positive chain sum", positive);
            chains_ok = false;
        } else if (!undetermined.empty() || !sg.report.passed()) {
            r.inconclusive("chain-sum", "surface graph inconsistent or normal lines undetermined", undetermined);
            chains_ok = false;
        } else {
            r.pass("chain-sum", "sum of beta + c1 is non-positive on every component");
        }
    }

    if (!local_ok || !chains_ok) {
        r.inconclusive("witness", "depends on the local and chain checks");
        return out;
    }

    bool reflective = std::any_of(plus.begin(), plus.end(), [](const FixedComponent* s) {
        return s->fibre_intersection && *s->fibre_intersection == 2;
    });
    if (reflective) {
        std::vector<std::string> bad;
        if (sorted(mn.weights) != std::vector<int>{1, 1}) bad.push_back(mn.id);
        if (sorted(mx.weights) != std::vector<int>{-1, -1}) bad.push_back(mx.id);
        const std::vector<std::vector<int>> allowed{{-1, 1}, {-1, 2}, {-2, 1}};
        Rational claim = 0;
        for (const auto* s : plus) {
            if (s->id != mn.id && s->id != mx.id &&
                std::find(allowed.begin(), allowed.end(), sorted(s->weights)) == allowed.end())
                bad.push_back(s->id);
            claim += (1 + weight_product_inverse(*s)) * (2 - 2 * s->genus);
        }
        if (claim > 4 * (2 - 2 * g)) bad.push_back("bound " + to_string(claim));
        record(r, "reflective-bound", bad, "reflective case: sum over positive genus <= 4(2-2g)",
               "reflective case bound fails");
    } else {
        Rational fibre = 0;
        std::vector<std::string> bad;
        for (const auto* s : plus) {
            fibre += weight_product_inverse(*s);
            if (s->genus != g) bad.push_back(s->id);
        }
        if (fibre != 0) bad.push_back("fibre sum " + to_string(fibre));
        record(r, "fibre-localisation", bad, "positive-genus surfaces mirror the fibre fixed points",
               "positive-genus surfaces do not mirror a fibre");
    }

    const FixedComponent* best = nullptr;
    long best_c1 = 0;
    for (const auto* s : plus) {
        long v = c1_of_surface(*s);
        if (!best || v < best_c1) {
            best = s;
            best_c1 = v;
        }
    }
    out.witness = best->id;
    out.witness_c1 = best_c1;
    long bound = 2 - 2L * g;
    if (best_c1 <= bound)
        r.pass("witness", best->id + " has genus " + std::to_string(best->genus) + " and c1 = " + std::to_string(best_c1));
    else
        r.fail("witness", "smallest c1 over positive genus is " + std::to_string(best_c1) + " > " + std::to_string(bound),
               {best->id});
    return out;
}

Report sphere_area_vs_fibre(const FixedPointData& data, const LatticePolytope& fibre, const CircleDirection& fibre_xi) {
    check_structure(data);
    PiecewisePolynomial dh = dh_function_toric(fibre, fibre_xi);
    Report r;
    std::vector<std::string> bad;
    for (const auto* c : sorted_by_level(data)) {
        if (!c->is_surface() || c->genus != 0) continue;
        if (!c->area) throw PreconditionError("fixed sphere without area: " + c->id);
        if (c->H < dh.breakpoints.front() || c->H > dh.breakpoints.back())
            throw PreconditionError("sphere " + c->id + " lies outside the fibre Hamiltonian range");
        Rational slice = dh(c->H);
        if (*c->area > slice || (*c->area == slice) != c->fibre_class) bad.push_back(c->id);
    }
    record(r, "sphere-area", bad, "every fixed sphere is smaller than the fibre, equal only in the fibre class",
           "sphere area exceeds the fibre or equality without the fibre class");
    return r;
}

}  // namespace hamfix
