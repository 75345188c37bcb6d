#include "hamfix/fixed_data.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hamfix {

const char* to_string(ComponentKind k) {
    switch (k) {
        case ComponentKind::point: return "point";
        case ComponentKind::surface: return "surface";
        case ComponentKind::fourfold: return "fourfold";
    }
    return "?";
}

ComponentKind parse_kind(std::string_view s) {
    if (s == "point") return ComponentKind::point;
    if (s == "surface") return ComponentKind::surface;
    if (s == "fourfold") return ComponentKind::fourfold;
    throw StructuralError("unknown component kind '" + std::string(s) + "'");
}

const FixedComponent* FixedPointData::find(std::string_view id) const {
    for (const auto& c : components)
        if (c.id == id) return &c;
    return nullptr;
}

const FixedComponent& FixedPointData::at(std::string_view id) const {
    if (const auto* c = find(id)) return *c;
    throw StructuralError("unresolved component id '" + std::string(id) + "'");
}

int index(const FixedComponent& c) {
    return static_cast<int>(std::count_if(c.weights.begin(), c.weights.end(), [](int w) { return w < 0; }));
}

namespace {

int expected_arity(int half_dim, ComponentKind k) {
    switch (k) {
        case ComponentKind::point: return half_dim;
        case ComponentKind::surface: return half_dim - 1;
        case ComponentKind::fourfold: return half_dim - 2;
    }
    return -1;
}

}  // namespace

void check_structure(const FixedPointData& data) {
    if (data.half_dim != 2 && data.half_dim != 3)
        throw StructuralError("half_dim must be 2 or 3, got " + std::to_string(data.half_dim));
    if (data.components.empty()) throw StructuralError("no fixed components");

    std::set<std::string> ids;
    for (const auto& c : data.components) {
        if (c.id.empty()) throw StructuralError("empty component id");
        if (!ids.insert(c.id).second) throw StructuralError("duplicate component id '" + c.id + "'");
        int arity = expected_arity(data.half_dim, c.kind);
        if (arity < 1)
            throw StructuralError("component '" + c.id + "': kind " + to_string(c.kind) + " not allowed in dimension " +
                                  std::to_string(2 * data.half_dim));
        if (static_cast<int>(c.weights.size()) != arity)
            throw StructuralError("component '" + c.id + "': expected " + std::to_string(arity) + " weights, got " +
                                  std::to_string(c.weights.size()));
        if (std::find(c.weights.begin(), c.weights.end(), 0) != c.weights.end())
            throw StructuralError("component '" + c.id + "': zero weight");
        if (c.kind == ComponentKind::surface && c.normal_degrees.size() != c.weights.size())
            throw StructuralError("component '" + c.id + "': normal_degrees must parallel weights");
        if (c.kind == ComponentKind::fourfold && !c.normal_degrees.empty() &&
            c.normal_degrees.size() != c.weights.size())
            throw StructuralError("component '" + c.id + "': normal_degrees must parallel weights");
        if (c.kind == ComponentKind::point && !c.normal_degrees.empty())
            throw StructuralError("component '" + c.id + "': a point has no normal degrees");
        if (c.kind != ComponentKind::surface && c.genus != 0)
            throw StructuralError("component '" + c.id + "': genus on a non-surface");
        if (c.genus < 0) throw StructuralError("component '" + c.id + "': negative genus");
        if (c.b2 && (c.kind != ComponentKind::fourfold || *c.b2 < 0))
            throw StructuralError("component '" + c.id + "': b2 only on a fourfold, nonnegative");
        if (c.fibre_intersection &&
            (c.kind != ComponentKind::surface || *c.fibre_intersection < 0 || *c.fibre_intersection > 2))
            throw StructuralError("component '" + c.id + "': fibre_intersection must be 0, 1 or 2 on a surface");
        if (c.area && c.kind != ComponentKind::surface)
            throw StructuralError("component '" + c.id + "': area only on a surface");
    }
    for (const auto& e : data.edges) {
        data.at(e.bottom);
        data.at(e.top);
        if (e.bottom == e.top) throw StructuralError("edge from '" + e.bottom + "' to itself");
        if (e.weight < 1) throw StructuralError("edge weight must be positive");
    }
}

std::vector<const FixedComponent*> sorted_by_level(const FixedPointData& data) {
    std::vector<const FixedComponent*> out;
    for (const auto& c : data.components) out.push_back(&c);
    std::sort(out.begin(), out.end(), [](const FixedComponent* a, const FixedComponent* b) {
        if (a->H != b->H) return a->H < b->H;
        return a->id < b->id;
    });
    return out;
}

Report validate(const FixedPointData& data) {
    check_structure(data);
    Report report;

    if (data.components.size() < 2)
        report.fail("trivial-action", "a nontrivial action has at least two fixed components");

    auto levels = sorted_by_level(data);
    const Rational h_min = levels.front()->H;
    const Rational h_max = levels.back()->H;
    std::vector<std::string> at_min, at_max;
    for (const auto* c : levels) {
        if (c->H == h_min) at_min.push_back(c->id);
        if (c->H == h_max) at_max.push_back(c->id);
    }
    if (at_min.size() > 1) report.fail("unique-minimum", "non-unique minimum at H=" + to_string(h_min), at_min);
    if (at_max.size() > 1) report.fail("unique-maximum", "non-unique maximum at H=" + to_string(h_max), at_max);

    int g = 0;
    for (const auto& c : data.components)
        for (int w : c.weights) g = std::gcd(g, std::abs(w));
    if (g != 1) report.fail("effective", "gcd of all weights is " + std::to_string(g));

    for (const auto& c : data.components)
        if (c.area && *c.area <= 0) report.fail("surface-area", "area must be positive", {c.id});

    for (const auto& e : data.edges) {
        const auto& b = data.at(e.bottom);
        const auto& t = data.at(e.top);
        std::string name = e.bottom + "->" + e.top;
        if (!(b.H < t.H)) report.fail("edge-orientation", "H(bottom) must be below H(top)", {name});
        if (data.half_dim == 3 && b.is_surface() && t.is_surface() && e.weight < 2)
            report.fail("isotropy-edge-weight", "an edge between fixed surfaces has weight at least 2", {name});
    }

    if (data.relative_fano) {
        for (const auto& c : data.components) {
            for (int w : c.weights) {
                if (w < 0 && Rational(-w) > c.H - h_min)
                    report.fail("weight-bound",
                                std::to_string(-w) + " > " + to_string(c.H) + " - (" + to_string(h_min) + ")", {c.id});
                if (w > 0 && Rational(w) > h_max - c.H)
                    report.fail("weight-bound",
                                std::to_string(w) + " > " + to_string(h_max) + " - (" + to_string(c.H) + ")", {c.id});
            }
        }
        if (at_min.size() == 1) {
            const auto& mn = data.at(at_min.front());
            std::vector<int> ws = mn.weights;
            std::sort(ws.begin(), ws.end());
            for (const auto& e : data.edges) {
                if (e.bottom != mn.id) continue;
                std::string name = e.bottom + "->" + e.top;
                if (ws.size() == 1 && e.weight != 1)
                    report.fail("minimum-edge-weight", "edges leaving a codimension-2 minimum have weight 1", {name});
                if (ws.size() == 2 && ws[0] == 1 && e.weight != 1 && e.weight != ws[1])
                    report.fail("minimum-edge-weight",
                                "edges leaving the minimum have weight 1 or " + std::to_string(ws[1]), {name});
            }
        }
    }
    return report;
}

std::pair<std::string, std::string> extremal(const FixedPointData& data) {
    if (data.components.empty()) throw StructuralError("no fixed components");
    auto levels = sorted_by_level(data);
    if (levels.size() > 1 && levels[0]->H == levels[1]->H)
        throw InconsistentDataError("non-unique minimum at H=" + to_string(levels[0]->H));
    size_t n = levels.size();
    if (n > 1 && levels[n - 1]->H == levels[n - 2]->H)
        throw InconsistentDataError("non-unique maximum at H=" + to_string(levels[n - 1]->H));
    return {levels.front()->id, levels.back()->id};
}

FixedPointData reversed(const FixedPointData& data) {
    FixedPointData out = data;
    for (auto& c : out.components) {
        c.H = -c.H;
        for (int& w : c.weights) w = -w;
    }
    for (auto& e : out.edges) {
        std::swap(e.bottom, e.top);
        if (e.interior)
            for (auto& pair : *e.interior) pair = {-pair[0], -pair[1]};
    }
    return out;
}

FixedPointData shifted(const FixedPointData& data, const Rational& c) {
    FixedPointData out = data;
    for (auto& comp : out.components) comp.H += c;
    return out;
}

}  // namespace hamfix
