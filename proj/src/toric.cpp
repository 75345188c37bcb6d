#include "hamfix/toric.hpp"

#include "hamfix/localization.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace hamfix {

long dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw PreconditionError("dimension mismatch");
    long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IntVec primitive(const IntVec& v) {
    long g = 0;
    for (long x : v) g = std::gcd(g, std::abs(x));
    if (g == 0) throw PreconditionError("zero vector has no primitive direction");
    IntVec out = v;
    for (long& x : out) x /= g;
    return out;
}

namespace {

IntVec sub(const IntVec& a, const IntVec& b) {
    IntVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

long gcd_of(const IntVec& v) {
    long g = 0;
    for (long x : v) g = std::gcd(g, std::abs(x));
    return g;
}

long cross2(const IntVec& o, const IntVec& a, const IntVec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

IntVec cross3(const IntVec& a, const IntVec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

long det3(const IntVec& a, const IntVec& b, const IntVec& c) { return dot(a, cross3(b, c)); }

bool is_zero(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
}

}  // namespace

LatticePolytope LatticePolytope::from_points(int dim, const std::vector<IntVec>& points) {
    if (dim != 2 && dim != 3) throw PreconditionError("polytope dimension must be 2 or 3");
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != dim) throw StructuralError("vertex has wrong number of coordinates");
    std::vector<IntVec> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    LatticePolytope P;
    P.dim_ = dim;
    if (dim == 2) {
        if (pts.size() < 3) throw PreconditionError("degenerate polytope");
        std::vector<IntVec> hull(2 * pts.size());
        size_t k = 0;
        for (const auto& p : pts) {
            while (k >= 2 && cross2(hull[k - 2], hull[k - 1], p) <= 0) --k;
            hull[k++] = p;
        }
        for (size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
            while (k >= t && cross2(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
            hull[k++] = pts[i];
        }
        hull.resize(k - 1);
        if (hull.size() < 3) throw PreconditionError("degenerate polytope");
        P.vertices_ = hull;
        size_t n = hull.size();
        for (size_t i = 0; i < n; ++i) {
            size_t j = (i + 1) % n;
            IntVec diff = sub(hull[j], hull[i]);
            long len = gcd_of(diff);
            IntVec d = primitive(diff);
            P.edges_.push_back({i, j, d, len});
            IntVec u{-d[1], d[0]};
            P.facets_.push_back({u, -dot(u, hull[i]), {i, j}});
        }
        return P;
    }

    // 3-dim: supporting planes through every non-collinear triple.
    std::map<IntVec, long> planes;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            for (size_t k = j + 1; k < pts.size(); ++k) {
                IntVec n = cross3(sub(pts[j], pts[i]), sub(pts[k], pts[i]));
                if (is_zero(n)) continue;
                n = primitive(n);
                bool pos = false, neg = false;
                for (const auto& p : pts) {
                    long s = dot(n, sub(p, pts[i]));
                    pos |= s > 0;
                    neg |= s < 0;
                }
                if (pos && neg) continue;
                if (!pos && !neg) throw PreconditionError("degenerate polytope");
                if (neg)
                    for (long& x : n) x = -x;
                planes.emplace(n, -dot(n, pts[i]));
            }
    if (planes.size() < 4) throw PreconditionError("degenerate polytope");

    std::vector<std::vector<IntVec>> normals_at(pts.size());
    for (const auto& [u, c] : planes)
        for (size_t i = 0; i < pts.size(); ++i)
            if (dot(u, pts[i]) == -c) normals_at[i].push_back(u);
    auto full_rank = [](const std::vector<IntVec>& ns) {
        for (size_t a = 0; a < ns.size(); ++a)
            for (size_t b = a + 1; b < ns.size(); ++b)
                for (size_t c = b + 1; c < ns.size(); ++c)
                    if (det3(ns[a], ns[b], ns[c]) != 0) return true;
        return false;
    };
    for (size_t i = 0; i < pts.size(); ++i)
        if (full_rank(normals_at[i])) P.vertices_.push_back(pts[i]);

    const auto& V = P.vertices_;
    for (const auto& [u, c] : planes) {
        Facet f{u, c, {}};
        for (size_t i = 0; i < V.size(); ++i)
            if (dot(u, V[i]) == -c) f.vertices.push_back(i);
        P.facets_.push_back(f);
    }
    for (size_t a = 0; a < V.size(); ++a)
        for (size_t b = a + 1; b < V.size(); ++b) {
            std::vector<IntVec> common;
            for (const auto& f : P.facets_)
                if (std::count(f.vertices.begin(), f.vertices.end(), a) &&
                    std::count(f.vertices.begin(), f.vertices.end(), b))
                    common.push_back(f.normal);
            bool line = false;
            for (size_t x = 0; x < common.size() && !line; ++x)
                for (size_t y = x + 1; y < common.size() && !line; ++y) line = !is_zero(cross3(common[x], common[y]));
            if (!line) continue;
            IntVec diff = sub(V[b], V[a]);
            P.edges_.push_back({a, b, primitive(diff), gcd_of(diff)});
        }
    return P;
}

std::vector<std::pair<size_t, IntVec>> LatticePolytope::edges_at(size_t v) const {
    std::vector<std::pair<size_t, IntVec>> out;
    for (size_t i = 0; i < edges_.size(); ++i) {
        const auto& e = edges_[i];
        if (e.a == v) out.emplace_back(i, e.direction);
        if (e.b == v) {
            IntVec d = e.direction;
            for (long& x : d) x = -x;
            out.emplace_back(i, d);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

CircleDirection::CircleDirection(IntVec xi) : xi_(std::move(xi)) {
    if (xi_.empty() || gcd_of(xi_) != 1) throw PreconditionError("circle direction must be primitive");
}

CircleDirection CircleDirection::flipped() const {
    IntVec v = xi_;
    for (long& x : v) x = -x;
    return CircleDirection(v);
}

std::string CircleDirection::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < xi_.size(); ++i) s += (i ? "," : "") + std::to_string(xi_[i]);
    return s + ")";
}

bool delzant_check(const LatticePolytope& P) {
    for (size_t v = 0; v < P.vertices().size(); ++v) {
        auto es = P.edges_at(v);
        if (static_cast<int>(es.size()) != P.dim()) return false;
        long det = P.dim() == 2 ? es[0].second[0] * es[1].second[1] - es[0].second[1] * es[1].second[0]
                                : det3(es[0].second, es[1].second, es[2].second);
        if (std::abs(det) != 1) return false;
    }
    return true;
}

bool reflexive_check(const LatticePolytope& P) {
    for (const auto& f : P.facets())
        if (f.offset <= 0) throw PreconditionError("origin is not interior to the polytope");
    return std::all_of(P.facets().begin(), P.facets().end(), [](const Facet& f) { return f.offset == 1; });
}

bool is_generic(const LatticePolytope& P, const CircleDirection& xi) {
    if (static_cast<int>(xi.dim()) != P.dim()) throw PreconditionError("direction and polytope dimensions differ");
    return std::none_of(P.edges().begin(), P.edges().end(),
                        [&](const PolytopeEdge& e) { return dot(xi.xi(), e.direction) == 0; });
}

namespace {

bool reflexive_quiet(const LatticePolytope& P) {
    try {
        return reflexive_check(P);
    } catch (const PreconditionError&) {
        return false;
    }
}

std::string vertex_id(size_t i) { return "v" + std::to_string(i); }
std::string edge_id(size_t i) { return "e" + std::to_string(i); }

}  // namespace

long boundary_selfint_2d(const LatticePolytope& P, size_t edge) {
    if (P.dim() != 2) throw PreconditionError("self-intersection needs a polygon");
    const auto& fs = P.facets();
    size_t n = fs.size();
    if (edge >= n) throw PreconditionError("edge index out of range");
    const IntVec& u = fs[edge].normal;
    const IntVec& prev = fs[(edge + n - 1) % n].normal;
    const IntVec& next = fs[(edge + 1) % n].normal;
    IntVec s{prev[0] + next[0], prev[1] + next[1]};
    long k = u[0] != 0 ? s[0] / u[0] : s[1] / u[1];
    if (s[0] != k * u[0] || s[1] != k * u[1]) throw PreconditionError("normal fan is not smooth at edge");
    return -k;
}

FixedPointData fixed_data_from_polytope(const LatticePolytope& P, const CircleDirection& xi) {
    if (static_cast<int>(xi.dim()) != P.dim()) throw PreconditionError("direction and polytope dimensions differ");
    if (!delzant_check(P)) throw PreconditionError("polytope is not Delzant");
    if (P.dim() == 3 && !is_generic(P, xi))
        throw PreconditionError("unsupported direction " + xi.to_string() + ": fixed locus is not isolated");

    const auto& V = P.vertices();
    const auto& E = P.edges();
    FixedPointData data;
    data.half_dim = P.dim();
    data.relative_fano = data.fano = reflexive_quiet(P);

    std::vector<std::string> owner(V.size());
    for (size_t v = 0; v < V.size(); ++v) owner[v] = vertex_id(v);
    for (size_t i = 0; i < E.size(); ++i) {
        if (dot(xi.xi(), E[i].direction) != 0) continue;
        owner[E[i].a] = owner[E[i].b] = edge_id(i);
        FixedComponent s;
        s.id = edge_id(i);
        s.kind = ComponentKind::surface;
        s.H = dot(xi.xi(), V[E[i].a]);
        for (const auto& [j, d] : P.edges_at(E[i].a))
            if (j != i) s.weights.push_back(static_cast<int>(dot(xi.xi(), d)));
        s.normal_degrees = {static_cast<int>(boundary_selfint_2d(P, i))};
        s.area = Rational(E[i].length);
        data.components.push_back(s);
    }
    for (size_t v = 0; v < V.size(); ++v) {
        if (owner[v] != vertex_id(v)) continue;
        FixedComponent p;
        p.id = vertex_id(v);
        p.H = dot(xi.xi(), V[v]);
        for (const auto& [j, d] : P.edges_at(v)) p.weights.push_back(static_cast<int>(dot(xi.xi(), d)));
        data.components.push_back(p);
    }
    for (const auto& e : E) {
        long w = dot(xi.xi(), e.direction);
        if (w == 0) continue;
        GradientEdge g;
        g.bottom = w > 0 ? owner[e.a] : owner[e.b];
        g.top = w > 0 ? owner[e.b] : owner[e.a];
        g.weight = static_cast<int>(std::abs(w));
        data.edges.push_back(g);
    }
    std::sort(data.components.begin(), data.components.end(),
              [](const FixedComponent& a, const FixedComponent& b) { return a.H != b.H ? a.H < b.H : a.id < b.id; });
    return data;
}

const std::vector<CatalogEntry>& delpezzo_catalog() {
    static const std::vector<CatalogEntry> catalog = [] {
        auto make = [](std::string name, std::vector<IntVec> pts, int b2) {
            auto P = LatticePolytope::from_points(2, pts);
            int degree = 12 - static_cast<int>(P.vertices().size());
            return CatalogEntry{std::move(name), std::move(P), b2, degree};
        };
        return std::vector<CatalogEntry>{
            make("CP2", {{-1, -1}, {2, -1}, {-1, 2}}, 1),
            make("CP1xCP1", {{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}, 2),
            make("Bl1CP2", {{-1, 0}, {0, -1}, {2, -1}, {-1, 2}}, 2),
            make("Bl2CP2", {{-1, 0}, {0, -1}, {1, -1}, {1, 0}, {-1, 2}}, 3),
            make("Bl3CP2", {{-1, 0}, {0, -1}, {1, -1}, {1, 0}, {0, 1}, {-1, 1}}, 4),
        };
    }();
    return catalog;
}

const CatalogEntry& catalog_entry(const std::string& name) {
    for (const auto& e : delpezzo_catalog())
        if (e.name == name) return e;
    throw PreconditionError("unknown catalog polytope '" + name + "'");
}

LabelledGraph karshon_graph(const LatticePolytope& P, const CircleDirection& xi) {
    if (P.dim() != 2) throw PreconditionError("Karshon graphs are built from polygons");
    return graph_from_data(fixed_data_from_polytope(P, xi));
}

namespace {

std::vector<int> sorted(std::vector<int> w) {
    std::sort(w.begin(), w.end());
    return w;
}

// Weights {-1, n} with n >= 2.
bool steep(const FixedComponent& c) {
    auto w = sorted(c.weights);
    return c.is_point() && w.size() == 2 && w[0] == -1 && w[1] >= 2;
}

std::string join(const std::vector<std::string>& xs) {
    std::string out;
    for (const auto& x : xs) out += (out.empty() ? "" : ", ") + x;
    return out;
}

}  // namespace

Report delpezzo_lemma_suite(const LatticePolytope& P, const CircleDirection& xi) {
    if (P.dim() != 2 || !delzant_check(P) || !reflexive_quiet(P))
        throw PreconditionError("lemma suite needs a toric del Pezzo polygon");
    FixedPointData data = fixed_data_from_polytope(P, xi);
    const bool generic = is_generic(P, xi);
    auto [min_id, max_id] = extremal(data);
    const FixedComponent& mn = data.at(min_id);
    const FixedComponent& mx = data.at(max_id);
    const Rational h_min = mn.H;
    const Rational h_max = mx.H;
    auto extreme = [&](const std::string& id) { return id == min_id || id == max_id; };

    Report report;
    auto needs_isolated = [&](const std::string& check) {
        report.inconclusive(check, "hypothesis needs isolated fixed points; " + xi.to_string() + " fixes an edge");
    };

    // Gradient spheres through non-extremal points are boundary divisors.
    if (!generic) {
        needs_isolated("gradient-spheres-are-divisors");
    } else {
        std::vector<std::string> bad;
        for (const auto& c : data.components) {
            if (extreme(c.id)) continue;
            std::vector<int> labels;
            for (const auto& e : data.edges)
                if (e.bottom == c.id || e.top == c.id) labels.push_back(e.weight);
            std::vector<int> moduli;
            for (int w : c.weights) moduli.push_back(std::abs(w));
            if (labels.size() != 2 || sorted(labels) != sorted(moduli)) bad.push_back(c.id);
        }
        if (bad.empty())
            report.pass("gradient-spheres-are-divisors");
        else
            report.fail("gradient-spheres-are-divisors", "weights at a non-extremal point do not match its two divisors", bad);
    }

    // Multiplicity of weight 1 at the minimum = number of index-2 points with weight -1; dually at the maximum.
    if (!generic) {
        needs_isolated("unit-weight-multiplicity");
    } else {
        long at_min = std::count(mn.weights.begin(), mn.weights.end(), 1);
        long at_max = std::count(mx.weights.begin(), mx.weights.end(), -1);
        long below = 0, above = 0;
        for (const auto& c : data.components) {
            if (extreme(c.id) || index(c) != 1) continue;
            below += std::count(c.weights.begin(), c.weights.end(), -1) > 0;
            above += std::count(c.weights.begin(), c.weights.end(), 1) > 0;
        }
        if (at_min == below && at_max == above)
            report.pass("unit-weight-multiplicity",
                        "min " + std::to_string(at_min) + ", max " + std::to_string(at_max));
        else
            report.fail("unit-weight-multiplicity",
                        "min has " + std::to_string(at_min) + " unit weights vs " + std::to_string(below) +
                            " points; max has " + std::to_string(at_max) + " vs " + std::to_string(above),
                        {min_id, max_id});
    }

    // Two points with weights {-1,n}, n > 1, on one level leave only the minimum below them.
    if (!generic) {
        needs_isolated("paired-steep-points");
    } else {
        std::vector<std::string> bad;
        for (size_t i = 0; i < data.components.size(); ++i)
            for (size_t j = i + 1; j < data.components.size(); ++j) {
                const auto& p = data.components[i];
                const auto& q = data.components[j];
                if (!steep(p) || !steep(q) || p.H != q.H || extreme(p.id) || extreme(q.id)) continue;
                for (const auto& c : data.components)
                    if (c.id != min_id && c.H < p.H) bad.push_back(c.id);
            }
        if (bad.empty())
            report.pass("paired-steep-points");
        else
            report.fail("paired-steep-points", "fixed points other than the minimum below a steep pair", bad);
    }

    // Every weight-1 gradient sphere meets an extremal fixed point.
    if (!generic) {
        needs_isolated("unit-spheres-reach-extremum");
    } else {
        std::vector<std::string> bad;
        for (const auto& e : data.edges)
            if (e.weight == 1 && !extreme(e.bottom) && !extreme(e.top)) bad.push_back(e.bottom + "->" + e.top);
        if (bad.empty())
            report.pass("unit-spheres-reach-extremum");
        else
            report.fail("unit-spheres-reach-extremum", "weight-1 sphere avoids both extrema", bad);
    }

    // Boundary divisors have area at most 3.
    {
        std::vector<std::string> bad;
        for (const auto& e : data.edges)
            if (gradient_sphere_area(e, data) > 3) bad.push_back(e.bottom + "->" + e.top);
        for (const auto& c : data.components)
            if (c.area && *c.area > 3) bad.push_back(c.id);
        if (bad.empty())
            report.pass("divisor-area");
        else
            report.fail("divisor-area", "boundary divisor with area above 3", bad);
    }

    // A point with weights {-1,n}, n >= 2: close to the minimum, nothing in between,
    // and the minimum carries {1,m} with m at least the gap.
    if (!generic) {
        needs_isolated("steep-point");
    } else {
        std::vector<std::string> bad;
        auto wmin = sorted(mn.weights);
        for (const auto& c : data.components) {
            if (!steep(c) || extreme(c.id)) continue;
            Rational gap = c.H - h_min;
            bool ok = gap <= 3 && wmin.size() == 2 && wmin[0] == 1 && Rational(wmin[1]) >= gap;
            for (const auto& o : data.components)
                if (o.H > h_min && o.H < c.H) ok = false;
            if (!ok) bad.push_back(c.id);
        }
        if (bad.empty())
            report.pass("steep-point");
        else
            report.fail("steep-point", "steep point violates the gap or minimum-weight bound", bad);
    }

    // A point with both weights of modulus 1 forces small divisor weights and H within [-3,3].
    {
        std::vector<std::string> triggers;
        for (const auto& c : data.components)
            if (c.is_point() && std::all_of(c.weights.begin(), c.weights.end(), [](int w) { return std::abs(w) == 1; }))
                triggers.push_back(c.id);
        if (triggers.empty()) {
            report.pass("unit-point-range", "no point with weights of modulus 1");
        } else {
            std::vector<std::string> bad;
            for (const auto& e : P.edges()) {
                long w = std::abs(dot(xi.xi(), e.direction));
                if (w > 2) bad.push_back("divisor weight " + std::to_string(w));
            }
            if (h_min < -3 || h_max > 3) bad.push_back("H range [" + to_string(h_min) + "," + to_string(h_max) + "]");
            if (bad.empty())
                report.pass("unit-point-range", "triggered by " + join(triggers));
            else
                report.fail("unit-point-range", "triggered by " + join(triggers), bad);
        }
    }
    return report;
}

std::vector<CircleDirection> primitive_directions(int dim, int bound) {
    if (dim < 1 || bound < 1) throw PreconditionError("need dim >= 1 and bound >= 1");
    std::vector<CircleDirection> out;
    IntVec v(static_cast<size_t>(dim), -bound);
    while (true) {
        auto first = std::find_if(v.begin(), v.end(), [](long x) { return x != 0; });
        if (first != v.end() && *first > 0 && gcd_of(v) == 1) out.emplace_back(v);
        size_t i = v.size();
        while (i > 0 && v[i - 1] == bound) v[--i] = -bound;
        if (i == 0) break;
        ++v[i - 1];
    }
    return out;
}

std::vector<ScanItem> scan_directions(const LatticePolytope& P, int bound) {
    std::vector<ScanItem> out;
    bool reflexive = reflexive_quiet(P);
    for (const auto& xi : primitive_directions(P.dim(), bound)) {
        if (P.dim() == 3 && !is_generic(P, xi)) continue;
        FixedPointData data = fixed_data_from_polytope(P, xi);
        Report report = validate(data);
        Rational sum = P.dim() == 2 ? abbv_sum_4d(data) : abbv_sum_6d(data);
        if (sum == 0)
            report.pass("localisation-sum");
        else
            report.fail("localisation-sum", "sum is " + to_string(sum));
        if (reflexive) {
            try {
                auto norm = weight_sum_normalize(data);
                if (norm.constant == 0)
                    report.pass("weight-sum");
                else
                    report.fail("weight-sum", "normalizing constant " + to_string(norm.constant));
            } catch (const WeightSumMismatch& e) {
                report.fail("weight-sum", e.what());
            }
            if (P.dim() == 2) report.append(delpezzo_lemma_suite(P, xi));
        }
        out.push_back({xi, std::move(data), std::move(report)});
    }
    return out;
}

}  // namespace hamfix
