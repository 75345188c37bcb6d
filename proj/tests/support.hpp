#pragma once

#include "hamfix/dh.hpp"
#include "hamfix/fano6.hpp"
#include "hamfix/fixed_data.hpp"
#include "hamfix/localization.hpp"
#include "hamfix/rational.hpp"
#include "hamfix/toric.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

// Test-only oracles. They share no code with the library beyond value types.
namespace support {

using hamfix::IntVec;
using hamfix::Rational;

using RPoint = std::vector<Rational>;

inline Rational rdot(const IntVec& a, const RPoint& x) {
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * x[i];
    return s;
}

// Points where the segments between all vertex pairs meet {<xi,x> = t}.
inline std::vector<RPoint> slice_points(const std::vector<IntVec>& verts, const IntVec& xi, const Rational& t) {
    std::vector<RPoint> out;
    for (size_t i = 0; i < verts.size(); ++i) {
        for (size_t j = i; j < verts.size(); ++j) {
            RPoint a(verts[i].begin(), verts[i].end()), b(verts[j].begin(), verts[j].end());
            Rational ha = rdot(xi, a), hb = rdot(xi, b);
            if (ha == hb) {
                if (ha == t) {
                    out.push_back(a);
                    out.push_back(b);
                }
                continue;
            }
            if ((ha - t) * (hb - t) > 0) continue;
            Rational s = (t - ha) / (hb - ha);
            RPoint p(a.size());
            for (size_t k = 0; k < a.size(); ++k) p[k] = a[k] + s * (b[k] - a[k]);
            out.push_back(p);
        }
    }
    return out;
}

// Lattice length of a polygon slice: the line direction (-xi1, xi0) is primitive.
inline Rational slice_length(const std::vector<IntVec>& verts, const IntVec& xi, const Rational& t) {
    auto pts = slice_points(verts, xi, t);
    if (pts.empty()) return 0;
    IntVec d{-xi[1], xi[0]};
    Rational lo = rdot(d, pts[0]), hi = lo;
    for (const auto& p : pts) {
        lo = std::min(lo, rdot(d, p));
        hi = std::max(hi, rdot(d, p));
    }
    return (hi - lo) / Rational(d[0] * d[0] + d[1] * d[1]);
}

// Area of the convex hull of planar rational points (shoelace over a monotone chain).
inline Rational hull_area(std::vector<std::pair<Rational, Rational>> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return 0;
    auto cross = [](const auto& o, const auto& a, const auto& b) -> Rational {
        return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
    };
    std::vector<std::pair<Rational, Rational>> h;
    for (int pass = 0; pass < 2; ++pass) {
        size_t base = h.size();
        for (const auto& p : pts) {
            while (h.size() >= base + 2 && cross(h[h.size() - 2], h.back(), p) <= 0) h.pop_back();
            h.push_back(p);
        }
        h.pop_back();
        std::reverse(pts.begin(), pts.end());
    }
    Rational a = 0;
    for (size_t i = 0; i < h.size(); ++i) {
        const auto& p = h[i];
        const auto& q = h[(i + 1) % h.size()];
        a += p.first * q.second - q.first * p.second;
    }
    return abs(a) / 2;
}

// Lattice area of a slice of a 3-dim polytope: project along a coordinate k with
// xi_k != 0; the quotient lattice covolume turns the projected area into A/|xi_k|.
inline Rational slice_area(const std::vector<IntVec>& verts, const IntVec& xi, const Rational& t) {
    size_t k = 0;
    while (xi[k] == 0) ++k;
    std::vector<std::pair<Rational, Rational>> proj;
    for (const auto& p : slice_points(verts, xi, t)) {
        std::vector<Rational> rest;
        for (size_t i = 0; i < 3; ++i)
            if (i != k) rest.push_back(p[i]);
        proj.emplace_back(rest[0], rest[1]);
    }
    return hull_area(proj) / Rational(std::abs(xi[k]));
}

// Sigma_g x (4-dim fibre data): every fibre point becomes a genus-g surface with
// the same id, weights and H and trivial normal bundles; fibre edges of weight
// >= 2 become isotropy edges with no interior fixed points.
inline hamfix::FixedPointData surface_product(const hamfix::FixedPointData& fibre, int genus) {
    hamfix::FixedPointData d;
    d.half_dim = 3;
    d.relative_fano = true;
    for (const auto& p : fibre.components) {
        hamfix::FixedComponent s;
        s.id = p.id;
        s.kind = hamfix::ComponentKind::surface;
        s.H = p.H;
        s.weights = p.weights;
        s.genus = genus;
        s.normal_degrees = std::vector<int>(p.weights.size(), 0);
        s.fibre_intersection = 1;
        d.components.push_back(s);
    }
    for (const auto& e : fibre.edges)
        if (e.weight >= 2) d.edges.push_back({e.bottom, e.top, e.weight, std::vector<std::array<int, 2>>{}});
    return d;
}

inline hamfix::FixedComponent point(std::string id, Rational H, std::vector<int> w) {
    hamfix::FixedComponent c;
    c.id = std::move(id);
    c.H = H;
    c.weights = std::move(w);
    return c;
}

inline hamfix::FixedComponent surface(std::string id, Rational H, std::vector<int> w, int genus, std::vector<int> n) {
    hamfix::FixedComponent c;
    c.id = std::move(id);
    c.kind = hamfix::ComponentKind::surface;
    c.H = H;
    c.weights = std::move(w);
    c.genus = genus;
    c.normal_degrees = std::move(n);
    return c;
}

// Sigma_g x S^2 x S^2 with both spheres rotated at speed one: four genus-g surfaces.
inline hamfix::FixedPointData four_surfaces(int genus) {
    hamfix::FixedPointData d;
    d.half_dim = 3;
    d.relative_fano = true;
    d.components = {surface("bottom", -2, {1, 1}, genus, {0, 0}), surface("left", 0, {1, -1}, genus, {0, 0}),
                    surface("right", 0, {-1, 1}, genus, {0, 0}), surface("top", 2, {-1, -1}, genus, {0, 0})};
    return d;
}

// Genus-2 data whose fibre is the hexagon under (1,-1): two inner surfaces meet the fibre twice.
inline hamfix::FixedPointData reflective_genus2() {
    auto s1 = surface("s1", -1, {2, -1}, 2, {0, -1});
    auto s2 = surface("s2", 1, {-2, 1}, 2, {0, -1});
    s1.fibre_intersection = s2.fibre_intersection = 2;
    hamfix::FixedPointData d;
    d.half_dim = 3;
    d.relative_fano = true;
    d.components = {surface("m", -2, {1, 1}, 2, {0, 0}), s1, s2, surface("M", 2, {-1, -1}, 2, {0, 0})};
    d.edges = {{"s1", "s2", 2, std::vector<std::array<int, 2>>{}}};
    return d;
}

inline Rational random_rational(std::mt19937& rng, const Rational& lo, const Rational& hi) {
    std::uniform_int_distribution<long> den(1, 97);
    long q = den(rng);
    std::uniform_int_distribution<long> num(0, q);
    return lo + (hi - lo) * hamfix::make_rational(num(rng), q);
}

}  // namespace support
