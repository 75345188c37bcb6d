#include "hamfix/dh.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>

namespace hamfix {

namespace {

size_t piece_index(const PiecewisePolynomial& f, const Rational& t, bool from_left) {
    const auto& b = f.breakpoints;
    // first breakpoint strictly above t (or at/above t when approaching from the left)
    auto it = from_left ? std::lower_bound(b.begin(), b.end(), t) : std::upper_bound(b.begin(), b.end(), t);
    size_t i = static_cast<size_t>(it - b.begin());
    if (i == 0) return 0;
    return std::min(i - 1, f.pieces.size() - 1);
}

}  // namespace

Rational PiecewisePolynomial::operator()(const Rational& t) const {
    if (pieces.empty() || t < breakpoints.front() || t > breakpoints.back()) return 0;
    return pieces[piece_index(*this, t, false)](t);
}

Rational PiecewisePolynomial::left_limit(const Rational& t) const {
    if (pieces.empty() || t <= breakpoints.front() || t > breakpoints.back()) return 0;
    return pieces[piece_index(*this, t, true)](t);
}

Rational PiecewisePolynomial::right_limit(const Rational& t) const {
    if (pieces.empty() || t < breakpoints.front() || t >= breakpoints.back()) return 0;
    return pieces[piece_index(*this, t, false)](t);
}

Rational reduced_volume(const FixedPointData& data, const Rational& s) {
    const int n = data.half_dim;
    Rational total = 0;
    for (const auto& c : data.components) {
        if (c.H <= s) continue;
        if (!c.is_point())
            throw PreconditionError("non-isolated component " + c.id + " above level " + to_string(s));
        Rational num = 1;
        for (int i = 0; i < n - 1; ++i) num *= s - c.H;
        long prod = 1;
        for (int w : c.weights) prod *= w;
        total -= num / prod;
    }
    return total;
}

std::vector<JumpTerm> dh_jump_leading(const std::vector<FixedComponent>& components_at_level, int n) {
    std::vector<JumpTerm> out;
    if (components_at_level.empty()) return out;
    const Rational c = components_at_level.front().H;
    for (const auto& comp : components_at_level) {
        if (comp.H != c) throw PreconditionError("components do not share one level");
        int d = comp.half_codim();
        if (d < 1 || d > n) throw PreconditionError("component " + comp.id + " has wrong codimension");
        Rational vol;
        switch (comp.kind) {
            case ComponentKind::point: vol = 1; break;
            case ComponentKind::surface:
                if (!comp.area) throw PreconditionError("surface " + comp.id + " carries no area");
                vol = *comp.area;
                break;
            case ComponentKind::fourfold: throw PreconditionError("fourfold volume is not part of the data: " + comp.id);
        }
        long denom = 1;
        for (int k = 2; k <= d - 1; ++k) denom *= k;
        for (int w : comp.weights) denom *= w;
        out.push_back({comp.id, vol / denom, d - 1});
    }
    return out;
}

namespace {

// Between critical levels the slice area is quadratic in t and equals half the
// reduced volume, so three samples per interval fix each piece.
PiecewisePolynomial dh_function_toric_3d(const LatticePolytope& P, const CircleDirection& xi) {
    FixedPointData data = fixed_data_from_polytope(P, xi);
    PiecewisePolynomial f;
    for (const auto* c : sorted_by_level(data))
        if (f.breakpoints.empty() || f.breakpoints.back() != c->H) f.breakpoints.push_back(c->H);
    for (size_t i = 0; i + 1 < f.breakpoints.size(); ++i) {
        const Rational& lo = f.breakpoints[i];
        const Rational step = (f.breakpoints[i + 1] - lo) / 4;
        std::array<Rational, 3> ts{lo + step, lo + 2 * step, lo + 3 * step};
        Polynomial piece;
        for (size_t j = 0; j < 3; ++j) {
            Polynomial basis(Rational(reduced_volume(data, ts[j]) / 2));
            for (size_t k = 0; k < 3; ++k)
                if (k != j) {
                    Rational scale = 1 / (ts[j] - ts[k]);
                    basis *= Polynomial(std::vector<Rational>{-ts[k] * scale, scale});
                }
            piece += basis;
        }
        f.pieces.push_back(piece);
    }
    return f;
}

}  // namespace

PiecewisePolynomial dh_function_toric(const LatticePolytope& P, const CircleDirection& xi) {
    if (P.dim() == 3) return dh_function_toric_3d(P, xi);
    if (P.dim() != 2) throw PreconditionError("toric DH function needs a polygon or a 3-dim polytope");
    FixedPointData data = fixed_data_from_polytope(P, xi);

    std::map<Rational, std::vector<FixedComponent>> by_level;
    for (const auto& c : data.components) by_level[c.H].push_back(c);

    // In dimension 4 the jump at c is exact: an isolated point adds (t-c)/(ab),
    // a fixed curve of area A, normal weight w and self-intersection k adds A/w - k(t-c)/w^2.
    PiecewisePolynomial f;
    Polynomial current;
    for (const auto& [level, comps] : by_level) {
        for (const auto& term : dh_jump_leading(comps, 2))
            current += Polynomial(term.coefficient) * Polynomial::shifted_power(level, term.degree);
        for (const auto& comp : comps)
            if (comp.is_surface()) {
                int w = comp.weights.front();
                current -= Polynomial(make_rational(comp.normal_degrees.front(), long(w) * w)) *
                           Polynomial::shifted_power(level, 1);
            }
        f.breakpoints.push_back(level);
        f.pieces.push_back(current);
    }
    if (!f.pieces.back().is_zero()) throw std::logic_error("DH does not vanish past the maximum");
    f.pieces.pop_back();
    if (f.pieces.empty()) throw std::logic_error("DH has a single critical level");
    return f;
}

}  // namespace hamfix

namespace hamfix {

Report fibre_area_bound_check(const LatticePolytope& P, const CircleDirection& xi) {
    if (P.dim() != 2) throw PreconditionError("fibre area bound needs a polygon");
    if (!is_generic(P, xi)) throw PreconditionError("fibre area bound needs a generic direction, got " + xi.to_string());
    PiecewisePolynomial dh = dh_function_toric(P, xi);
    FixedPointData data = fixed_data_from_polytope(P, xi);
    const auto& mn = data.at(extremal(data).first);
    long ab = long(mn.weights[0]) * mn.weights[1];
    const Rational h_min = dh.breakpoints.front();
    // first critical level above the minimum that is not the maximum
    std::optional<Rational> first_inner;
    if (dh.breakpoints.size() > 2) first_inner = dh.breakpoints[1];

    // Both sides are linear between breakpoints, so breakpoints and midpoints suffice.
    std::vector<Rational> probes;
    for (size_t i = 0; i < dh.breakpoints.size(); ++i) {
        probes.push_back(dh.breakpoints[i]);
        if (i + 1 < dh.breakpoints.size()) probes.push_back((dh.breakpoints[i] + dh.breakpoints[i + 1]) / 2);
    }

    Report report;
    std::vector<std::string> over, equality;
    for (const auto& t : probes) {
        Rational bound = (t - h_min) / ab;
        Rational value = dh(t);
        if (value > bound) over.push_back("t=" + to_string(t));
        bool regular = !first_inner || t <= *first_inner;
        bool equal = value == bound;
        if (t > h_min && equal != regular) equality.push_back("t=" + to_string(t));
    }
    if (over.empty())
        report.pass("fibre-area-bound", "DH(min + c) <= c/" + std::to_string(ab));
    else
        report.fail("fibre-area-bound", "DH exceeds c/" + std::to_string(ab), over);
    if (equality.empty())
        report.pass("fibre-area-equality", "equality exactly up to the first interior critical level");
    else
        report.fail("fibre-area-equality", "equality regime does not end at the first interior critical level", equality);
    return report;
}

Report positivity_check(const FixedPointData& data, const std::vector<Rational>& levels) {
    Report report;
    for (const auto& s : levels) {
        std::string check = "reduced-volume@" + to_string(s);
        try {
            Rational v = reduced_volume(data, s);
            if (v > 0)
                report.pass(check, "volume " + to_string(v));
            else
                report.fail(check, "volume " + to_string(v) + " is not positive");
        } catch (const PreconditionError& e) {
            report.inconclusive(check, e.what());
        }
    }
    return report;
}

}  // namespace hamfix
