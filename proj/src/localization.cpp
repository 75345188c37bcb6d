#include "hamfix/localization.hpp"

#include <numeric>

namespace hamfix {

long c1_equivariant_sphere(int k, const std::vector<int>& a, const std::vector<int>& b) {
    if (k < 1) throw PreconditionError("sphere action needs k >= 1");
    if (a.size() != b.size()) throw PreconditionError("pole weight lists differ in length");
    long num = -std::accumulate(a.begin(), a.end(), 0L) + std::accumulate(b.begin(), b.end(), 0L);
    if (num % k != 0)
        throw InconsistentDataError("c1 = " + std::to_string(num) + "/" + std::to_string(k) + " is not an integer");
    return num / k;
}

Rational alpha(const FixedComponent& p) {
    if (!p.is_point() || p.weights.size() != 3) throw PreconditionError("alpha needs a point with 3 weights: " + p.id);
    const auto& w = p.weights;
    return make_rational(w[0] + w[1] + w[2], w[0] * w[1] * w[2]);
}

Rational beta(const FixedComponent& s) {
    if (!s.is_surface() || s.weights.size() != 2 || s.normal_degrees.size() != 2)
        throw PreconditionError("beta needs a surface with 2 weights and 2 degrees: " + s.id);
    const auto& w = s.weights;
    const auto& n = s.normal_degrees;
    return make_rational(2 - 2 * s.genus, w[0] * w[1]) - make_rational(n[0], w[0] * w[0]) -
           make_rational(n[1], w[1] * w[1]);
}

Rational abbv_sum_6d(const FixedPointData& data) {
    if (data.half_dim != 3) throw PreconditionError("6-dim sum needs half_dim 3");
    Rational sum = 0;
    for (const auto& c : data.components) {
        switch (c.kind) {
            case ComponentKind::point: sum += alpha(c); break;
            case ComponentKind::surface: sum += beta(c); break;
            case ComponentKind::fourfold: throw PreconditionError("6-dim sum undefined with a fixed fourfold: " + c.id);
        }
    }
    return sum;
}

Rational abbv_sum_4d(const FixedPointData& data) {
    if (data.half_dim != 2) throw PreconditionError("4-dim sum needs half_dim 2");
    Rational sum = 0;
    for (const auto& c : data.components) {
        if (c.is_point()) {
            if (c.weights.size() != 2) throw PreconditionError("point needs 2 weights: " + c.id);
            sum += make_rational(1, c.weights[0] * c.weights[1]);
        } else {
            if (c.normal_degrees.size() != 1) throw PreconditionError("surface needs 1 normal degree: " + c.id);
            sum -= c.normal_degrees[0];
        }
    }
    return sum;
}

WeightSumMismatch::WeightSumMismatch(Rational constant, std::vector<std::pair<std::string, Rational>> residuals)
    : InconsistentDataError("weight-sum formula fails at " + std::to_string(residuals.size()) + " component(s)"),
      constant_(std::move(constant)),
      residuals_(std::move(residuals)) {}

namespace {

Rational weight_sum(const FixedComponent& c) {
    return Rational(std::accumulate(c.weights.begin(), c.weights.end(), 0L));
}

}  // namespace

Normalization weight_sum_normalize(const FixedPointData& data) {
    if (!data.relative_fano) throw PreconditionError("weight-sum normalization needs relative_fano data");
    check_structure(data);
    const auto& mn = data.at(extremal(data).first);
    Rational c = -weight_sum(mn) - mn.H;
    std::vector<std::pair<std::string, Rational>> residuals;
    for (const auto* comp : sorted_by_level(data)) {
        Rational r = -weight_sum(*comp) - (comp->H + c);
        if (r != 0) residuals.emplace_back(comp->id, r);
    }
    if (!residuals.empty()) throw WeightSumMismatch(c, std::move(residuals));
    return {c, shifted(data, c)};
}

Report check_converse_fano(const FixedPointData& data) {
    Report report;
    std::vector<std::string> bad;
    std::string detail;
    for (const auto* c : sorted_by_level(data)) {
        if (index(*c) > 1) continue;
        Rational expected = -weight_sum(*c);
        if (c->H != expected) {
            bad.push_back(c->id);
            if (!detail.empty()) detail += "; ";
            detail += c->id + ": H=" + to_string(c->H) + ", expected " + to_string(expected);
        }
    }
    if (bad.empty())
        report.pass("weight-sum-low-index", "H = -sum(w) at every component with at most one negative weight");
    else
        report.fail("weight-sum-low-index", detail, bad);
    return report;
}

Rational gradient_sphere_area(const GradientEdge& e, const FixedPointData& data) {
    const auto& b = data.at(e.bottom);
    const auto& t = data.at(e.top);
    if (e.weight < 1) throw PreconditionError("edge weight must be positive");
    Rational area = (t.H - b.H) / e.weight;
    if (area <= 0) throw InconsistentDataError("gradient sphere " + e.bottom + "->" + e.top + " has area " + to_string(area));
    return area;
}

Polynomial chi_y(const FixedPointData& data) {
    Polynomial total;
    const Polynomial minus_y(std::vector<Rational>{0, -1});
    for (const auto& c : data.components) {
        Polynomial local;
        switch (c.kind) {
            case ComponentKind::point: local = Polynomial(Rational(1)); break;
            case ComponentKind::surface:
                local = Polynomial(std::vector<Rational>{1 - c.genus, c.genus - 1});
                break;
            case ComponentKind::fourfold:
                if (!c.b2) throw PreconditionError("fourfold without b2: " + c.id);
                local = Polynomial(std::vector<Rational>{1, -*c.b2, 1});
                break;
        }
        for (int i = 0; i < index(c); ++i) local *= minus_y;
        total += local;
    }
    return total;
}

ToddC1C2 todd_and_c1c2(const FixedPointData& data) {
    if (data.half_dim != 3) throw PreconditionError("Todd genus route needs half_dim 3");
    Rational todd = chi_y(data).coefficient(0);
    return {todd, 24 * todd};
}

Rational euler_pairing_at_min(int a, int b) {
    if (a < 1 || b < 1) throw PreconditionError("minimum weights must be positive");
    return make_rational(-1, long(a) * b);
}

}  // namespace hamfix
