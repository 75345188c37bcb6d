#pragma once

#include "hamfix/fixed_data.hpp"
#include "hamfix/polynomial.hpp"
#include "hamfix/report.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hamfix {

// First Chern number of a rank-r equivariant bundle over the sphere with
// action z[z0:z1] = [z^k z0 : z1], fibre weights a at [1:0] and b at [0:1].
long c1_equivariant_sphere(int k, const std::vector<int>& a, const std::vector<int>& b);

// Local contributions to the 6-dim localisation sum.
Rational alpha(const FixedComponent& p);
Rational beta(const FixedComponent& s);

Rational abbv_sum_6d(const FixedPointData& data);
Rational abbv_sum_4d(const FixedPointData& data);

// Thrown when no single shift makes H(F) = -sum of weights at every component.
class WeightSumMismatch : public InconsistentDataError {
public:
    WeightSumMismatch(Rational constant, std::vector<std::pair<std::string, Rational>> residuals);
    const Rational& constant() const { return constant_; }
    // -sum(w) - (H + c) per component, zero entries omitted
    const std::vector<std::pair<std::string, Rational>>& residuals() const { return residuals_; }

private:
    Rational constant_;
    std::vector<std::pair<std::string, Rational>> residuals_;
};

struct Normalization {
    Rational constant;
    FixedPointData data;
};

// The shift is pinned at the minimum; every other component must agree.
Normalization weight_sum_normalize(const FixedPointData& data);

// H(F) = -sum(w) at every component with at most one negative weight.
Report check_converse_fano(const FixedPointData& data);

Rational gradient_sphere_area(const GradientEdge& e, const FixedPointData& data);

Polynomial chi_y(const FixedPointData& data);

struct ToddC1C2 {
    Rational todd;
    Rational c1c2;
};
ToddC1C2 todd_and_c1c2(const FixedPointData& data);

Rational euler_pairing_at_min(int a, int b);

}  // namespace hamfix
