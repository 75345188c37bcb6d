#pragma once

#include "hamfix/fixed_data.hpp"
#include "hamfix/polynomial.hpp"
#include "hamfix/report.hpp"
#include "hamfix/toric.hpp"

#include <vector>

namespace hamfix {

// pieces[i] is valid on [breakpoints[i], breakpoints[i+1]], written in the
// absolute variable t. Zero outside [front, back].
struct PiecewisePolynomial {
    std::vector<Rational> breakpoints;
    std::vector<Polynomial> pieces;

    // At an interior breakpoint the right-hand piece is used.
    Rational operator()(const Rational& t) const;
    Rational left_limit(const Rational& t) const;
    Rational right_limit(const Rational& t) const;
};

// Integral of omega^(n-1) over the reduced space at level s, from the isolated
// fixed points above s.
Rational reduced_volume(const FixedPointData& data, const Rational& s);

struct JumpTerm {
    std::string id;
    Rational coefficient;
    int degree = 0;
};

// Leading term each component contributes to the jump of DH at its level.
std::vector<JumpTerm> dh_jump_leading(const std::vector<FixedComponent>& components_at_level, int n);

// Lattice length (polygons) or lattice area (3-dim polytopes, generic xi only) of
// the slice <xi,x> = t, as an exact piecewise polynomial.
PiecewisePolynomial dh_function_toric(const LatticePolytope& P, const CircleDirection& xi);

Report fibre_area_bound_check(const LatticePolytope& P, const CircleDirection& xi);

Report positivity_check(const FixedPointData& data, const std::vector<Rational>& levels);

}  // namespace hamfix
