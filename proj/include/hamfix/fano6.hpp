#pragma once

#include "hamfix/fixed_data.hpp"
#include "hamfix/graph.hpp"
#include "hamfix/report.hpp"
#include "hamfix/toric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hamfix {

struct SurfaceGraph {
    LabelledGraph graph;
    Report report;
};

// Graph of fixed surfaces of 6-dim data joined by isotropy 4-manifolds.
SurfaceGraph surface_graph(const FixedPointData& data);

// Surfaces of positive genus, and surfaces of a given genus.
LabelledGraph positive_genus_part(const LabelledGraph& g);
LabelledGraph genus_part(const LabelledGraph& g, int genus);

// Non-identity involution of a Karshon graph preserving H, weights and labels.
// Graphs with fat (surface) vertices are not Karshon graphs and return false.
bool reflective_check(const LabelledGraph& q);
std::optional<VertexMap> find_reflection(const LabelledGraph& q);
// A reflective graph has weights {1,1} at the minimum and {-1,-1} at the maximum.
Report nonref_check(const LabelledGraph& q);

struct FibreCorrespondence {
    int case_number = 0;  // 1: some surface meets the fibre twice, 2: otherwise
    VertexMap mapping;     // Q vertex -> G vertex
    Report report;
};

FibreCorrespondence fibre_correspondence(const LabelledGraph& g, const LabelledGraph& q);

struct Chain {
    std::vector<std::string> components;
    std::vector<int> weights;  // edge weights, one fewer than components
};

std::vector<Chain> maximal_downward_chains(const FixedPointData& data);

Report chainres_check(const FixedPointData& data);

struct TypeCounts {
    int n_a = 0;
    int n_b = 0;
    int n_c = 0;
    int b2 = 0;  // isolated fixed points, the maximum included
    std::vector<int> max_weights;
    Report report;
};

TypeCounts type_abc_classify(const FixedPointData& data);

struct Row04 {
    std::vector<int> max_weights;
    int n_a = 0;
    int n_b = 0;
    int n_c = 0;
    Rational volume;
    int b2 = 0;
    int total() const { return n_a + n_b + n_c; }
};

struct Table04 {
    std::vector<Row04> rows;
    Report report;
};

// Fano data with a fourfold minimum at H=-1 and the given point counts.
// max_weights is {-1,-1,-1} (max at H=3) or {-2,-1,-1} (max at H=4).
FixedPointData synthetic_04_data(const std::vector<int>& max_weights, int n_a, int n_b, int n_c,
                                 int level0_spheres = 0);

Table04 enumerate_04();

Report semifree_check(const FixedPointData& data);

long c1_of_surface(const FixedComponent& s);

// n_bot + n_top for the isotropy 4-manifold of an edge, from its interior points.
Rational isotropy_degree_sum(const GradientEdge& e);

struct CycleInequality {
    Report report;
    std::optional<std::string> witness;
    std::optional<long> witness_c1;
};

// cycle: surfaces in cyclic order; when absent a cycle of genus-g surfaces in
// the surface graph is used if there is one.
CycleInequality cycle_inequality(const FixedPointData& data,
                                 const std::optional<std::vector<std::string>>& cycle = std::nullopt);

struct SmallHamiltonian {
    Report report;
    std::optional<std::string> witness;
    std::optional<long> witness_c1;
    int genus = 0;
};

SmallHamiltonian small_hamiltonian_suite(const FixedPointData& data);

Report nosphere_check(const FixedPointData& data);

Report sphere_area_vs_fibre(const FixedPointData& data, const LatticePolytope& fibre, const CircleDirection& fibre_xi);

}  // namespace hamfix
