#pragma once

#include "hamfix/fixed_data.hpp"
#include "hamfix/graph.hpp"
#include "hamfix/report.hpp"

#include <string>
#include <vector>

namespace hamfix {

using IntVec = std::vector<long>;

long dot(const IntVec& a, const IntVec& b);
IntVec primitive(const IntVec& v);  // divide by gcd; zero vector rejected

struct PolytopeEdge {
    size_t a = 0;
    size_t b = 0;
    IntVec direction;  // primitive, from vertex a towards vertex b
    long length = 0;   // lattice length
};

struct Facet {
    IntVec normal;  // primitive inward normal u
    long offset = 0;  // <u, x> >= -offset
    std::vector<size_t> vertices;
};

class LatticePolytope {
public:
    // Convex hull of the given points; non-vertices and duplicates are dropped.
    // Throws PreconditionError if the hull is not full-dimensional.
    static LatticePolytope from_points(int dim, const std::vector<IntVec>& points);

    int dim() const { return dim_; }
    // 2-dim: counterclockwise, starting at the lexicographically smallest vertex.
    // 3-dim: lexicographic order.
    const std::vector<IntVec>& vertices() const { return vertices_; }
    // 2-dim: edge i joins vertex i to vertex i+1 (cyclically).
    const std::vector<PolytopeEdge>& edges() const { return edges_; }
    // 2-dim: facet i is edge i.
    const std::vector<Facet>& facets() const { return facets_; }

    // Indices of edges at vertex v, directions pointing away from v.
    std::vector<std::pair<size_t, IntVec>> edges_at(size_t v) const;

private:
    int dim_ = 0;
    std::vector<IntVec> vertices_;
    std::vector<PolytopeEdge> edges_;
    std::vector<Facet> facets_;
};

class CircleDirection {
public:
    explicit CircleDirection(IntVec xi);  // PreconditionError unless primitive and nonzero
    const IntVec& xi() const { return xi_; }
    size_t dim() const { return xi_.size(); }
    CircleDirection flipped() const;
    std::string to_string() const;  // "(a,b)"

private:
    IntVec xi_;
};

bool delzant_check(const LatticePolytope& P);
// Throws PreconditionError unless the origin is interior.
bool reflexive_check(const LatticePolytope& P);

// True iff no edge direction is orthogonal to xi.
bool is_generic(const LatticePolytope& P, const CircleDirection& xi);

FixedPointData fixed_data_from_polytope(const LatticePolytope& P, const CircleDirection& xi);

// Self-intersection of the boundary divisor over edge i of a Delzant polygon.
long boundary_selfint_2d(const LatticePolytope& P, size_t edge);

struct CatalogEntry {
    std::string name;
    LatticePolytope polytope;
    int b2 = 0;
    int degree = 0;
};

const std::vector<CatalogEntry>& delpezzo_catalog();
// Throws PreconditionError for an unknown name.
const CatalogEntry& catalog_entry(const std::string& name);

// Vertices are the fixed components (surfaces appear as fat vertices), edges
// are the non-fixed polygon edges labelled by |<xi,d>|.
LabelledGraph karshon_graph(const LatticePolytope& P, const CircleDirection& xi);

Report delpezzo_lemma_suite(const LatticePolytope& P, const CircleDirection& xi);

// Primitive vectors with max-norm <= bound whose first nonzero entry is
// positive, in lexicographic order.
std::vector<CircleDirection> primitive_directions(int dim, int bound);

struct ScanItem {
    CircleDirection xi;
    FixedPointData data;
    Report report;
};

// 3-dim polytopes skip directions that are not generic.
std::vector<ScanItem> scan_directions(const LatticePolytope& P, int bound);

}  // namespace hamfix
