#pragma once

#include "hamfix/fixed_data.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hamfix {

struct GraphVertex {
    std::string id;
    ComponentKind kind = ComponentKind::point;
    Rational H;
    std::vector<int> weights;
    int genus = 0;
    std::optional<int> fibre_intersection;
    std::optional<Rational> area;
};

// Oriented bottom -> top, H(bottom) < H(top).
struct GraphEdge {
    std::string bottom;
    std::string top;
    int weight = 1;
};

// Vertex id in the source graph -> vertex id in the target graph.
using VertexMap = std::map<std::string, std::string>;

class LabelledGraph {
public:
    std::vector<GraphVertex> vertices;
    std::vector<GraphEdge> edges;
    std::string v_min;
    std::string v_max;

    const GraphVertex* find(const std::string& id) const;
    int degree(const std::string& id) const;
    // Label of the edge joining a and b in either orientation, 0 if none.
    int edge_weight(const std::string& a, const std::string& b) const;
    std::vector<std::string> neighbours(const std::string& id) const;

    // Keeps vertices passing keep and edges between kept vertices passing keep_edge.
    LabelledGraph subgraph(const std::function<bool(const GraphVertex&)>& keep,
                           const std::function<bool(const GraphEdge&)>& keep_edge = {}) const;

    // Vertex id sets of the connected components, each sorted by (H, id).
    std::vector<std::vector<std::string>> components() const;
};

// Every component becomes a vertex, every edge is kept.
LabelledGraph graph_from_data(const FixedPointData& data);

// Sorted weight multiset, the isomorphism-relevant vertex label.
std::vector<int> weight_signature(const GraphVertex& v);

struct MatchOptions {
    bool match_kind = true;
    bool match_genus = false;
    // Only edges with label >= this count; lower labels are ignored on both sides.
    int min_edge_weight = 1;
    // Try the identically named target first, so matching copies map to themselves.
    bool prefer_same_id = true;
};

// Bijective vertex map preserving H, weight multisets and labelled edges.
std::optional<VertexMap> find_isomorphism(const LabelledGraph& from, const LabelledGraph& to,
                                          const MatchOptions& opts = {});

// Independent re-check of a claimed isomorphism.
bool verify_isomorphism(const LabelledGraph& from, const LabelledGraph& to, const VertexMap& map,
                        const MatchOptions& opts = {});

// A non-identity automorphism of order two, if one exists.
std::optional<VertexMap> find_involution(const LabelledGraph& g, const MatchOptions& opts = {});

}  // namespace hamfix
