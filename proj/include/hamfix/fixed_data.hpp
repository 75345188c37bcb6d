#pragma once

#include "hamfix/rational.hpp"
#include "hamfix/report.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hamfix {

enum class ComponentKind { point, surface, fourfold };

const char* to_string(ComponentKind k);
ComponentKind parse_kind(std::string_view s);  // StructuralError on unknown kind

struct FixedComponent {
    std::string id;
    ComponentKind kind = ComponentKind::point;
    Rational H;
    std::vector<int> weights;          // nonzero normal weights
    int genus = 0;                     // surfaces only
    std::vector<int> normal_degrees;   // parallel to weights
    std::optional<Rational> area;
    std::optional<int> b2;
    std::optional<int> fibre_intersection;  // 6-dim surfaces: 0, 1 or 2
    bool fibre_class = false;               // sphere known to lie in the fibre class

    bool is_point() const { return kind == ComponentKind::point; }
    bool is_surface() const { return kind == ComponentKind::surface; }
    int half_codim() const { return static_cast<int>(weights.size()); }
};

struct GradientEdge {
    std::string bottom;
    std::string top;
    int weight = 1;
    // Weight pairs at the isolated fixed points inside an isotropy 4-manifold,
    // already divided by the edge weight.
    std::optional<std::vector<std::array<int, 2>>> interior;
};

struct FixedPointData {
    int half_dim = 3;
    std::vector<FixedComponent> components;
    std::vector<GradientEdge> edges;
    bool relative_fano = false;
    bool fano = false;

    const FixedComponent* find(std::string_view id) const;
    const FixedComponent& at(std::string_view id) const;  // StructuralError if absent
};

// Number of strictly negative weights (the Morse index is twice this).
int index(const FixedComponent& c);

// Throws StructuralError on anything that prevents interpreting the data.
void check_structure(const FixedPointData& data);

// Structural problems throw; every semantic violation becomes a failing finding.
// An empty report means the data passes.
Report validate(const FixedPointData& data);

// (min id, max id); throws InconsistentDataError on a tie.
std::pair<std::string, std::string> extremal(const FixedPointData& data);

// Components sorted by (H, id).
std::vector<const FixedComponent*> sorted_by_level(const FixedPointData& data);

// The same data for the inverse circle action: H -> -H, weights negated,
// edges reoriented.
FixedPointData reversed(const FixedPointData& data);

// Shift every H by c.
FixedPointData shifted(const FixedPointData& data, const Rational& c);

}  // namespace hamfix
