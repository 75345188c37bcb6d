#include "hamfix/graph.hpp"

#include <algorithm>
#include <set>

namespace hamfix {

const GraphVertex* LabelledGraph::find(const std::string& id) const {
    for (const auto& v : vertices)
        if (v.id == id) return &v;
    return nullptr;
}

int LabelledGraph::degree(const std::string& id) const {
    int d = 0;
    for (const auto& e : edges)
        if (e.bottom == id || e.top == id) ++d;
    return d;
}

int LabelledGraph::edge_weight(const std::string& a, const std::string& b) const {
    for (const auto& e : edges)
        if ((e.bottom == a && e.top == b) || (e.bottom == b && e.top == a)) return e.weight;
    return 0;
}

std::vector<std::string> LabelledGraph::neighbours(const std::string& id) const {
    std::vector<std::string> out;
    for (const auto& e : edges) {
        if (e.bottom == id) out.push_back(e.top);
        if (e.top == id) out.push_back(e.bottom);
    }
    std::sort(out.begin(), out.end());
    return out;
}

LabelledGraph LabelledGraph::subgraph(const std::function<bool(const GraphVertex&)>& keep,
                                      const std::function<bool(const GraphEdge&)>& keep_edge) const {
    LabelledGraph out;
    std::set<std::string> kept;
    for (const auto& v : vertices)
        if (keep(v)) {
            out.vertices.push_back(v);
            kept.insert(v.id);
        }
    for (const auto& e : edges)
        if (kept.count(e.bottom) && kept.count(e.top) && (!keep_edge || keep_edge(e))) out.edges.push_back(e);
    if (kept.count(v_min)) out.v_min = v_min;
    if (kept.count(v_max)) out.v_max = v_max;
    return out;
}

std::vector<std::vector<std::string>> LabelledGraph::components() const {
    std::vector<const GraphVertex*> order;
    for (const auto& v : vertices) order.push_back(&v);
    std::sort(order.begin(), order.end(), [](const GraphVertex* a, const GraphVertex* b) {
        return a->H != b->H ? a->H < b->H : a->id < b->id;
    });
    std::map<std::string, int> comp;
    std::vector<std::vector<std::string>> out;
    for (const auto* v : order) {
        if (comp.count(v->id)) continue;
        int c = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<std::string> stack{v->id};
        comp[v->id] = c;
        while (!stack.empty()) {
            std::string u = stack.back();
            stack.pop_back();
            out[c].push_back(u);
            for (const auto& w : neighbours(u))
                if (!comp.count(w)) {
                    comp[w] = c;
                    stack.push_back(w);
                }
        }
    }
    for (auto& ids : out)
        std::sort(ids.begin(), ids.end(), [this](const std::string& a, const std::string& b) {
            const auto* va = find(a);
            const auto* vb = find(b);
            return va->H != vb->H ? va->H < vb->H : a < b;
        });
    return out;
}

LabelledGraph graph_from_data(const FixedPointData& data) {
    LabelledGraph g;
    for (const auto* c : sorted_by_level(data))
        g.vertices.push_back({c->id, c->kind, c->H, c->weights, c->genus, c->fibre_intersection, c->area});
    for (const auto& e : data.edges) g.edges.push_back({e.bottom, e.top, e.weight});
    if (!g.vertices.empty()) {
        g.v_min = g.vertices.front().id;
        g.v_max = g.vertices.back().id;
    }
    return g;
}

std::vector<int> weight_signature(const GraphVertex& v) {
    std::vector<int> w = v.weights;
    std::sort(w.begin(), w.end());
    return w;
}

namespace {

using PairKey = std::pair<std::string, std::string>;

PairKey key(const std::string& a, const std::string& b) { return a < b ? PairKey{a, b} : PairKey{b, a}; }

// Unordered vertex pair -> sorted labels of the edges joining them.
std::map<PairKey, std::vector<int>> adjacency(const LabelledGraph& g, int min_weight) {
    std::map<PairKey, std::vector<int>> adj;
    for (const auto& e : g.edges)
        if (e.weight >= min_weight) adj[key(e.bottom, e.top)].push_back(e.weight);
    for (auto& [k, v] : adj) std::sort(v.begin(), v.end());
    return adj;
}

const std::vector<int>& labels(const std::map<PairKey, std::vector<int>>& adj, const std::string& a,
                               const std::string& b) {
    static const std::vector<int> none;
    auto it = adj.find(key(a, b));
    return it == adj.end() ? none : it->second;
}

int filtered_degree(const std::map<PairKey, std::vector<int>>& adj, const std::string& id) {
    int d = 0;
    for (const auto& [k, v] : adj)
        if (k.first == id || k.second == id) d += static_cast<int>(v.size());
    return d;
}

struct Labelled {
    const GraphVertex* v;
    std::vector<int> sig;
    int degree;
};

bool compatible(const Labelled& a, const Labelled& b, const MatchOptions& opts) {
    if (a.v->H != b.v->H || a.sig != b.sig || a.degree != b.degree) return false;
    if (opts.match_kind && a.v->kind != b.v->kind) return false;
    if (opts.match_genus && a.v->genus != b.v->genus) return false;
    return true;
}

std::vector<Labelled> label_all(const LabelledGraph& g, const std::map<PairKey, std::vector<int>>& adj) {
    std::vector<Labelled> out;
    for (const auto& v : g.vertices) out.push_back({&v, weight_signature(v), filtered_degree(adj, v.id)});
    std::sort(out.begin(), out.end(), [](const Labelled& a, const Labelled& b) {
        return a.v->H != b.v->H ? a.v->H < b.v->H : a.v->id < b.v->id;
    });
    return out;
}

}  // namespace

bool verify_isomorphism(const LabelledGraph& from, const LabelledGraph& to, const VertexMap& map,
                        const MatchOptions& opts) {
    if (from.vertices.size() != to.vertices.size() || map.size() != from.vertices.size()) return false;
    auto adj_from = adjacency(from, opts.min_edge_weight);
    auto adj_to = adjacency(to, opts.min_edge_weight);
    std::set<std::string> image;
    for (const auto& v : from.vertices) {
        auto it = map.find(v.id);
        if (it == map.end()) return false;
        const auto* w = to.find(it->second);
        if (!w || !image.insert(w->id).second) return false;
        if (v.H != w->H || weight_signature(v) != weight_signature(*w)) return false;
        if (opts.match_kind && v.kind != w->kind) return false;
        if (opts.match_genus && v.genus != w->genus) return false;
    }
    size_t from_edges = 0, to_edges = 0;
    for (const auto& [k, v] : adj_from) {
        from_edges += v.size();
        if (labels(adj_to, map.at(k.first), map.at(k.second)) != v) return false;
    }
    for (const auto& [k, v] : adj_to) to_edges += v.size();
    return from_edges == to_edges;
}

std::optional<VertexMap> find_isomorphism(const LabelledGraph& from, const LabelledGraph& to,
                                          const MatchOptions& opts) {
    if (from.vertices.size() != to.vertices.size()) return std::nullopt;
    auto adj_from = adjacency(from, opts.min_edge_weight);
    auto adj_to = adjacency(to, opts.min_edge_weight);
    auto src = label_all(from, adj_from);
    auto dst = label_all(to, adj_to);

    std::vector<std::vector<size_t>> candidates(src.size());
    for (size_t i = 0; i < src.size(); ++i) {
        for (size_t j = 0; j < dst.size(); ++j)
            if (compatible(src[i], dst[j], opts)) candidates[i].push_back(j);
        if (opts.prefer_same_id)
            std::stable_partition(candidates[i].begin(), candidates[i].end(),
                                  [&](size_t j) { return dst[j].v->id == src[i].v->id; });
        if (candidates[i].empty()) return std::nullopt;
    }

    std::vector<int> assigned(src.size(), -1);
    std::vector<bool> used(dst.size(), false);
    std::function<bool(size_t)> extend = [&](size_t i) -> bool {
        if (i == src.size()) return true;
        for (size_t j : candidates[i]) {
            if (used[j]) continue;
            bool ok = true;
            for (size_t k = 0; k < i && ok; ++k)
                ok = labels(adj_from, src[i].v->id, src[k].v->id) ==
                     labels(adj_to, dst[j].v->id, dst[static_cast<size_t>(assigned[k])].v->id);
            if (!ok) continue;
            assigned[i] = static_cast<int>(j);
            used[j] = true;
            if (extend(i + 1)) return true;
            used[j] = false;
            assigned[i] = -1;
        }
        return false;
    };
    if (!extend(0)) return std::nullopt;

    VertexMap map;
    for (size_t i = 0; i < src.size(); ++i) map[src[i].v->id] = dst[static_cast<size_t>(assigned[i])].v->id;
    if (!verify_isomorphism(from, to, map, opts)) return std::nullopt;
    return map;
}

std::optional<VertexMap> find_involution(const LabelledGraph& g, const MatchOptions& opts) {
    auto adj = adjacency(g, opts.min_edge_weight);
    auto verts = label_all(g, adj);
    const size_t n = verts.size();
    std::vector<int> sigma(n, -1);

    auto consistent = [&](size_t i) {
        size_t j = static_cast<size_t>(sigma[i]);
        for (size_t k = 0; k < n; ++k) {
            if (sigma[k] < 0) continue;
            if (labels(adj, verts[i].v->id, verts[k].v->id) !=
                labels(adj, verts[j].v->id, verts[static_cast<size_t>(sigma[k])].v->id))
                return false;
        }
        return true;
    };

    std::function<bool(size_t)> extend = [&](size_t i) -> bool {
        while (i < n && sigma[i] >= 0) ++i;
        if (i == n) {
            for (size_t k = 0; k < n; ++k)
                if (sigma[k] != static_cast<int>(k)) return true;
            return false;
        }
        // Try genuine swaps before fixing i.
        std::vector<size_t> order;
        for (size_t j = 0; j < n; ++j)
            if (j != i && sigma[j] < 0 && compatible(verts[i], verts[j], opts)) order.push_back(j);
        order.push_back(i);
        for (size_t j : order) {
            sigma[i] = static_cast<int>(j);
            sigma[j] = static_cast<int>(i);
            if (consistent(i) && consistent(j) && extend(i + 1)) return true;
            sigma[i] = -1;
            sigma[j] = -1;
        }
        return false;
    };
    if (!extend(0)) return std::nullopt;

    VertexMap map;
    for (size_t i = 0; i < n; ++i) map[verts[i].v->id] = verts[static_cast<size_t>(sigma[i])].v->id;
    if (!verify_isomorphism(g, g, map, opts)) return std::nullopt;
    return map;
}

}  // namespace hamfix
