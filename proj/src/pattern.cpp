#include "berge/pattern.hpp"

#include <algorithm>
#include <numeric>

namespace berge {

static Hypergraph pairs_to_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<VertexSet> es;
    es.reserve(edges.size());
    for (auto [a, b] : edges) es.push_back(VertexSet{a, b});
    return Hypergraph(2, n, std::move(es));
}

PatternGraph::PatternGraph(Hypergraph g) : g_(std::move(g)) {
    if (g_.r() != 2) throw UniformityError("pattern must be 2-uniform");
    for (const VertexSet& e : g_.edges())
        pairs_.emplace_back(e.vertices()[0], e.vertices()[1]);
    isolated_ = static_cast<int>(g_.support().size()) != g_.n();
    if (!pairs_.empty()) {
        VertexSet common = g_.edge(0);
        for (int i = 1; i < g_.m(); ++i) common = common.intersect(g_.edge(i));
        star_ = !common.empty();
    }
}

PatternGraph::PatternGraph(int n, const std::vector<std::pair<int, int>>& edges)
    : PatternGraph(pairs_to_graph(n, edges)) {}

bool PatternGraph::adjacent(int u, int v) const {
    if (u == v) return false;
    return g_.has_edge(VertexSet{u, v});
}

PatternGraph strip_isolated(const PatternGraph& f) {
    std::vector<int> keep = f.graph().support();
    std::vector<int> relabel(static_cast<size_t>(f.t()) + 1, 0);
    for (size_t i = 0; i < keep.size(); ++i) relabel[static_cast<size_t>(keep[i])] = static_cast<int>(i) + 1;
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : f.edge_pairs())
        edges.emplace_back(relabel[static_cast<size_t>(a)], relabel[static_cast<size_t>(b)]);
    return PatternGraph(static_cast<int>(keep.size()), edges);
}

// masks[v-1] = neighbourhood bitmask; callers keep t <= 64
static std::vector<std::uint64_t> adjacency_masks(const PatternGraph& g) {
    std::vector<std::uint64_t> adj(static_cast<size_t>(g.t()), 0);
    for (auto [a, b] : g.edge_pairs()) {
        adj[static_cast<size_t>(a) - 1] |= std::uint64_t{1} << (b - 1);
        adj[static_cast<size_t>(b) - 1] |= std::uint64_t{1} << (a - 1);
    }
    return adj;
}

static long long count_cliques_rec(const std::vector<std::uint64_t>& adj, std::uint64_t allowed,
                                   int remaining, int from) {
    if (remaining == 0) return 1;
    long long total = 0;
    for (int v = from; v < static_cast<int>(adj.size()); ++v) {
        if (!((allowed >> v) & 1)) continue;
        total += count_cliques_rec(adj, allowed & adj[static_cast<size_t>(v)], remaining - 1, v + 1);
    }
    return total;
}

long long count_cliques(const PatternGraph& g, int s) {
    if (s < 1) throw ParameterError("clique size must be at least 1");
    if (g.t() > 64) throw SizeError("clique counting capped at 64 vertices");
    if (s > g.t()) return 0;
    std::uint64_t all = g.t() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.t()) - 1;
    return count_cliques_rec(adjacency_masks(g), all, s, 0);
}

static bool colorable(const std::vector<std::uint64_t>& adj, std::vector<int>& color, size_t v,
                      int k) {
    if (v == adj.size()) return true;
    int used_max = 0;
    for (size_t u = 0; u < v; ++u) used_max = std::max(used_max, color[u]);
    // symmetry break: a fresh color is only ever the next unused one
    int limit = std::min(k, used_max + 1);
    for (int c = 1; c <= limit; ++c) {
        bool ok = true;
        for (size_t u = 0; u < v; ++u)
            if (color[u] == c && ((adj[v] >> u) & 1)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        color[v] = c;
        if (colorable(adj, color, v + 1, k)) return true;
        color[v] = 0;
    }
    return false;
}

int chromatic_number(const PatternGraph& g, int cap) {
    if (g.t() > cap)
        throw SizeError("chromatic number capped at " + std::to_string(cap) + " vertices");
    if (g.t() == 0) return 0;
    auto adj = adjacency_masks(g);
    for (int k = 1; k <= g.t(); ++k) {
        std::vector<int> color(static_cast<size_t>(g.t()), 0);
        if (colorable(adj, color, 0, k)) return k;
    }
    return g.t();  // unreachable
}

PatternGraph path_graph(int t) {
    if (t < 1) throw ParameterError("path needs at least 1 vertex");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < t; ++i) edges.emplace_back(i, i + 1);
    return PatternGraph(t, edges);
}

PatternGraph cycle_graph(int t) {
    if (t < 3) throw ParameterError("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < t; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(1, t);
    return PatternGraph(t, edges);
}

PatternGraph complete_graph(int t) {
    if (t < 1) throw ParameterError("complete graph needs at least 1 vertex");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= t; ++i)
        for (int j = i + 1; j <= t; ++j) edges.emplace_back(i, j);
    return PatternGraph(t, edges);
}

PatternGraph star_graph(int leaves) {
    if (leaves < 1) throw ParameterError("star needs at least 1 leaf");
    std::vector<std::pair<int, int>> edges;
    for (int i = 2; i <= leaves + 1; ++i) edges.emplace_back(1, i);
    return PatternGraph(leaves + 1, edges);
}

PatternGraph matching_graph(int edges) {
    if (edges < 1) throw ParameterError("matching needs at least 1 edge");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < edges; ++i) pairs.emplace_back(2 * i + 1, 2 * i + 2);
    return PatternGraph(2 * edges, pairs);
}

}  // namespace berge
