#include "berge/gt_class.hpp"

#include <algorithm>
#include <map>

namespace berge {

namespace {

std::vector<std::uint64_t> adjacency_masks(const PatternGraph& g) {
    std::vector<std::uint64_t> adj(static_cast<size_t>(g.t()), 0);
    for (auto [a, b] : g.edge_pairs()) {
        adj[static_cast<size_t>(a) - 1] |= std::uint64_t{1} << (b - 1);
        adj[static_cast<size_t>(b) - 1] |= std::uint64_t{1} << (a - 1);
    }
    return adj;
}

struct Canonicalizer {
    const std::vector<std::uint64_t>& adj;
    int t;
    int total_bits;
    std::uint64_t best;
    std::vector<int> perm;       // position -> original vertex (0-based)
    std::vector<char> used;

    Canonicalizer(const std::vector<std::uint64_t>& adj_, int t_)
        : adj(adj_), t(t_), total_bits(t_ * (t_ - 1) / 2), best(~std::uint64_t{0}),
          perm(static_cast<size_t>(t_)), used(static_cast<size_t>(t_), 0) {}

    // depth d places position d; value holds the bits of positions 1..d-1
    void rec(int d, std::uint64_t value, int bits) {
        if (d == t) {
            best = std::min(best, value);
            return;
        }
        for (int v = 0; v < t; ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            std::uint64_t row = 0;
            for (int j = 0; j < d; ++j)
                row = (row << 1) | ((adj[static_cast<size_t>(v)] >> perm[static_cast<size_t>(j)]) & 1);
            std::uint64_t next = (value << d) | row;
            int next_bits = bits + d;
            // compare against the best prefix of the same length
            if (best != ~std::uint64_t{0} && next > (best >> (total_bits - next_bits))) continue;
            used[static_cast<size_t>(v)] = 1;
            perm[static_cast<size_t>(d)] = v;
            rec(d + 1, next, next_bits);
            used[static_cast<size_t>(v)] = 0;
        }
    }
};

PatternGraph apex_onto(const PatternGraph& g, int x, int y) {
    std::vector<std::pair<int, int>> edges = g.edge_pairs();
    edges.emplace_back(x, g.t() + 1);
    edges.emplace_back(y, g.t() + 1);
    return PatternGraph(g.t() + 1, edges);
}

}  // namespace

std::uint64_t canonical_code(const PatternGraph& g) {
    if (g.t() > 11) throw SizeError("canonical code capped at 11 vertices");
    if (g.t() <= 1) return 0;
    auto adj = adjacency_masks(g);
    Canonicalizer c(adj, g.t());
    c.rec(0, 0, 0);
    return c.best;
}

std::vector<GTMember> generate_gt(int t, int cap) {
    if (t < 2) throw ParameterError("class levels start at 2 vertices");
    if (t > cap) throw SizeError("class generation capped at " + std::to_string(cap) + " vertices");

    std::vector<GTMember> level;
    level.push_back({PatternGraph(2, {{1, 2}}), {}});
    for (int size = 3; size <= t; ++size) {
        std::map<std::uint64_t, GTMember> next;  // keyed by canonical code
        for (const GTMember& m : level) {
            for (auto [x, y] : m.graph.edge_pairs()) {
                PatternGraph grown = apex_onto(m.graph, x, y);
                std::uint64_t code = canonical_code(grown);
                if (next.count(code)) continue;
                std::vector<ApexStep> trace = m.trace;
                trace.push_back({size, x, y});
                next.emplace(code, GTMember{std::move(grown), std::move(trace)});
            }
        }
        level.clear();
        for (auto& [code, member] : next) level.push_back(std::move(member));
    }
    return level;
}

namespace {

struct EmbedSearch {
    const PatternGraph& g;
    const PatternGraph& host;
    std::vector<int> order;  // g vertices, descending degree then id
    std::vector<int> image;  // g vertex -> host vertex, 0 unassigned
    std::vector<char> used;

    EmbedSearch(const PatternGraph& g_, const PatternGraph& host_) : g(g_), host(host_) {
        order.resize(static_cast<size_t>(g.t()));
        for (int v = 1; v <= g.t(); ++v) order[static_cast<size_t>(v) - 1] = v;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
        image.assign(static_cast<size_t>(g.t()) + 1, 0);
        used.assign(static_cast<size_t>(host.t()) + 1, 0);
    }

    bool rec(size_t pos) {
        if (pos == order.size()) return true;
        int v = order[pos];
        for (int w = 1; w <= host.t(); ++w) {
            if (used[static_cast<size_t>(w)]) continue;
            if (host.degree(w) < g.degree(v)) continue;
            bool ok = true;
            for (int u = 1; u <= g.t() && ok; ++u)
                if (image[static_cast<size_t>(u)] != 0 && g.adjacent(v, u) &&
                    !host.adjacent(w, image[static_cast<size_t>(u)]))
                    ok = false;
            if (!ok) continue;
            image[static_cast<size_t>(v)] = w;
            used[static_cast<size_t>(w)] = 1;
            if (rec(pos + 1)) return true;
            image[static_cast<size_t>(v)] = 0;
            used[static_cast<size_t>(w)] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> subgraph_embed(const PatternGraph& g, const PatternGraph& host) {
    if (g.t() > host.t()) return std::nullopt;
    if (g.q() > host.q()) return std::nullopt;
    EmbedSearch s(g, host);
    if (!s.rec(0)) return std::nullopt;
    return std::vector<int>(s.image.begin() + 1, s.image.end());
}

std::optional<GTWitness> is_in_gt(const PatternGraph& g, int cap) {
    if (g.q() == 0) throw PatternError("pattern has no edges");
    PatternGraph pat = g.has_isolated_vertices() ? strip_isolated(g) : g;
    int t = pat.t();
    if (t > cap) throw SizeError("membership test capped at " + std::to_string(cap) + " vertices");
    if (pat.q() > 2 * t - 3) return std::nullopt;
    if (chromatic_number(pat, std::max(cap, t)) > 3) return std::nullopt;
    // a member on exactly t vertices must host a spanning copy; smaller
    // levels never need checking
    for (const GTMember& m : generate_gt(t, cap)) {
        auto embedding = subgraph_embed(pat, m.graph);
        if (embedding) return GTWitness{m, *embedding};
    }
    return std::nullopt;
}

PatternGraph f_plus(const PatternGraph& f, int x, int y) {
    if (!f.adjacent(x, y))
        throw ParameterError("{" + std::to_string(x) + "," + std::to_string(y) +
                             "} is not a pattern edge");
    return apex_onto(f, x, y);
}

}  // namespace berge
