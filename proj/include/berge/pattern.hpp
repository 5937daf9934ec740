#pragma once

#include <utility>
#include <vector>

#include "berge/hypergraph.hpp"

namespace berge {

// Simple graph used as a forbidden pattern. Wraps a 2-uniform hypergraph and
// caches the counts and flags the detection and bound code branch on.
class PatternGraph {
public:
    explicit PatternGraph(Hypergraph g);
    PatternGraph(int n, const std::vector<std::pair<int, int>>& edges);

    const Hypergraph& graph() const { return g_; }
    int t() const { return g_.n(); }  // |V(F)|, isolated vertices included
    int q() const { return g_.m(); }  // e(F)

    // a star is a graph whose edges all share a vertex (K2 counts)
    bool is_star() const { return star_; }
    bool has_isolated_vertices() const { return isolated_; }

    bool adjacent(int u, int v) const;
    int degree(int v) const { return g_.degree(v); }
    // edges as ordered pairs (a < b), canonical edge-list order
    const std::vector<std::pair<int, int>>& edge_pairs() const { return pairs_; }

    bool operator==(const PatternGraph& o) const { return g_ == o.g_; }

private:
    Hypergraph g_;
    std::vector<std::pair<int, int>> pairs_;
    bool star_ = false;
    bool isolated_ = false;
};

// Restriction to the non-isolated vertices, relabelled 1..t' keeping order.
PatternGraph strip_isolated(const PatternGraph& f);

// Number of s-subsets of V(g) spanning complete subgraphs; s=2 gives e(g).
long long count_cliques(const PatternGraph& g, int s);

// Exact chromatic number by branch and bound; t > cap raises SizeError.
int chromatic_number(const PatternGraph& g, int cap = 12);

// builders shared by the tool and the tests
PatternGraph path_graph(int t);
PatternGraph cycle_graph(int t);
PatternGraph complete_graph(int t);
PatternGraph star_graph(int leaves);     // K_{1,leaves} on leaves+1 vertices
PatternGraph matching_graph(int edges);  // disjoint K2's

}  // namespace berge
