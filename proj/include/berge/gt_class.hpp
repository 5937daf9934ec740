#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "berge/pattern.hpp"

namespace berge {

// One growth step: vertex `apex` was added adjacent to both ends of the
// then-existing edge {x, y}.
struct ApexStep {
    int apex = 0;
    int x = 0;
    int y = 0;
};

// A generated class member together with its growth trace from K2.
// Replaying the trace reproduces the graph exactly.
struct GTMember {
    PatternGraph graph;
    std::vector<ApexStep> trace;
};

// All members on exactly t vertices, one per isomorphism class, ordered by
// canonical code. Level 2 is {K2}; level t apexes every level t-1 member
// over each of its edges and dedupes. t > cap raises SizeError.
std::vector<GTMember> generate_gt(int t, int cap = 9);

// Injection V(g) -> V(host) mapping edges to edges (not induced); first hit
// in deterministic order, nullopt when none. embedding[i-1] hosts vertex i.
std::optional<std::vector<int>> subgraph_embed(const PatternGraph& g, const PatternGraph& host);

struct GTWitness {
    GTMember member;
    std::vector<int> embedding;
};

// Class membership for a pattern with at least one edge. Isolated vertices
// are stripped first; with t surviving vertices it suffices to look for a
// spanning embedding into a member on exactly t vertices. Fast rejections:
// more than 2t-3 edges, or chromatic number above 3.
std::optional<GTWitness> is_in_gt(const PatternGraph& g, int cap = 9);

// f plus one new vertex (id t+1) adjacent to both ends of pattern edge
// {x, y}; the pair must be an edge of f.
PatternGraph f_plus(const PatternGraph& f, int x, int y);

// Isomorphism-invariant code: minimum over all vertex orderings of the
// upper-triangle adjacency bits read column by column (vertex d contributes
// its adjacencies to positions 0..d-1), packed most significant bit first.
std::uint64_t canonical_code(const PatternGraph& g);

}  // namespace berge
