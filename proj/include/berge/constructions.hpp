#pragma once

#include <cstdint>

#include "berge/hypergraph.hpp"

namespace berge {

inline constexpr std::uint64_t kDefaultSeed = 12345;

// floor(n/r) pairwise disjoint r-sets {1..r}, {r+1..2r}, ...
Hypergraph matching_construction(int n, int r);

// The n-r+1 r-sets sharing the common core {1..r-1}, petals r..n.
Hypergraph sunflower_construction(int n, int r);

// Write n = a(r+t-3) + b with 0 <= b <= r+t-4; components are a cliques on
// r+t-3 consecutive vertices plus one on the last b; edges are all r-sets
// inside a component. Needs r >= 2, t >= 3.
Hypergraph star_clique_construction(int n, int r, int t);

// Add vertex n+1 to every edge: (r+1)-uniform on n+1 vertices.
Hypergraph lift_construction(const Hypergraph& h);

// k parts of sizes ceil(n/k) / floor(n/k), larger parts first, consecutive
// vertex blocks.
Partition balanced_partition(int n, int k);

// All r-sets meeting no part twice, under balanced_partition(n, k); k >= r.
Hypergraph complete_multipartite_construction(int n, int r, int k);

struct RPartiteExtraction {
    Partition parts;
    Hypergraph sub;       // the transversal edges, canonical
    std::uint64_t tries;  // partitions examined
};

// An r-partition keeping at least (r!/r^r) |h| edges transversal. Small
// vertex sets are swept exhaustively (best partition, first in counting
// order); otherwise seeded random assignments improved by single-vertex
// moves, first qualifying local optimum wins.
RPartiteExtraction extract_r_partite(const Hypergraph& h, std::uint64_t seed = kDefaultSeed);

}  // namespace berge
