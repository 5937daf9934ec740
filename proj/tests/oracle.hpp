#pragma once

// Definition-level brute-force checkers, kept deliberately independent from
// the library's search code: no degree ordering, no matching, no canonical
// codes. Everything here enumerates raw maps.

#include <cstdint>
#include <random>
#include <vector>

#include "berge/detect.hpp"
#include "berge/hypergraph.hpp"
#include "berge/pattern.hpp"

namespace oracle {

// all injective base maps x all injective edge assignments
bool contains(const berge::Hypergraph& host, const berge::PatternGraph& f, berge::BergeMode mode);

// plain subgraph test, injections in natural vertex order
bool subgraph(const berge::PatternGraph& g, const berge::PatternGraph& host);

bool iso(const berge::PatternGraph& a, const berge::PatternGraph& b);

// max K_s count over f-free graphs, all 2^(n choose 2) graphs
long long ex_clique(int n, int s, const berge::PatternGraph& f);

// max edge count over (induced-)Berge-f-free families, all 2^(n choose r)
long long ex_berge(int n, int r, const berge::PatternGraph& f, berge::BergeMode mode);

// every maximum free family, canonical edge lists, enumeration order
std::vector<berge::Hypergraph> ex_berge_witnesses(int n, int r, const berge::PatternGraph& f,
                                                  berge::BergeMode mode);

// class members on t vertices up to isomorphism, grown by definition and
// deduplicated by pairwise permutation tests
std::vector<berge::PatternGraph> gt_members(int t);

// g appears as a (not necessarily spanning) subgraph of a member on s
// vertices for some s <= cap
bool in_gt(const berge::PatternGraph& g, int cap);

// labelled tree on seq.size()+2 vertices
berge::PatternGraph tree_from_pruefer(const std::vector<int>& seq);

// m distinct r-sets on [n], chosen by the generator; m is clamped to C(n,r)
berge::Hypergraph random_hypergraph(std::mt19937_64& rng, int r, int n, int m);

berge::PatternGraph random_graph(std::mt19937_64& rng, int n, int m);

}  // namespace oracle
