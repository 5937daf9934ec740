#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "berge/errors.hpp"

namespace berge {

// Sorted set of 1-based vertex ids. While every id fits below 64 the set
// carries a bitmask, so subset / intersection tests are word-parallel; sets
// with larger ids fall back to merge scans over the sorted vector.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<int> vertices);
    VertexSet(std::initializer_list<int> vertices);

    const std::vector<int>& vertices() const { return verts_; }
    int size() const { return static_cast<int>(verts_.size()); }
    bool empty() const { return verts_.empty(); }

    bool contains(int v) const;
    bool subset_of(const VertexSet& other) const;
    int intersection_size(const VertexSet& other) const;
    VertexSet intersect(const VertexSet& other) const;
    VertexSet unite(const VertexSet& other) const;
    VertexSet with(int v) const;
    VertexSet without(int v) const;

    bool operator==(const VertexSet& o) const { return verts_ == o.verts_; }
    bool operator!=(const VertexSet& o) const { return verts_ != o.verts_; }
    // lexicographic on the sorted ids; this is the edge-list order everywhere
    bool operator<(const VertexSet& o) const { return verts_ < o.verts_; }

    std::string str() const;

private:
    std::vector<int> verts_;  // sorted ascending, distinct
    std::uint64_t mask_ = 0;
    bool mask_ok_ = true;  // all ids <= 64

    void rebuild_mask();
};

// r-uniform edge family on vertex set {1..n}. Canonical form: each edge
// sorted ascending, edge list sorted lexicographically, no duplicates.
class Hypergraph {
public:
    Hypergraph(int r, int n, std::vector<VertexSet> edges);
    static Hypergraph empty(int r, int n) { return Hypergraph(r, n, {}); }

    int r() const { return r_; }
    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<VertexSet>& edges() const { return edges_; }
    const VertexSet& edge(int i) const { return edges_[static_cast<size_t>(i)]; }

    bool has_edge(const VertexSet& e) const;
    int edge_index(const VertexSet& e) const;  // -1 when absent
    int degree(int v) const;
    std::vector<int> support() const;  // non-isolated vertices, ascending

    bool operator==(const Hypergraph& o) const {
        return r_ == o.r_ && n_ == o.n_ && edges_ == o.edges_;
    }

private:
    int r_ = 0;
    int n_ = 0;
    std::vector<VertexSet> edges_;
};

// Assignment of every vertex 1..n to one of the parts 1..k.
struct Partition {
    int k = 0;
    std::vector<int> part;  // part[v-1]

    Partition() = default;
    Partition(int k_, std::vector<int> part_);

    int size() const { return static_cast<int>(part.size()); }
    int part_of(int v) const;
    std::vector<std::vector<int>> groups() const;

    bool operator==(const Partition& o) const { return k == o.k && part == o.part; }
};

// s-uniform family of all s-subsets of edges of h, on the same vertex set.
Hypergraph shadow(const Hypergraph& h, int s);

// Number of edges of h containing s. Vertices outside 1..n lie in no edge.
int codegree(const Hypergraph& h, const VertexSet& s);

// True iff p has exactly r parts and every edge meets each part once.
bool is_r_partite(const Hypergraph& h, const Partition& p);

// Delete the part-s vertex from every edge; duplicate remnants collapse.
// Vertex ids are preserved, so the result lives on the same 1..n.
Hypergraph trace_minus_part(const Hypergraph& h, const Partition& p, int s);

// All k-subsets of set, ascending lexicographic order.
std::vector<VertexSet> subsets_of(const VertexSet& set, int k);

}  // namespace berge
