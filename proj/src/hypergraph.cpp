#include "berge/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace berge {

VertexSet::VertexSet(std::vector<int> vertices) : verts_(std::move(vertices)) {
    std::sort(verts_.begin(), verts_.end());
    for (size_t i = 0; i + 1 < verts_.size(); ++i)
        if (verts_[i] == verts_[i + 1])
            throw ParameterError("duplicate vertex " + std::to_string(verts_[i]) +
                                 " in vertex set");
    rebuild_mask();
}

VertexSet::VertexSet(std::initializer_list<int> vertices)
    : VertexSet(std::vector<int>(vertices)) {}

void VertexSet::rebuild_mask() {
    mask_ = 0;
    mask_ok_ = verts_.empty() || (verts_.front() >= 1 && verts_.back() <= 64);
    if (mask_ok_)
        for (int v : verts_) mask_ |= std::uint64_t{1} << (v - 1);
}

bool VertexSet::contains(int v) const {
    if (mask_ok_)
        return v >= 1 && v <= 64 && (mask_ >> (v - 1)) & 1;
    return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool VertexSet::subset_of(const VertexSet& other) const {
    if (mask_ok_ && other.mask_ok_) return (mask_ & ~other.mask_) == 0;
    return std::includes(other.verts_.begin(), other.verts_.end(), verts_.begin(), verts_.end());
}

int VertexSet::intersection_size(const VertexSet& other) const {
    if (mask_ok_ && other.mask_ok_) return std::popcount(mask_ & other.mask_);
    int count = 0;
    size_t i = 0, j = 0;
    while (i < verts_.size() && j < other.verts_.size()) {
        if (verts_[i] < other.verts_[j])
            ++i;
        else if (verts_[i] > other.verts_[j])
            ++j;
        else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

VertexSet VertexSet::intersect(const VertexSet& other) const {
    std::vector<int> out;
    std::set_intersection(verts_.begin(), verts_.end(), other.verts_.begin(), other.verts_.end(),
                          std::back_inserter(out));
    return VertexSet(std::move(out));
}

VertexSet VertexSet::unite(const VertexSet& other) const {
    std::vector<int> out;
    std::set_union(verts_.begin(), verts_.end(), other.verts_.begin(), other.verts_.end(),
                   std::back_inserter(out));
    return VertexSet(std::move(out));
}

VertexSet VertexSet::with(int v) const {
    if (contains(v)) return *this;
    std::vector<int> out = verts_;
    out.insert(std::upper_bound(out.begin(), out.end(), v), v);
    return VertexSet(std::move(out));
}

VertexSet VertexSet::without(int v) const {
    std::vector<int> out;
    out.reserve(verts_.size());
    for (int u : verts_)
        if (u != v) out.push_back(u);
    return VertexSet(std::move(out));
}

std::string VertexSet::str() const {
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < verts_.size(); ++i) {
        if (i) os << ',';
        os << verts_[i];
    }
    os << '}';
    return os.str();
}

Hypergraph::Hypergraph(int r, int n, std::vector<VertexSet> edges)
    : r_(r), n_(n), edges_(std::move(edges)) {
    if (r_ < 1) throw ParameterError("uniformity must be at least 1");
    if (n_ < 0) throw ParameterError("vertex count must be non-negative");
    for (const VertexSet& e : edges_) {
        if (e.size() != r_)
            throw StructureError("edge " + e.str() + " has " + std::to_string(e.size()) +
                                 " vertices, expected " + std::to_string(r_));
        if (!e.empty() && (e.vertices().front() < 1 || e.vertices().back() > n_))
            throw StructureError("edge " + e.str() + " has a vertex outside 1.." +
                                 std::to_string(n_));
    }
    std::sort(edges_.begin(), edges_.end());
    for (size_t i = 0; i + 1 < edges_.size(); ++i)
        if (edges_[i] == edges_[i + 1])
            throw StructureError("duplicate edge " + edges_[i].str());
}

bool Hypergraph::has_edge(const VertexSet& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

int Hypergraph::edge_index(const VertexSet& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || !(*it == e)) return -1;
    return static_cast<int>(it - edges_.begin());
}

int Hypergraph::degree(int v) const {
    int d = 0;
    for (const VertexSet& e : edges_)
        if (e.contains(v)) ++d;
    return d;
}

std::vector<int> Hypergraph::support() const {
    std::vector<char> seen(static_cast<size_t>(n_) + 1, 0);
    for (const VertexSet& e : edges_)
        for (int v : e.vertices()) seen[static_cast<size_t>(v)] = 1;
    std::vector<int> out;
    for (int v = 1; v <= n_; ++v)
        if (seen[static_cast<size_t>(v)]) out.push_back(v);
    return out;
}

Partition::Partition(int k_, std::vector<int> part_) : k(k_), part(std::move(part_)) {
    if (k < 1) throw ParameterError("partition needs at least one part");
    for (size_t i = 0; i < part.size(); ++i)
        if (part[i] < 1 || part[i] > k)
            throw ParameterError("vertex " + std::to_string(i + 1) + " assigned to part " +
                                 std::to_string(part[i]) + ", valid parts are 1.." +
                                 std::to_string(k));
}

int Partition::part_of(int v) const {
    if (v < 1 || v > size()) throw ParameterError("vertex " + std::to_string(v) + " out of range");
    return part[static_cast<size_t>(v) - 1];
}

std::vector<std::vector<int>> Partition::groups() const {
    std::vector<std::vector<int>> g(static_cast<size_t>(k));
    for (int v = 1; v <= size(); ++v) g[static_cast<size_t>(part_of(v)) - 1].push_back(v);
    return g;
}

static void collect_subsets(const std::vector<int>& verts, int k, size_t from,
                            std::vector<int>& cur, std::vector<VertexSet>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.emplace_back(cur);
        return;
    }
    for (size_t i = from; i < verts.size(); ++i) {
        if (verts.size() - i < static_cast<size_t>(k) - cur.size()) break;
        cur.push_back(verts[i]);
        collect_subsets(verts, k, i + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<VertexSet> subsets_of(const VertexSet& set, int k) {
    if (k < 0) throw ParameterError("subset size must be non-negative");
    std::vector<VertexSet> out;
    std::vector<int> cur;
    collect_subsets(set.vertices(), k, 0, cur, out);
    return out;
}

Hypergraph shadow(const Hypergraph& h, int s) {
    if (s < 1 || s > h.r())
        throw ParameterError("shadow arity " + std::to_string(s) + " outside 1.." +
                             std::to_string(h.r()));
    std::vector<VertexSet> out;
    for (const VertexSet& e : h.edges())
        for (VertexSet& sub : subsets_of(e, s)) out.push_back(std::move(sub));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return Hypergraph(s, h.n(), std::move(out));
}

int codegree(const Hypergraph& h, const VertexSet& s) {
    int count = 0;
    for (const VertexSet& e : h.edges())
        if (s.subset_of(e)) ++count;
    return count;
}

bool is_r_partite(const Hypergraph& h, const Partition& p) {
    if (p.k != h.r() || p.size() != h.n()) return false;
    std::vector<char> hit(static_cast<size_t>(p.k) + 1, 0);
    for (const VertexSet& e : h.edges()) {
        std::fill(hit.begin(), hit.end(), 0);
        for (int v : e.vertices()) {
            int part = p.part_of(v);
            if (hit[static_cast<size_t>(part)]) return false;
            hit[static_cast<size_t>(part)] = 1;
        }
    }
    return true;
}

Hypergraph trace_minus_part(const Hypergraph& h, const Partition& p, int s) {
    if (s < 1 || s > p.k)
        throw ParameterError("part index " + std::to_string(s) + " outside 1.." +
                             std::to_string(p.k));
    if (!is_r_partite(h, p))
        throw StructureError("host is not r-partite under the given partition");
    std::vector<VertexSet> out;
    for (const VertexSet& e : h.edges()) {
        std::vector<int> rest;
        for (int v : e.vertices())
            if (p.part_of(v) != s) rest.push_back(v);
        out.emplace_back(std::move(rest));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return Hypergraph(h.r() - 1, h.n(), std::move(out));
}

}  // namespace berge
