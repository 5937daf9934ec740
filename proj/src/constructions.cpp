#include "berge/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace berge {

Hypergraph matching_construction(int n, int r) {
    if (r < 1) throw ParameterError("uniformity must be at least 1");
    if (n < r) throw SizeError("need at least r vertices");
    std::vector<VertexSet> edges;
    for (int start = 1; start + r - 1 <= n; start += r) {
        std::vector<int> e(static_cast<size_t>(r));
        std::iota(e.begin(), e.end(), start);
        edges.emplace_back(std::move(e));
    }
    return Hypergraph(r, n, std::move(edges));
}

Hypergraph sunflower_construction(int n, int r) {
    if (r < 1) throw ParameterError("uniformity must be at least 1");
    if (n < r) throw SizeError("need at least r vertices");
    std::vector<int> cores(static_cast<size_t>(r) - 1);
    std::iota(cores.begin(), cores.end(), 1);
    std::vector<VertexSet> edges;
    for (int petal = r; petal <= n; ++petal) {
        std::vector<int> e = cores;
        e.push_back(petal);
        edges.emplace_back(std::move(e));
    }
    return Hypergraph(r, n, std::move(edges));
}

static void all_r_sets_of_block(int lo, int hi, int r, std::vector<int>& cur,
                                std::vector<VertexSet>& out) {
    if (static_cast<int>(cur.size()) == r) {
        out.emplace_back(cur);
        return;
    }
    for (int v = lo; v <= hi; ++v) {
        if (hi - v + 1 < r - static_cast<int>(cur.size())) break;
        cur.push_back(v);
        all_r_sets_of_block(v + 1, hi, r, cur, out);
        cur.pop_back();
    }
}

Hypergraph star_clique_construction(int n, int r, int t) {
    if (r < 2) throw ParameterError("uniformity must be at least 2");
    if (t < 3) throw ParameterError("star parameter must be at least 3");
    if (n < 0) throw ParameterError("vertex count must be non-negative");
    int block = r + t - 3;
    std::vector<VertexSet> edges;
    std::vector<int> cur;
    int start = 1;
    while (start + block - 1 <= n) {
        all_r_sets_of_block(start, start + block - 1, r, cur, edges);
        start += block;
    }
    all_r_sets_of_block(start, n, r, cur, edges);  // the remainder block
    return Hypergraph(r, n, std::move(edges));
}

Hypergraph lift_construction(const Hypergraph& h) {
    int fresh = h.n() + 1;
    std::vector<VertexSet> edges;
    edges.reserve(static_cast<size_t>(h.m()));
    for (const VertexSet& e : h.edges()) edges.push_back(e.with(fresh));
    return Hypergraph(h.r() + 1, fresh, std::move(edges));
}

Partition balanced_partition(int n, int k) {
    if (k < 1) throw ParameterError("need at least one part");
    if (n < 0) throw ParameterError("vertex count must be non-negative");
    std::vector<int> part;
    part.reserve(static_cast<size_t>(n));
    int big = n % k;                   // parts 1..big get the extra vertex
    int small_size = n / k;
    for (int p = 1; p <= k; ++p) {
        int size = small_size + (p <= big ? 1 : 0);
        for (int i = 0; i < size; ++i) part.push_back(p);
    }
    return Partition(k, std::move(part));
}

static void transversal_r_sets(const std::vector<std::vector<int>>& groups, int r, size_t from,
                               std::vector<int>& cur, std::vector<VertexSet>& out) {
    if (static_cast<int>(cur.size()) == r) {
        out.emplace_back(cur);
        return;
    }
    for (size_t g = from; g < groups.size(); ++g) {
        if (groups.size() - g < static_cast<size_t>(r) - cur.size()) break;
        for (int v : groups[g]) {
            cur.push_back(v);
            transversal_r_sets(groups, r, g + 1, cur, out);
            cur.pop_back();
        }
    }
}

Hypergraph complete_multipartite_construction(int n, int r, int k) {
    if (r < 1) throw ParameterError("uniformity must be at least 1");
    if (k < r) throw ParameterError("need at least r parts");
    Partition parts = balanced_partition(n, k);
    std::vector<VertexSet> edges;
    std::vector<int> cur;
    transversal_r_sets(parts.groups(), r, 0, cur, edges);
    return Hypergraph(r, n, std::move(edges));
}

namespace {

long long transversal_count(const Hypergraph& h, const std::vector<int>& part) {
    long long count = 0;
    unsigned seen = 0;
    for (const VertexSet& e : h.edges()) {
        seen = 0;
        bool ok = true;
        for (int v : e.vertices()) {
            unsigned bit = 1u << part[static_cast<size_t>(v) - 1];
            if (seen & bit) {
                ok = false;
                break;
            }
            seen |= bit;
        }
        if (ok) ++count;
    }
    return count;
}

RPartiteExtraction finish(const Hypergraph& h, std::vector<int> part, std::uint64_t tries) {
    int r = h.r();
    std::vector<VertexSet> sub;
    for (const VertexSet& e : h.edges()) {
        unsigned seen = 0;
        bool ok = true;
        for (int v : e.vertices()) {
            unsigned bit = 1u << part[static_cast<size_t>(v) - 1];
            if (seen & bit) {
                ok = false;
                break;
            }
            seen |= bit;
        }
        if (ok) sub.push_back(e);
    }
    std::vector<int> labels(part.begin(), part.end());
    for (int& p : labels) ++p;  // 0-based digits to parts 1..r
    return {Partition(r, std::move(labels)), Hypergraph(r, h.n(), std::move(sub)), tries};
}

}  // namespace

RPartiteExtraction extract_r_partite(const Hypergraph& h, std::uint64_t seed) {
    int r = h.r();
    if (r < 2) throw UniformityError("extraction needs uniformity at least 2");
    int n = h.n();
    long long m = h.m();

    unsigned long long rf = 1, rr = 1;
    for (int i = 1; i <= r; ++i) rf *= static_cast<unsigned long long>(i);
    for (int i = 0; i < r; ++i) rr *= static_cast<unsigned long long>(r);
    // keep >= (r!/r^r) m transversal edges, compared in integers
    auto qualifies = [&](long long count) {
        return static_cast<unsigned long long>(count) * rr >=
               rf * static_cast<unsigned long long>(m);
    };

    // small hosts: sweep every assignment and keep the best (first in
    // counting order); the average over all assignments already meets the
    // fraction, so the maximum does
    double space = std::pow(static_cast<double>(r), n);
    if (space <= 100000.0) {
        std::vector<int> part(static_cast<size_t>(n), 0), best_part;
        long long best = -1;
        std::uint64_t tries = 0;
        for (;;) {
            ++tries;
            long long c = transversal_count(h, part);
            if (c > best) {
                best = c;
                best_part = part;
            }
            int i = 0;
            while (i < n && part[static_cast<size_t>(i)] == r - 1) part[static_cast<size_t>(i++)] = 0;
            if (i == n) break;
            ++part[static_cast<size_t>(i)];
        }
        return finish(h, best_part, tries);
    }

    std::mt19937_64 rng(seed);
    std::uint64_t tries = 0;
    for (int restart = 0; restart < 100000; ++restart) {
        std::vector<int> part(static_cast<size_t>(n));
        for (int& p : part) p = static_cast<int>(rng() % static_cast<std::uint64_t>(r));
        ++tries;
        long long cur = transversal_count(h, part);
        // steepest single-vertex moves until a local optimum
        bool improved = true;
        while (improved) {
            improved = false;
            for (int v = 0; v < n && !improved; ++v) {
                int old = part[static_cast<size_t>(v)];
                for (int p = 0; p < r; ++p) {
                    if (p == old) continue;
                    part[static_cast<size_t>(v)] = p;
                    long long c = transversal_count(h, part);
                    if (c > cur) {
                        cur = c;
                        improved = true;
                        break;
                    }
                    part[static_cast<size_t>(v)] = old;
                }
            }
        }
        if (qualifies(cur)) return finish(h, part, tries);
    }
    throw Error("r-partite extraction did not reach the guaranteed fraction");
}

}  // namespace berge
